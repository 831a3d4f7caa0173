// Copyright 2026 The sepdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEPDEC_JOINTDIAG_H
#define SEPDEC_JOINTDIAG_H

#include <vector>

#include "sepdec/bipartite.h"

namespace sepdec {

struct FamilyCheck {
    bool ok = false;
    FamilyDiagnostics diagnostics;
};

/// Checks that every block is normal and every pair of blocks commutes.
/// Thresholds use the grid scale (largest block norm) for the floor, so
/// numerically-zero blocks never trip the test. On failure the diagnostics
/// name the worst non-normal block, or when all blocks are normal the worst
/// non-commuting pair.
FamilyCheck is_commuting_normal_family(const BlockGrid &grid, const Tolerances &tol = {});

/// Joint eigenspaces of a commuting normal block family.
///
/// projections[g] is the orthogonal projection Q_g and tuples[g](i, j) the
/// eigenvalue of block (i, j) on im Q_g. The joint zero eigenspace is not
/// included, so support = sum_g Q_g. Entries are ordered lexicographically by
/// the tuple read row-major, comparing real then imaginary parts with a
/// tolerance of tol.cluster * scale.
struct JointEigenstructure {
    std::vector<ComplexMatrix> projections;
    std::vector<ComplexMatrix> tuples;
    std::vector<ComplexMatrix> bases;  // orthonormal columns spanning im Q_g
    ComplexMatrix support;
    double scale = 0;

    size_t size() const {
        return projections.size();
    }
};

/// Throws NotCommutingFamily (with diagnostics) when the family check fails.
/// Eigenvalues closer than the clustering threshold tol.cluster * scale are
/// merged. ClusterAmbiguity is raised when the result sits within a decade of
/// that threshold: two joint eigenvalue tuples closer than ten times it, or a
/// merged cluster whose blocks deviate from scalars by more than a tenth of it.
JointEigenstructure joint_eigenspaces(const BlockGrid &grid, const Tolerances &tol = {});

/// Tolerance-aware lexicographic comparison of two equally sized matrices read
/// row-major, real part before imaginary part. Entries closer than `epsilon`
/// compare equal.
bool lexicographic_less(const ComplexMatrix &a, const ComplexMatrix &b, double epsilon);

}  // namespace sepdec

#endif
