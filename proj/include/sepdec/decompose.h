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

#ifndef SEPDEC_DECOMPOSE_H
#define SEPDEC_DECOMPOSE_H

#include <cstddef>
#include <optional>
#include <vector>

#include "sepdec/jointdiag.h"

namespace sepdec {

enum class Side { A, B };

const char *side_name(Side side);

/// One summand a (x) b of a separable decomposition, a acting on C^m and b on
/// C^n. `projection` is the joint-eigenspace projection behind the term (on
/// the independent side) when the term came out of the canonical pipeline.
struct ProductTerm {
    ComplexMatrix a;
    ComplexMatrix b;
    ComplexMatrix projection;
};

/// T = sum_g a_g (x) b_g.
///
/// For side B the a_g have unit trace and are pairwise distinct, and the b_g
/// have independent images. For side A the roles of the two factors are
/// exchanged. `orthogonal` marks decompositions whose independent factors are
/// positive multiples of mutually orthogonal projections.
struct CanonicalDecomposition {
    Side side = Side::B;
    size_t m = 0;
    size_t n = 0;
    bool orthogonal = false;
    std::vector<ProductTerm> terms;
    double residual = 0;

    size_t p() const {
        return terms.size();
    }
    /// The unit-trace factor of term g.
    const ComplexMatrix &normalized(size_t g) const {
        return side == Side::B ? terms[g].a : terms[g].b;
    }
    /// The factor of term g carrying an independent image.
    const ComplexMatrix &independent(size_t g) const {
        return side == Side::B ? terms[g].b : terms[g].a;
    }
    BipartiteMatrix reassemble() const;
};

/// Sorts the terms lexicographically by their unit-trace factor.
void canonicalize(CanonicalDecomposition &decomposition, const Tolerances &tol = {});

/// Canonical form of a B-orthogonal T from the joint eigenspaces of its blocks.
/// Throws NotBOrthogonal with diagnostics when the blocks are not normal and
/// commuting.
CanonicalDecomposition b_orthogonal_form(const BipartiteMatrix &t, const Tolerances &tol = {});

/// Side A runs b_orthogonal_form on swap_sides(T); failures are NotAOrthogonal.
CanonicalDecomposition orthogonal_form(const BipartiteMatrix &t, Side side, const Tolerances &tol = {});

/// Unique decomposition of a B-independent T with unit-trace distinct a_g and
/// independent b_g, obtained by filtering T and diagonalizing the filtered
/// blocks. Throws NotBIndependent with diagnostics otherwise.
CanonicalDecomposition b_independent_form(const BipartiteMatrix &t, const Tolerances &tol = {});

/// Side A runs the B pipeline on swap_sides(T); failures are NotAIndependent.
CanonicalDecomposition independent_form(const BipartiteMatrix &t, Side side, const Tolerances &tol = {});

/// ((sum_g B_g)^#)^{1/2}. Conjugating a family with independent images by it
/// yields orthogonal projections summing to the support projection.
ComplexMatrix orthogonalizing_filter(const std::vector<ComplexMatrix> &family, const Tolerances &tol = {});

/// rank(sum_g B_g) == sum_g rank(B_g), with each B_g normalized first so the
/// relative rank cutoff treats all members alike.
bool images_independent(const std::vector<ComplexMatrix> &family, const Tolerances &tol = {});

/// dim(im A cap im B) == 0.
bool images_disjoint(const ComplexMatrix &a, const ComplexMatrix &b, const Tolerances &tol = {});

struct PureProductTerm {
    double weight = 0;
    ComplexVector x;  // unit vector in C^m
    ComplexVector y;  // unit vector in C^n
};

struct PureProductDecomposition {
    std::vector<PureProductTerm> terms;
    bool unique = false;
};

/// Splits every factor spectrally into rank-one projections.
PureProductDecomposition pure_product_decomposition(const CanonicalDecomposition &c, const Tolerances &tol = {});

/// True iff every factor of every term has rank one.
bool is_unique_pure_decomposition(const CanonicalDecomposition &c, const Tolerances &tol = {});

enum class MarginalRankVerdict { Separable, Entangled, NotMarginalRank };

const char *verdict_name(MarginalRankVerdict verdict);

struct MarginalRankResult {
    MarginalRankVerdict verdict = MarginalRankVerdict::NotMarginalRank;
    size_t rank_t = 0;
    size_t rank_t_b = 0;
    std::optional<CanonicalDecomposition> decomposition;
    std::optional<FamilyDiagnostics> diagnostics;
};

/// Separability test for states with rank T == rank T_B.
MarginalRankResult marginal_rank_separability(const BipartiteMatrix &t, const Tolerances &tol = {});

/// Smallest eigenvalue of the partial transpose of T.
double partial_transpose_min_eigenvalue(const BipartiteMatrix &t, const Tolerances &tol = {});

/// True iff the partial transpose is PSD within tol.psd.
bool ppt_check(const BipartiteMatrix &t, const Tolerances &tol = {});

enum class FaceMode { DisjointA, RankOneA, None };

const char *face_mode_name(FaceMode mode);

/// rank_a and rank_b refer to the unit-trace and independent factors
/// respectively (the A and B sides of a side-B decomposition).
struct FaceSummand {
    size_t rank_a = 0;
    size_t rank_b = 0;
    std::optional<size_t> face_dim;
    std::vector<size_t> terms;  // indices of the decomposition terms merged here
};

struct FaceReport {
    bool prerequisites_met = false;
    FaceMode mode = FaceMode::None;
    std::vector<FaceSummand> summands;
};

/// Structure of the face of the separable states generated by the decomposed
/// state. Independent factors must have independent images. When every
/// unit-trace factor has rank one, terms sharing the same line are merged and
/// each summand's face is a full state space of dimension rank_b^2 - 1.
/// Otherwise, pairwise disjoint unit-trace images give a direct convex sum of
/// per-term faces whose dimension is not computed.
FaceReport face_summary(const CanonicalDecomposition &c, const Tolerances &tol = {});

}  // namespace sepdec

#endif
