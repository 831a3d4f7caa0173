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

#include "sepdec/jointdiag.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

namespace sepdec {

namespace {

constexpr double kAbsoluteFloor = 1e-300;

/// The family is closed under adjoints, so the Hermitian and anti-Hermitian
/// parts of each block generate the same joint eigenspaces and only need a
/// Hermitian eigensolver.
std::vector<ComplexMatrix> hermitian_generators(const BlockGrid &grid) {
    std::vector<ComplexMatrix> result;
    const Complex two_i(0, 2);
    for (size_t i = 0; i < grid.m(); i++) {
        for (size_t j = i; j < grid.m(); j++) {
            const ComplexMatrix &b = grid.at(i, j);
            result.push_back((b + b.adjoint()) * 0.5);
            if (i != j) {
                result.push_back((b - b.adjoint()) / two_i);
            }
        }
    }
    return result;
}

void throw_ambiguity(const char *what, double value, double threshold) {
    char buffer[160];
    std::snprintf(
        buffer, sizeof(buffer), "%s %.3e is within a decade of the clustering threshold %.3e", what, value, threshold);
    throw Error(ErrorCode::ClusterAmbiguity, buffer);
}

/// Splits the subspace spanned by `basis` into eigenvalue clusters of the
/// compression of `generator`.
std::vector<ComplexMatrix> split_subspace(const ComplexMatrix &basis, const ComplexMatrix &generator, double threshold) {
    if (basis.cols() == 1) {
        return {basis};
    }
    ComplexMatrix compression = basis.adjoint() * generator * basis;
    compression = (compression + compression.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(compression);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "eigensolver failed on a subspace compression");
    }
    const RealVector &values = solver.eigenvalues();
    std::vector<ComplexMatrix> pieces;
    Eigen::Index start = 0;
    for (Eigen::Index k = 1; k <= values.size(); k++) {
        bool cut = k == values.size();
        if (!cut) {
            cut = values[k] - values[k - 1] > threshold;
        }
        if (cut) {
            pieces.push_back(basis * solver.eigenvectors().middleCols(start, k - start));
            start = k;
        }
    }
    return pieces;
}

double max_part(const ComplexMatrix &tuple) {
    double result = 0;
    for (Eigen::Index k = 0; k < tuple.size(); k++) {
        result = std::max({result, std::abs(tuple.data()[k].real()), std::abs(tuple.data()[k].imag())});
    }
    return result;
}

}  // namespace

FamilyCheck is_commuting_normal_family(const BlockGrid &grid, const Tolerances &tol) {
    FamilyCheck result;
    double scale = grid.scale();
    double floor = tol.floor * scale * scale;
    size_t m = grid.m();

    double worst = 0;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            const ComplexMatrix &b = grid.at(i, j);
            double norm = b.norm();
            double defect = normality_defect(b);
            double relative = defect / (tol.normal * std::max({norm * norm, floor, kAbsoluteFloor}));
            if (relative > 1 && relative > worst) {
                worst = relative;
                result.diagnostics = {FamilyDefect::NonNormal, {i + 1, j + 1}, {i + 1, j + 1}, defect, relative};
            }
        }
    }
    if (result.diagnostics.defect != FamilyDefect::None) {
        return result;
    }

    for (size_t p = 0; p < m * m; p++) {
        for (size_t q = p + 1; q < m * m; q++) {
            const ComplexMatrix &a = grid.at(p / m, p % m);
            const ComplexMatrix &b = grid.at(q / m, q % m);
            double defect = commutator_defect(a, b);
            double relative = defect / (tol.commute * std::max({a.norm() * b.norm(), floor, kAbsoluteFloor}));
            if (relative > 1 && relative > worst) {
                worst = relative;
                result.diagnostics = {
                    FamilyDefect::NonCommuting, {p / m + 1, p % m + 1}, {q / m + 1, q % m + 1}, defect, relative};
            }
        }
    }
    result.ok = result.diagnostics.defect == FamilyDefect::None;
    return result;
}

bool lexicographic_less(const ComplexMatrix &a, const ComplexMatrix &b, double epsilon) {
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            Complex x = a(i, j);
            Complex y = b(i, j);
            if (std::abs(x.real() - y.real()) > epsilon) {
                return x.real() < y.real();
            }
            if (std::abs(x.imag() - y.imag()) > epsilon) {
                return x.imag() < y.imag();
            }
        }
    }
    return false;
}

JointEigenstructure joint_eigenspaces(const BlockGrid &grid, const Tolerances &tol) {
    FamilyCheck check = is_commuting_normal_family(grid, tol);
    if (!check.ok) {
        throw Error(ErrorCode::NotCommutingFamily, "block family is not normal and commuting", check.diagnostics);
    }

    size_t m = grid.m();
    size_t n = grid.n();
    JointEigenstructure result;
    result.scale = grid.scale();
    result.support = ComplexMatrix::Zero(n, n);
    if (result.scale == 0) {
        return result;
    }
    double threshold = tol.cluster * result.scale;

    std::vector<ComplexMatrix> subspaces{ComplexMatrix::Identity(n, n)};
    for (const ComplexMatrix &generator : hermitian_generators(grid)) {
        std::vector<ComplexMatrix> refined;
        for (const ComplexMatrix &basis : subspaces) {
            for (ComplexMatrix &piece : split_subspace(basis, generator, threshold)) {
                refined.push_back(std::move(piece));
            }
        }
        subspaces = std::move(refined);
    }

    struct Entry {
        ComplexMatrix basis;
        ComplexMatrix tuple;
    };
    std::vector<Entry> entries;
    for (ComplexMatrix &basis : subspaces) {
        double d = (double)basis.cols();
        ComplexMatrix tuple(m, m);
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < m; j++) {
                tuple(i, j) = (basis.adjoint() * grid.at(i, j) * basis).trace() / d;
            }
        }
        double magnitude = max_part(tuple);
        if (magnitude >= 0.1 * threshold && magnitude <= 10 * threshold) {
            throw_ambiguity("joint eigenvalue magnitude", magnitude, threshold);
        }
        if (magnitude < 0.1 * threshold) {
            continue;  // joint zero eigenspace
        }
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < m; j++) {
                double residual = (grid.at(i, j) * basis - tuple(i, j) * basis).norm();
                if (residual > 0.1 * threshold * std::sqrt(d)) {
                    throw_ambiguity("spread of a merged eigenvalue cluster", residual / std::sqrt(d), threshold);
                }
                if (residual > tol.recon * result.scale) {
                    throw Error(
                        ErrorCode::NumericalFailure,
                        "block (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") does not act as a scalar on a joint eigenspace (residual " + format_number(residual) +
                            ")");
                }
            }
        }
        for (const Entry &other : entries) {
            double distance = max_part(other.tuple - tuple);
            if (distance <= 10 * threshold) {
                throw_ambiguity("distance between joint eigenvalue tuples", distance, threshold);
            }
        }
        entries.push_back({std::move(basis), std::move(tuple)});
    }

    std::stable_sort(entries.begin(), entries.end(), [&](const Entry &a, const Entry &b) {
        return lexicographic_less(a.tuple, b.tuple, threshold);
    });
    for (Entry &e : entries) {
        ComplexMatrix q = e.basis * e.basis.adjoint();
        q = (q + q.adjoint()) * 0.5;
        result.support += q;
        result.projections.push_back(std::move(q));
        result.tuples.push_back(std::move(e.tuple));
        result.bases.push_back(std::move(e.basis));
    }
    return result;
}

}  // namespace sepdec
