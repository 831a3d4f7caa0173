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

#include "sepdec/decompose.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace sepdec {

namespace {

ComplexMatrix hermitian(const ComplexMatrix &m) {
    return (m + m.adjoint()) * 0.5;
}

double positive_trace(const ComplexMatrix &tuple) {
    double trace = tuple.trace().real();
    if (!(trace > 0)) {
        throw Error(ErrorCode::NumericalFailure, "joint eigenspace with non-positive tuple trace");
    }
    return trace;
}

void check_residual(CanonicalDecomposition &c, const BipartiteMatrix &target, const Tolerances &tol) {
    c.residual = relative_residual(c.reassemble().mat(), target.mat());
    if (c.residual > tol.recon) {
        throw Error(
            ErrorCode::NumericalFailure,
            "canonical decomposition reconstructs T only to relative residual " + format_number(c.residual));
    }
}

/// Maps a side-B decomposition of swap_sides(T) back onto T.
CanonicalDecomposition swap_back(CanonicalDecomposition swapped) {
    CanonicalDecomposition result;
    result.side = Side::A;
    result.m = swapped.n;
    result.n = swapped.m;
    result.orthogonal = swapped.orthogonal;
    result.residual = swapped.residual;
    for (ProductTerm &term : swapped.terms) {
        result.terms.push_back({std::move(term.b), std::move(term.a), std::move(term.projection)});
    }
    return result;
}

}  // namespace

const char *side_name(Side side) {
    return side == Side::A ? "A" : "B";
}

BipartiteMatrix CanonicalDecomposition::reassemble() const {
    ComplexMatrix sum = ComplexMatrix::Zero(m * n, m * n);
    for (const ProductTerm &term : terms) {
        sum += kron(term.a, term.b);
    }
    return BipartiteMatrix(m, n, std::move(sum));
}

void canonicalize(CanonicalDecomposition &decomposition, const Tolerances &tol) {
    Side side = decomposition.side;
    std::stable_sort(
        decomposition.terms.begin(), decomposition.terms.end(), [&](const ProductTerm &x, const ProductTerm &y) {
            return side == Side::B ? lexicographic_less(x.a, y.a, tol.cluster)
                                   : lexicographic_less(x.b, y.b, tol.cluster);
        });
}

CanonicalDecomposition b_orthogonal_form(const BipartiteMatrix &t, const Tolerances &tol) {
    BipartiteMatrix state = validated_state(t, tol);
    BlockGrid grid = blocks(state);
    FamilyCheck check = is_commuting_normal_family(grid, tol);
    if (!check.ok) {
        throw Error(ErrorCode::NotBOrthogonal, "blocks of T are not normal and commuting", check.diagnostics);
    }
    JointEigenstructure joint = joint_eigenspaces(grid, tol);

    CanonicalDecomposition result;
    result.side = Side::B;
    result.m = t.m();
    result.n = t.n();
    result.orthogonal = true;
    for (size_t g = 0; g < joint.size(); g++) {
        double trace = positive_trace(joint.tuples[g]);
        result.terms.push_back({hermitian(joint.tuples[g]) / trace, joint.projections[g] * trace, joint.projections[g]});
    }
    check_residual(result, state, tol);
    canonicalize(result, tol);
    return result;
}

CanonicalDecomposition orthogonal_form(const BipartiteMatrix &t, Side side, const Tolerances &tol) {
    if (side == Side::B) {
        return b_orthogonal_form(t, tol);
    }
    try {
        return swap_back(b_orthogonal_form(swap_sides(t), tol));
    } catch (const Error &e) {
        if (e.code() == ErrorCode::NotBOrthogonal && e.diagnostics().has_value()) {
            throw Error(
                ErrorCode::NotAOrthogonal, "blocks of the side-swapped T are not normal and commuting",
                *e.diagnostics());
        }
        throw;
    }
}

CanonicalDecomposition b_independent_form(const BipartiteMatrix &t, const Tolerances &tol) {
    BipartiteMatrix state = validated_state(t, tol);
    FilteredPair fp = local_filter_B(state, tol);
    BlockGrid grid = blocks(fp.t_tilde);
    FamilyCheck check = is_commuting_normal_family(grid, tol);
    if (!check.ok) {
        throw Error(ErrorCode::NotBIndependent, "filtered blocks are not normal and commuting", check.diagnostics);
    }
    JointEigenstructure joint = joint_eigenspaces(grid, tol);

    size_t n = t.n();
    double support_error = (joint.support - fp.p_b).norm();
    if (support_error > tol.recon * std::sqrt((double)n)) {
        throw Error(
            ErrorCode::NumericalFailure,
            "joint eigenspaces do not exhaust the support of T_B (error " + format_number(support_error) + ")");
    }

    ComplexMatrix root = psd_sqrt(fp.t_b, tol);
    CanonicalDecomposition result;
    result.side = Side::B;
    result.m = t.m();
    result.n = n;
    for (size_t g = 0; g < joint.size(); g++) {
        double trace = positive_trace(joint.tuples[g]);
        ComplexMatrix b = hermitian(root * joint.projections[g] * root) * trace;
        result.terms.push_back({hermitian(joint.tuples[g]) / trace, std::move(b), joint.projections[g]});
    }
    check_residual(result, state, tol);
    canonicalize(result, tol);
    return result;
}

CanonicalDecomposition independent_form(const BipartiteMatrix &t, Side side, const Tolerances &tol) {
    if (side == Side::B) {
        return b_independent_form(t, tol);
    }
    try {
        return swap_back(b_independent_form(swap_sides(t), tol));
    } catch (const Error &e) {
        if (e.code() == ErrorCode::NotBIndependent && e.diagnostics().has_value()) {
            throw Error(
                ErrorCode::NotAIndependent, "filtered blocks of the side-swapped T are not normal and commuting",
                *e.diagnostics());
        }
        throw;
    }
}

ComplexMatrix orthogonalizing_filter(const std::vector<ComplexMatrix> &family, const Tolerances &tol) {
    if (family.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty family");
    }
    ComplexMatrix sum = ComplexMatrix::Zero(family[0].rows(), family[0].cols());
    for (const ComplexMatrix &b : family) {
        if (b.rows() != sum.rows() || b.cols() != sum.cols()) {
            throw Error(ErrorCode::ShapeMismatch, "family members differ in size");
        }
        sum += b;
    }
    return psd_power(sum, -0.5, tol);
}

bool images_independent(const std::vector<ComplexMatrix> &family, const Tolerances &tol) {
    if (family.empty()) {
        return true;
    }
    ComplexMatrix sum = ComplexMatrix::Zero(family[0].rows(), family[0].cols());
    size_t total = 0;
    for (const ComplexMatrix &b : family) {
        double norm = b.norm();
        if (norm == 0) {
            continue;
        }
        total += rank_tol(b, tol);
        sum += b / norm;
    }
    return rank_tol(sum, tol) == total;
}

bool images_disjoint(const ComplexMatrix &a, const ComplexMatrix &b, const Tolerances &tol) {
    return images_independent({a, b}, tol);
}

PureProductDecomposition pure_product_decomposition(const CanonicalDecomposition &c, const Tolerances &tol) {
    PureProductDecomposition result;
    for (const ProductTerm &term : c.terms) {
        HermitianEigenSystem ea = herm_eig(term.a, tol);
        HermitianEigenSystem eb = herm_eig(term.b, tol);
        size_t ra = support_size(ea, tol);
        size_t rb = support_size(eb, tol);
        for (size_t i = 0; i < ra; i++) {
            for (size_t k = 0; k < rb; k++) {
                result.terms.push_back({ea.values[i] * eb.values[k], ea.vectors.col(i), eb.vectors.col(k)});
            }
        }
    }
    result.unique = is_unique_pure_decomposition(c, tol);
    return result;
}

bool is_unique_pure_decomposition(const CanonicalDecomposition &c, const Tolerances &tol) {
    for (const ProductTerm &term : c.terms) {
        if (rank_tol(term.a, tol) != 1 || rank_tol(term.b, tol) != 1) {
            return false;
        }
    }
    return true;
}

const char *verdict_name(MarginalRankVerdict verdict) {
    switch (verdict) {
        case MarginalRankVerdict::Separable:
            return "Separable";
        case MarginalRankVerdict::Entangled:
            return "Entangled";
        case MarginalRankVerdict::NotMarginalRank:
            return "NotMarginalRank";
    }
    return "Unknown";
}

MarginalRankResult marginal_rank_separability(const BipartiteMatrix &t, const Tolerances &tol) {
    BipartiteMatrix state = validated_state(t, tol);
    MarginalRankResult result;
    result.rank_t = rank_tol(state.mat(), tol);
    result.rank_t_b = rank_tol(partial_trace_A(state), tol);
    if (result.rank_t != result.rank_t_b) {
        result.verdict = MarginalRankVerdict::NotMarginalRank;
        return result;
    }
    try {
        result.decomposition = b_independent_form(state, tol);
        result.verdict = MarginalRankVerdict::Separable;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::NotBIndependent) {
            throw;
        }
        result.verdict = MarginalRankVerdict::Entangled;
        result.diagnostics = e.diagnostics();
    }
    return result;
}

double partial_transpose_min_eigenvalue(const BipartiteMatrix &t, const Tolerances &tol) {
    HermitianEigenSystem eig = herm_eig(partial_transpose_B(t).mat(), tol);
    return eig.values[eig.values.size() - 1];
}

bool ppt_check(const BipartiteMatrix &t, const Tolerances &tol) {
    HermitianEigenSystem eig = herm_eig(partial_transpose_B(t).mat(), tol);
    double smallest = eig.values[eig.values.size() - 1];
    double largest = std::max(std::abs(eig.values[0]), std::abs(smallest));
    return smallest >= -tol.psd * largest;
}

const char *face_mode_name(FaceMode mode) {
    switch (mode) {
        case FaceMode::DisjointA:
            return "disjoint_A";
        case FaceMode::RankOneA:
            return "rank_one_A";
        case FaceMode::None:
            return "none";
    }
    return "unknown";
}

FaceReport face_summary(const CanonicalDecomposition &c, const Tolerances &tol) {
    FaceReport report;
    std::vector<ComplexMatrix> independent_factors;
    for (size_t g = 0; g < c.p(); g++) {
        independent_factors.push_back(c.independent(g));
    }
    if (!images_independent(independent_factors, tol)) {
        return report;
    }

    std::vector<size_t> ranks_a;
    bool all_rank_one = true;
    for (size_t g = 0; g < c.p(); g++) {
        ranks_a.push_back(rank_tol(c.normalized(g), tol));
        all_rank_one = all_rank_one && ranks_a.back() == 1;
    }

    if (all_rank_one) {
        // Group terms whose unit-trace factors project onto the same line.
        std::vector<ComplexMatrix> lines;
        std::vector<ComplexMatrix> merged;
        for (size_t g = 0; g < c.p(); g++) {
            const ComplexMatrix &a = c.normalized(g);
            double weight = a.trace().real();
            ComplexMatrix line = a / weight;
            size_t k = 0;
            while (k < lines.size() && (lines[k] - line).norm() > tol.cluster) {
                k++;
            }
            if (k == lines.size()) {
                lines.push_back(line);
                merged.push_back(ComplexMatrix::Zero(c.independent(g).rows(), c.independent(g).cols()));
                report.summands.push_back({});
            }
            merged[k] += weight * c.independent(g);
            report.summands[k].terms.push_back(g);
        }
        for (size_t k = 0; k < merged.size(); k++) {
            FaceSummand &s = report.summands[k];
            s.rank_a = 1;
            s.rank_b = rank_tol(merged[k], tol);
            s.face_dim = s.rank_b * s.rank_b - 1;
        }
        report.mode = FaceMode::RankOneA;
        report.prerequisites_met = true;
        return report;
    }

    for (size_t x = 0; x < c.p(); x++) {
        for (size_t y = x + 1; y < c.p(); y++) {
            if (!images_disjoint(c.normalized(x), c.normalized(y), tol)) {
                return report;
            }
        }
    }
    for (size_t g = 0; g < c.p(); g++) {
        report.summands.push_back({ranks_a[g], rank_tol(c.independent(g), tol), std::nullopt, {g}});
    }
    report.mode = FaceMode::DisjointA;
    report.prerequisites_met = true;
    return report;
}

}  // namespace sepdec
