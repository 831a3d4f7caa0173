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

// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.h"
#include "sepdec/generators.h"

using namespace sepdec;

namespace {

constexpr double kRecoveryResidual = 1e-9;
constexpr double kTermMatch = 1e-7;
constexpr double kRecoverySeconds = 30;
constexpr double kNegativeEigenvalue = -1e-3;
constexpr double kFilterIdentity = 1e-10;
constexpr double kOrthogonalProjections = 1e-9;
constexpr double kChannelAction = 1e-9;
constexpr double kProjectionDistance = 1e-8;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int number, const char *title, const Outcome &o) {
    std::printf("criterion %d [%s] %s: %s\n", number, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) failures++;
}

std::string sci(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2e", x);
    return buffer;
}

/// Runs f, turning an unexpected exception into a failure message.
template <typename F>
bool guarded(F &&f, std::string &error) {
    try {
        f();
        return true;
    } catch (const std::exception &e) {
        error = e.what();
        return false;
    }
}

double max_term_error(const CanonicalDecomposition &got, const CanonicalDecomposition &want) {
    if (got.p() != want.p()) return INFINITY;
    double worst = 0;
    for (size_t g = 0; g < got.p(); g++) {
        worst = std::max(worst, (got.terms[g].a - want.terms[g].a).norm());
        worst = std::max(worst, (got.terms[g].b - want.terms[g].b).norm());
    }
    return worst;
}

/// Random B ranks with sum <= n, each 1 or 2, at least one term.
std::vector<size_t> mixed_ranks(size_t n, Rng &rng) {
    std::vector<size_t> ranks;
    size_t left = n;
    size_t target = 1 + rng.index(n);
    while (left > 0 && ranks.size() < target) {
        size_t r = std::min<size_t>(left, 1 + rng.index(2));
        ranks.push_back(r);
        left -= r;
    }
    return ranks;
}

Outcome round_trip_recovery() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    int recovered = 0;
    double worst_residual = 0;
    double worst_term = 0;
    std::string error;
    for (uint64_t seed = 0; seed < 200; seed++) {
        size_t m = 2 + seed % 3;
        size_t n = 2 + (seed / 3) % 3;
        Rng rng(seed ^ 0x5eed);
        std::vector<size_t> ranks = mixed_ranks(n, rng);
        std::vector<size_t> a_ranks;
        for (size_t k = 0; k < ranks.size(); k++) a_ranks.push_back(1 + rng.index(m));
        bool ok = guarded([&] {
            GeneratedInstance inst = generate_b_independent(m, n, ranks, seed, a_ranks);
            CanonicalDecomposition c = b_independent_form(inst.t);
            double term = max_term_error(c, inst.truth);
            worst_residual = std::max(worst_residual, c.residual);
            worst_term = std::max(worst_term, term);
            if (c.residual <= kRecoveryResidual && term <= kTermMatch) recovered++;
        }, error);
        (void)ok;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.pass = recovered == 200 && seconds < kRecoverySeconds;
    o.detail = std::to_string(recovered) + "/200 recovered, max residual " + sci(worst_residual) + " (<= " +
               sci(kRecoveryResidual) + "), max term error " + sci(worst_term) + " (<= " + sci(kTermMatch) + "), " +
               sci(seconds) + " s (< 30 s)" + (error.empty() ? "" : "; last error: " + error);
    return o;
}

Outcome uniqueness() {
    Outcome o;
    int matched = 0;
    double worst = 0;
    std::string error;
    for (uint64_t seed = 0; seed < 50; seed++) {
        size_t m = 2 + seed % 3;
        size_t n = 2 + (seed / 3) % 3;
        Rng rng(seed ^ 0xfeed);
        std::vector<size_t> ranks = mixed_ranks(n, rng);
        guarded([&] {
            GeneratedInstance inst = generate_b_independent(m, n, ranks, 1000 + seed);
            std::vector<ProductTerm> terms = inst.truth.terms;
            for (size_t k = terms.size(); k > 1; k--) std::swap(terms[k - 1], terms[rng.index(k)]);
            ComplexMatrix t = ComplexMatrix::Zero(m * n, m * n);
            for (const ProductTerm &term : terms) {
                double c = rng.uniform(0.1, 10);
                t += oracle::kron(c * term.a, term.b / c);
            }
            CanonicalDecomposition again = b_independent_form(BipartiteMatrix(m, n, t));
            CanonicalDecomposition original = b_independent_form(inst.t);
            double err = std::max(max_term_error(again, inst.truth), max_term_error(again, original));
            worst = std::max(worst, err);
            if (err <= kTermMatch) matched++;
        }, error);
    }
    o.pass = matched == 50;
    o.detail = std::to_string(matched) + "/50 identical canonical lists, max deviation " + sci(worst) + " (<= " +
               sci(kTermMatch) + ")" + (error.empty() ? "" : "; last error: " + error);
    return o;
}

Outcome negative_controls() {
    Outcome o;
    int rejected = 0;
    int npt = 0;
    double least_negative = -INFINITY;
    std::vector<BipartiteMatrix> states{bell_state()};
    for (uint64_t seed = 0; seed < 50; seed++) {
        size_t m = 2 + seed % 3;
        size_t n = 2 + (seed / 3) % 3;
        size_t r = 2 + seed % (std::min(m, n) - 1);
        states.push_back(generate_entangled_pure(m, n, r, seed).t);
    }
    for (const BipartiteMatrix &t : states) {
        try {
            b_independent_form(t);
        } catch (const Error &e) {
            bool named = e.code() == ErrorCode::NotBIndependent && e.diagnostics().has_value() &&
                         e.diagnostics()->defect != FamilyDefect::None;
            if (named) rejected++;
        }
        double smallest = oracle::min_eigenvalue(oracle::partial_transpose_B(t.mat(), t.m(), t.n()));
        least_negative = std::max(least_negative, smallest);
        if (!ppt_check(t) && smallest <= kNegativeEigenvalue) npt++;
    }
    size_t total = states.size();
    o.pass = rejected == (int)total && npt == (int)total;
    o.detail = std::to_string(rejected) + "/" + std::to_string(total) + " rejected with a named block, " +
               std::to_string(npt) + "/" + std::to_string(total) + " fail PPT, largest partial-transpose minimum " +
               sci(least_negative) + " (<= " + sci(kNegativeEigenvalue) + ")";
    return o;
}

Outcome filter_identities() {
    Outcome o;
    double worst_marginal = 0;
    double worst_reconstruct = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        Rng rng(seed ^ 0xf117);
        size_t m = 1 + rng.index(4);
        size_t n = 1 + rng.index(4);
        size_t rank = 1 + rng.index(m * n);
        ComplexMatrix g = random_ginibre(m * n, rank, rng);
        BipartiteMatrix t(m, n, g * g.adjoint());
        FilteredPair fp = local_filter_B(t);
        ComplexMatrix support = oracle::span_projection(oracle::partial_trace_A(t.mat(), m, n));
        double marginal = (oracle::partial_trace_A(fp.t_tilde.mat(), m, n) - support).norm();
        double back = relative_residual(reconstruct(fp).mat(), t.mat());
        worst_marginal = std::max(worst_marginal, marginal);
        worst_reconstruct = std::max(worst_reconstruct, back);
    }
    o.pass = worst_marginal <= kFilterIdentity && worst_reconstruct <= kFilterIdentity;
    o.detail = "100 states, max ||tr_A T~ - P_B|| " + sci(worst_marginal) + ", max reconstruction residual " +
               sci(worst_reconstruct) + " (both <= " + sci(kFilterIdentity) + ")";
    return o;
}

Outcome orthogonalizing_filter_check() {
    Outcome o;
    double worst_product = 0;
    double worst_sum = 0;
    for (uint64_t seed = 0; seed < 50; seed++) {
        Rng rng(seed ^ 0x0f11);
        size_t n = 2 + rng.index(5);
        ComplexMatrix frame;
        do {
            frame = random_ginibre(n, n, rng);
        } while (condition_number(frame) > kMaxFrameCondition);
        size_t used = 1 + rng.index(n);
        std::vector<ComplexMatrix> family;
        size_t col = 0;
        while (col < used) {
            size_t r = 1 + rng.index(used - col);
            ComplexMatrix cols = frame.middleCols(col, r);
            RealVector w(r);
            for (size_t k = 0; k < r; k++) w[k] = rng.uniform(0.2, 1.0);
            family.push_back(cols * w.asDiagonal() * cols.adjoint());
            col += r;
        }
        ComplexMatrix f = orthogonalizing_filter(family);
        ComplexMatrix sum = ComplexMatrix::Zero(n, n);
        ComplexMatrix total = ComplexMatrix::Zero(n, n);
        std::vector<ComplexMatrix> qs;
        for (const ComplexMatrix &b : family) {
            qs.push_back(f * b * f);
            sum += qs.back();
            total += b;
        }
        for (size_t x = 0; x < qs.size(); x++) {
            worst_product = std::max(worst_product, (qs[x] * qs[x] - qs[x]).norm());
            for (size_t y = x + 1; y < qs.size(); y++) worst_product = std::max(worst_product, (qs[x] * qs[y]).norm());
        }
        worst_sum = std::max(worst_sum, (sum - oracle::span_projection(total)).norm());
    }
    o.pass = worst_product <= kOrthogonalProjections && worst_sum <= kOrthogonalProjections;
    o.detail = "50 families, max pairwise product / idempotency defect " + sci(worst_product) +
               ", max deviation of the sum from the support " + sci(worst_sum) + " (both <= " +
               sci(kOrthogonalProjections) + ")";
    return o;
}

Outcome marginal_rank() {
    Outcome o;
    int good = 0;
    std::string error;
    for (uint64_t seed = 0; seed < 100; seed++) {
        size_t m = 2 + seed % 3;
        size_t n = 2 + (seed / 3) % 3;
        size_t p = 1 + (seed / 9) % n;
        guarded([&] {
            GeneratedInstance inst = generate_marginal_rank(m, n, p, seed);
            MarginalRankResult r = marginal_rank_separability(inst.t);
            if (r.verdict != MarginalRankVerdict::Separable) return;
            bool rank_one = r.decomposition->p() == p;
            for (const ProductTerm &t : r.decomposition->terms) rank_one = rank_one && oracle::rank(t.a) == 1;
            if (rank_one && is_unique_pure_decomposition(*r.decomposition) && ppt_check(inst.t)) good++;
        }, error);
    }
    MarginalRankVerdict bell = marginal_rank_separability(bell_state()).verdict;
    o.pass = good == 100 && bell == MarginalRankVerdict::NotMarginalRank;
    o.detail = std::to_string(good) + "/100 separable with rank-one A factors and PPT; Bell state -> " +
               verdict_name(bell) + (error.empty() ? "" : "; last error: " + error);
    return o;
}

double channel_action_error(const BipartiteMatrix &c, const HolevoForm &original, const HolevoForm &witness) {
    double worst = 0;
    for (size_t i = 0; i < original.m; i++) {
        for (size_t j = 0; j < original.m; j++) {
            ComplexMatrix e = oracle::unit(original.m, i, j);
            worst = std::max(worst, (witness.apply(e) - original.apply(e)).norm());
            worst = std::max(worst, (apply_channel_from_choi(c, e) - original.apply(e)).norm());
        }
    }
    return worst;
}

Outcome channel_detection() {
    Outcome o;
    int qc = 0;
    int cq = 0;
    double worst = 0;
    for (uint64_t seed = 0; seed < 50; seed++) {
        size_t m = 2 + seed % 3;
        size_t n = 2 + (seed / 3) % 3;
        HolevoForm hq = generate_qc_form(m, n, seed);
        BipartiteMatrix cq_choi = choi_of_holevo(hq);
        ChannelClass a = detect_qc(cq_choi);
        if (a.kind == ChannelKind::QC) {
            double err = channel_action_error(cq_choi, hq, *a.witness);
            worst = std::max(worst, err);
            if (err <= kChannelAction) qc++;
        }
        HolevoForm hc = generate_cq_form(m, n, seed);
        BipartiteMatrix cc = choi_of_holevo(hc);
        ChannelClass b = detect_cq(cc);
        if (b.kind == ChannelKind::CQ) {
            double err = channel_action_error(cc, hc, *b.witness);
            worst = std::max(worst, err);
            if (err <= kChannelAction) cq++;
        }
    }
    bool identity_none = true;
    for (size_t d : {2, 3}) {
        identity_none = identity_none && detect_qc(identity_channel_choi(d)).kind == ChannelKind::None &&
                        detect_cq(identity_channel_choi(d)).kind == ChannelKind::None;
    }
    o.pass = qc == 50 && cq == 50 && identity_none;
    o.detail = std::to_string(qc) + "/50 QC and " + std::to_string(cq) + "/50 CQ detected, max action error " +
               sci(worst) + " (<= " + sci(kChannelAction) + "); identity channel d=2,3 -> " +
               (identity_none ? "None" : "misclassified");
    return o;
}

Outcome pure_uniqueness() {
    Outcome o;
    int correct = 0;
    int total = 0;
    std::string error;
    // Two terms on C^3 (x) C^4; every combination of ranks in {1, 2} per factor.
    for (int mask = 0; mask < 16; mask++) {
        std::vector<size_t> a_ranks{(size_t)1 + (mask & 1), (size_t)1 + ((mask >> 1) & 1)};
        std::vector<size_t> b_ranks{(size_t)1 + ((mask >> 2) & 1), (size_t)1 + ((mask >> 3) & 1)};
        bool expected = mask == 0;
        for (uint64_t seed = 0; seed < 3; seed++) {
            total++;
            guarded([&] {
                GeneratedInstance inst = generate_b_independent(3, 4, b_ranks, 100 * mask + seed, a_ranks);
                PureProductDecomposition pure = pure_product_decomposition(b_independent_form(inst.t));
                if (pure.unique == expected) correct++;
            }, error);
        }
    }
    ComplexMatrix a = oracle::diag({0.6, 0.4});
    ComplexMatrix py = oracle::line(oracle::vec({1, Complex(0, 1), 2}));
    CanonicalDecomposition counter = b_independent_form(BipartiteMatrix::product(a, py));
    bool one_dimensional = counter.p() == 1 && oracle::rank(counter.terms[0].projection) == 1;
    bool counter_false = !is_unique_pure_decomposition(counter);
    o.pass = correct == total && one_dimensional && counter_false;
    o.detail = std::to_string(correct) + "/" + std::to_string(total) +
               " rank-grid flags correct; rank-2 A (x) P_y: joint eigenspace dim 1 = " +
               (one_dimensional ? "yes" : "no") + ", flag " + (counter_false ? "false" : "true") +
               (error.empty() ? "" : "; last error: " + error);
    return o;
}

Outcome joint_diagonalization() {
    Outcome o;
    int recovered = 0;
    double worst = 0;
    std::string error;
    for (uint64_t seed = 0; seed < 100; seed++) {
        Rng rng(seed ^ 0xd1a9);
        size_t n = 1 + rng.index(6);
        size_t q = 1 + rng.index(std::min<size_t>(n, 4));
        size_t m = 1 + rng.index(3);
        ComplexMatrix u = random_unitary(n, rng);
        size_t dim = q + rng.index(n - q + 1);
        std::vector<size_t> sizes(q, 1);
        for (size_t k = q; k < dim; k++) sizes[rng.index(q)]++;
        std::vector<ComplexMatrix> qs;
        std::vector<ComplexMatrix> tuples;
        size_t col = 0;
        for (size_t g = 0; g < q; g++) {
            ComplexMatrix basis = u.middleCols(col, sizes[g]);
            col += sizes[g];
            qs.push_back(basis * basis.adjoint());
            ComplexMatrix t(m, m);
            for (size_t i = 0; i < m; i++)
                for (size_t j = 0; j < m; j++) t(i, j) = rng.complex_normal();
            tuples.push_back(t);
        }
        BlockGrid grid(m, n);
        for (size_t i = 0; i < m; i++)
            for (size_t j = 0; j < m; j++)
                for (size_t g = 0; g < q; g++) grid.at(i, j) += tuples[g](i, j) * qs[g];
        guarded([&] {
            JointEigenstructure js = joint_eigenspaces(grid);
            if (js.size() != q) return;
            double err = 0;
            for (size_t g = 0; g < q; g++) {
                double best = INFINITY;
                for (size_t h = 0; h < q; h++) {
                    if ((js.tuples[g] - tuples[h]).norm() < 1e-6) best = (js.projections[g] - qs[h]).norm();
                }
                err = std::max(err, best);
            }
            worst = std::max(worst, err);
            if (err <= kProjectionDistance) recovered++;
        }, error);
    }
    o.pass = recovered == 100;
    o.detail = std::to_string(recovered) + "/100 partitions recovered, max projection distance " + sci(worst) +
               " (<= " + sci(kProjectionDistance) + ")" + (error.empty() ? "" : "; last error: " + error);
    return o;
}

}  // namespace

int main() {
    report(1, "round-trip recovery", round_trip_recovery());
    report(2, "uniqueness under permutation and rescaling", uniqueness());
    report(3, "negative controls", negative_controls());
    report(4, "filter identities", filter_identities());
    report(5, "orthogonalizing filter", orthogonalizing_filter_check());
    report(6, "marginal-rank separability", marginal_rank());
    report(7, "QC/CQ detection", channel_detection());
    report(8, "pure-product uniqueness flag", pure_uniqueness());
    report(9, "joint diagonalization", joint_diagonalization());
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
