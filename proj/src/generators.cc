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

#include "sepdec/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace sepdec {

namespace {

ComplexMatrix well_conditioned_frame(size_t n, Rng &rng) {
    while (true) {
        ComplexMatrix frame = random_ginibre(n, n, rng);
        if (condition_number(frame) <= kMaxFrameCondition) {
            return frame;
        }
    }
}

double max_entry_difference(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

bool separated(const std::vector<ComplexMatrix> &factors, const ComplexMatrix &candidate) {
    for (const ComplexMatrix &f : factors) {
        if (max_entry_difference(f, candidate) < kMinFactorSeparation) {
            return false;
        }
    }
    return true;
}

void infeasible(const std::string &message) {
    throw Error(ErrorCode::InfeasibleRanks, message);
}

}  // namespace

GeneratedInstance generate_b_independent(
    size_t m, size_t n, const std::vector<size_t> &b_ranks, uint64_t seed, const std::vector<size_t> &a_ranks) {
    size_t p = b_ranks.size();
    if (m == 0 || n == 0 || p == 0) {
        infeasible("dimensions and term count must be positive");
    }
    if (!a_ranks.empty() && a_ranks.size() != p) {
        infeasible("a_ranks must list one rank per term");
    }
    size_t total = 0;
    for (size_t r : b_ranks) {
        if (r == 0) {
            infeasible("B ranks must be at least 1");
        }
        total += r;
    }
    if (total > n) {
        infeasible("B ranks sum to " + std::to_string(total) + " > n = " + std::to_string(n));
    }
    for (size_t r : a_ranks) {
        if (r == 0 || r > m) {
            infeasible("A ranks must lie in [1, m]");
        }
    }
    if (m == 1 && p > 1) {
        infeasible("m = 1 admits only one distinct unit-trace A factor");
    }

    Rng rng(seed);
    std::vector<ComplexMatrix> as;
    while (as.size() < p) {
        size_t rank = a_ranks.empty() ? m : a_ranks[as.size()];
        ComplexMatrix candidate = random_density(m, rank, rng);
        if (separated(as, candidate)) {
            as.push_back(candidate);
        }
    }

    ComplexMatrix frame = well_conditioned_frame(n, rng);
    std::vector<ComplexMatrix> bs;
    size_t column = 0;
    double trace_sum = 0;
    for (size_t g = 0; g < p; g++) {
        auto cols = frame.middleCols(column, b_ranks[g]);
        RealVector weights(b_ranks[g]);
        for (size_t k = 0; k < b_ranks[g]; k++) {
            weights[k] = rng.uniform(0.2, 1.0);
        }
        ComplexMatrix b = cols * weights.asDiagonal() * cols.adjoint();
        b = (b + b.adjoint()) * 0.5;
        trace_sum += b.trace().real();
        bs.push_back(std::move(b));
        column += b_ranks[g];
    }

    CanonicalDecomposition truth;
    truth.side = Side::B;
    truth.m = m;
    truth.n = n;
    for (size_t g = 0; g < p; g++) {
        truth.terms.push_back({as[g], bs[g] / trace_sum, ComplexMatrix()});
    }
    canonicalize(truth);
    BipartiteMatrix t = truth.reassemble();
    return {std::move(t), std::move(truth), seed};
}

GeneratedInstance generate_marginal_rank(size_t m, size_t n, size_t p, uint64_t seed) {
    if (m == 0 || n == 0 || p == 0 || p > n) {
        infeasible("marginal-rank instances need 1 <= p <= n");
    }
    if (m == 1 && p > 1) {
        infeasible("m = 1 admits only one line");
    }
    Rng rng(seed);
    std::vector<ComplexMatrix> lines;
    while (lines.size() < p) {
        ComplexMatrix candidate = rank_one_projection(random_unit_vector(m, rng));
        if (separated(lines, candidate)) {
            lines.push_back(candidate);
        }
    }
    ComplexMatrix frame = well_conditioned_frame(n, rng);
    std::vector<double> weights(p);
    for (double &w : weights) {
        w = rng.uniform(0.1, 1.0);
    }
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);

    CanonicalDecomposition truth;
    truth.side = Side::B;
    truth.m = m;
    truth.n = n;
    for (size_t g = 0; g < p; g++) {
        ComplexVector y = frame.col(g);
        truth.terms.push_back({lines[g], (weights[g] / total) * rank_one_projection(y), ComplexMatrix()});
    }
    canonicalize(truth);
    BipartiteMatrix t = truth.reassemble();
    return {std::move(t), std::move(truth), seed};
}

EntangledInstance generate_entangled_pure(size_t m, size_t n, size_t r, uint64_t seed, bool uniform_weights) {
    if (r < 2 || r > std::min(m, n)) {
        infeasible("Schmidt rank must lie in [2, min(m, n)]");
    }
    Rng rng(seed);
    ComplexMatrix u = random_unitary(m, rng);
    ComplexMatrix v = random_unitary(n, rng);
    std::vector<double> s(r, 1.0);
    if (!uniform_weights) {
        for (double &x : s) {
            x = rng.uniform(0.2, 1.0);
        }
    }
    double norm = std::sqrt(std::inner_product(s.begin(), s.end(), s.begin(), 0.0));
    ComplexVector psi = ComplexVector::Zero(m * n);
    for (size_t k = 0; k < r; k++) {
        s[k] /= norm;
        psi += s[k] * kron(u.col(k), v.col(k)).col(0);
    }
    std::sort(s.begin(), s.end(), std::greater<>());
    ComplexMatrix t = psi * psi.adjoint();
    return {BipartiteMatrix(m, n, (t + t.adjoint()) * 0.5), std::move(s)};
}

HolevoForm generate_qc_form(size_t m, size_t n, uint64_t seed) {
    Rng rng(seed);
    size_t q = 1 + rng.index(n);
    ComplexMatrix basis = random_unitary(n, rng);
    std::vector<ComplexMatrix> gs;
    ComplexMatrix sum = ComplexMatrix::Zero(m, m);
    for (size_t k = 0; k < q; k++) {
        gs.push_back(random_density(m, m, rng) * rng.uniform(0.2, 1.0));
        sum += gs.back();
    }
    ComplexMatrix whiten = psd_power(sum, -0.5);
    HolevoForm form{m, n, {}};
    for (size_t k = 0; k < q; k++) {
        ComplexMatrix f = whiten * gs[k] * whiten;
        form.pairs.push_back({(f + f.adjoint()) * 0.5, rank_one_projection(basis.col(k))});
    }
    return form;
}

HolevoForm generate_cq_form(size_t m, size_t n, uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix basis = random_unitary(m, rng);
    HolevoForm form{m, n, {}};
    for (size_t k = 0; k < m; k++) {
        form.pairs.push_back({rank_one_projection(basis.col(k)), random_density(n, 1 + rng.index(n), rng)});
    }
    return form;
}

BipartiteMatrix bell_state() {
    ComplexMatrix t = ComplexMatrix::Zero(4, 4);
    t(0, 0) = t(0, 3) = t(3, 0) = t(3, 3) = 0.5;
    return BipartiteMatrix(2, 2, std::move(t));
}

BipartiteMatrix identity_channel_choi(size_t d) {
    ComplexMatrix t = ComplexMatrix::Zero(d * d, d * d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            t(i * d + i, j * d + j) = 1;
        }
    }
    return BipartiteMatrix(d, d, std::move(t));
}

HolevoForm dephasing_form(size_t n) {
    HolevoForm form{n, n, {}};
    for (size_t k = 0; k < n; k++) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(k, k) = 1;
        form.pairs.push_back({e, e});
    }
    return form;
}

HolevoForm depolarizing_form(size_t m, size_t n) {
    HolevoForm form{m, n, {}};
    for (size_t k = 0; k < n; k++) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(k, k) = 1;
        form.pairs.push_back({ComplexMatrix::Identity(m, m) / (double)n, e});
    }
    return form;
}

}  // namespace sepdec
