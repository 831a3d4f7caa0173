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

#ifndef SEPDEC_GENERATORS_H
#define SEPDEC_GENERATORS_H

#include <cstdint>
#include <vector>

#include "sepdec/channels.h"
#include "sepdec/random.h"

namespace sepdec {

/// A generated state together with its canonical ground-truth decomposition.
struct GeneratedInstance {
    BipartiteMatrix t;
    CanonicalDecomposition truth;
    uint64_t seed = 0;
};

/// Frames whose condition number exceeds this are redrawn.
inline constexpr double kMaxFrameCondition = 100;
/// Unit-trace factors closer than this (max entry difference) are redrawn.
inline constexpr double kMinFactorSeparation = 1e-2;

/// T = sum_g A_g (x) B_g with unit-trace A_g of rank a_ranks[g] (full rank m
/// when a_ranks is empty) and B_g of rank b_ranks[g] whose images come from
/// disjoint column groups of one random invertible frame. tr T = 1.
/// Throws InfeasibleRanks unless 1 <= b_ranks[g], sum b_ranks <= n and
/// 1 <= a_ranks[g] <= m.
GeneratedInstance generate_b_independent(
    size_t m, size_t n, const std::vector<size_t> &b_ranks, uint64_t seed, const std::vector<size_t> &a_ranks = {});

/// T = sum_g lambda_g P_{x_g} (x) P_{y_g} with distinct lines x_g, linearly
/// independent y_g and convex weights. Requires 1 <= p <= n.
GeneratedInstance generate_marginal_rank(size_t m, size_t n, size_t p, uint64_t seed);

struct EntangledInstance {
    BipartiteMatrix t;
    std::vector<double> schmidt;  // descending, squares sum to 1
};

/// Pure state on psi = sum_k s_k u_k (x) v_k with r >= 2 terms. Random Schmidt
/// coefficients are drawn uniformly from [0.2, 1] before normalization.
EntangledInstance generate_entangled_pure(size_t m, size_t n, size_t r, uint64_t seed, bool uniform_weights = false);

/// QC channel: q in [1, n] rank-one orthogonal R_k, F_k summing to I_m.
HolevoForm generate_qc_form(size_t m, size_t n, uint64_t seed);
/// CQ channel: F_k rank-one projections onto a random orthonormal basis of
/// C^m, R_k random density matrices.
HolevoForm generate_cq_form(size_t m, size_t n, uint64_t seed);

/// (|00> + |11>)(<00| + <11|) / 2.
BipartiteMatrix bell_state();
/// sum_ij E_ij (x) E_ij on C^d (x) C^d.
BipartiteMatrix identity_channel_choi(size_t d);
/// {(E_kk, E_kk)}: X -> diag(X).
HolevoForm dephasing_form(size_t n);
/// {(I_m / n, E_kk)}: X -> tr(X) I_n / n.
HolevoForm depolarizing_form(size_t m, size_t n);

}  // namespace sepdec

#endif
