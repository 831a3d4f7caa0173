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

#ifndef SEPDEC_BIPARTITE_H
#define SEPDEC_BIPARTITE_H

#include <cstddef>
#include <utility>
#include <vector>

#include "sepdec/matcore.h"

namespace sepdec {

/// An (m*n) x (m*n) matrix on C^m (x) C^n. Row (i, k) of the A and B factors
/// is stored at flat index i*n + k (zero-based), matching kron(A, B).
class BipartiteMatrix {
   public:
    BipartiteMatrix(size_t m, size_t n, ComplexMatrix mat);

    static BipartiteMatrix product(const ComplexMatrix &a, const ComplexMatrix &b);

    size_t m() const noexcept {
        return m_;
    }
    size_t n() const noexcept {
        return n_;
    }
    const ComplexMatrix &mat() const noexcept {
        return mat_;
    }

   private:
    size_t m_;
    size_t n_;
    ComplexMatrix mat_;
};

/// The m x m grid of n x n blocks T_ij with T = sum_ij E_ij (x) T_ij.
/// Indexing through at() is zero-based; reports use 1-based BlockIndex.
class BlockGrid {
   public:
    BlockGrid(size_t m, size_t n);

    size_t m() const noexcept {
        return m_;
    }
    size_t n() const noexcept {
        return n_;
    }
    ComplexMatrix &at(size_t i, size_t j) {
        return blocks_[i * m_ + j];
    }
    const ComplexMatrix &at(size_t i, size_t j) const {
        return blocks_[i * m_ + j];
    }

    /// Largest block Frobenius norm.
    double scale() const;

   private:
    size_t m_;
    size_t n_;
    std::vector<ComplexMatrix> blocks_;
};

/// Output of the one-sided local filter. t_tilde = (I (x) F) T (I (x) F) with
/// F = (T_B^#)^{1/2}; p_b projects onto im T_B.
struct FilteredPair {
    BipartiteMatrix t_tilde;
    ComplexMatrix t_b;
    ComplexMatrix p_b;
};

BlockGrid blocks(const BipartiteMatrix &t);
BipartiteMatrix from_blocks(const BlockGrid &grid);

/// T_A = tr_B T = sum_ij tr(T_ij) E_ij.
ComplexMatrix partial_trace_B(const BipartiteMatrix &t);
/// T_B = tr_A T = sum_i T_ii.
ComplexMatrix partial_trace_A(const BipartiteMatrix &t);

/// Checks that T is a finite Hermitian PSD matrix (within tol) and returns its
/// symmetrized copy.
BipartiteMatrix validated_state(const BipartiteMatrix &t, const Tolerances &tol = {});

FilteredPair local_filter_B(const BipartiteMatrix &t, const Tolerances &tol = {});

/// Inverts local_filter_B: (I (x) t_b^{1/2}) t_tilde (I (x) t_b^{1/2}).
BipartiteMatrix reconstruct(const FilteredPair &fp, const Tolerances &tol = {});

/// Conjugation by the swap e_i (x) f_k -> f_k (x) e_i. Exact reindexing.
BipartiteMatrix swap_sides(const BipartiteMatrix &t);

/// Conjugation by (X (x) I), or (I (x) Y) for the B-side variant.
BipartiteMatrix conjugate_A(const BipartiteMatrix &t, const ComplexMatrix &x);
BipartiteMatrix conjugate_B(const BipartiteMatrix &t, const ComplexMatrix &y);

/// Blockwise transpose sum_ij E_ij (x) T_ij^t.
BipartiteMatrix partial_transpose_B(const BipartiteMatrix &t);

/// Projections onto im T_A and im T_B; their tensor product is the smallest
/// product subspace containing im T.
std::pair<ComplexMatrix, ComplexMatrix> product_range(const BipartiteMatrix &t, const Tolerances &tol = {});

/// ||X - Y||_F / ||Y||_F, or ||X||_F when Y = 0.
double relative_residual(const ComplexMatrix &x, const ComplexMatrix &y);

}  // namespace sepdec

#endif
