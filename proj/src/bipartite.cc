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

#include "sepdec/bipartite.h"

#include <algorithm>
#include <string>

namespace sepdec {

BipartiteMatrix::BipartiteMatrix(size_t m, size_t n, ComplexMatrix mat) : m_(m), n_(n), mat_(std::move(mat)) {
    if (m == 0 || n == 0) {
        throw Error(ErrorCode::InvalidArgument, "factor dimensions must be positive");
    }
    if ((size_t)mat_.rows() != m * n || (size_t)mat_.cols() != m * n) {
        throw Error(
            ErrorCode::ShapeMismatch,
            "bipartite matrix for m=" + std::to_string(m) + ", n=" + std::to_string(n) + " must be " +
                std::to_string(m * n) + "x" + std::to_string(m * n));
    }
}

BipartiteMatrix BipartiteMatrix::product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_square(a, "A factor");
    require_square(b, "B factor");
    return BipartiteMatrix(a.rows(), b.rows(), kron(a, b));
}

BlockGrid::BlockGrid(size_t m, size_t n) : m_(m), n_(n), blocks_(m * m, ComplexMatrix::Zero(n, n)) {
}

double BlockGrid::scale() const {
    double result = 0;
    for (const auto &b : blocks_) {
        result = std::max(result, b.norm());
    }
    return result;
}

BlockGrid blocks(const BipartiteMatrix &t) {
    size_t m = t.m();
    size_t n = t.n();
    BlockGrid grid(m, n);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            grid.at(i, j) = t.mat().block(i * n, j * n, n, n);
        }
    }
    return grid;
}

BipartiteMatrix from_blocks(const BlockGrid &grid) {
    size_t m = grid.m();
    size_t n = grid.n();
    ComplexMatrix mat(m * n, m * n);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            const ComplexMatrix &b = grid.at(i, j);
            if ((size_t)b.rows() != n || (size_t)b.cols() != n) {
                throw Error(
                    ErrorCode::ShapeMismatch,
                    "block (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not " +
                        std::to_string(n) + "x" + std::to_string(n));
            }
            mat.block(i * n, j * n, n, n) = b;
        }
    }
    return BipartiteMatrix(m, n, std::move(mat));
}

ComplexMatrix partial_trace_B(const BipartiteMatrix &t) {
    size_t m = t.m();
    size_t n = t.n();
    ComplexMatrix result(m, m);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            result(i, j) = t.mat().block(i * n, j * n, n, n).trace();
        }
    }
    return result;
}

ComplexMatrix partial_trace_A(const BipartiteMatrix &t) {
    size_t n = t.n();
    ComplexMatrix result = ComplexMatrix::Zero(n, n);
    for (size_t i = 0; i < t.m(); i++) {
        result += t.mat().block(i * n, i * n, n, n);
    }
    return result;
}

BipartiteMatrix validated_state(const BipartiteMatrix &t, const Tolerances &tol) {
    HermitianEigenSystem eig = herm_eig(t.mat(), tol);
    require_psd(eig, tol, "state");
    return BipartiteMatrix(t.m(), t.n(), (t.mat() + t.mat().adjoint()) * 0.5);
}

BipartiteMatrix conjugate_A(const BipartiteMatrix &t, const ComplexMatrix &x) {
    if ((size_t)x.rows() != t.m() || (size_t)x.cols() != t.m()) {
        throw Error(ErrorCode::ShapeMismatch, "A-side operator has the wrong size");
    }
    ComplexMatrix full = kron(x, ComplexMatrix::Identity(t.n(), t.n()));
    return BipartiteMatrix(t.m(), t.n(), full * t.mat() * full.adjoint());
}

BipartiteMatrix conjugate_B(const BipartiteMatrix &t, const ComplexMatrix &y) {
    size_t m = t.m();
    size_t n = t.n();
    if ((size_t)y.rows() != n || (size_t)y.cols() != n) {
        throw Error(ErrorCode::ShapeMismatch, "B-side operator has the wrong size");
    }
    ComplexMatrix result(m * n, m * n);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            result.block(i * n, j * n, n, n) = y * t.mat().block(i * n, j * n, n, n) * y.adjoint();
        }
    }
    return BipartiteMatrix(m, n, std::move(result));
}

FilteredPair local_filter_B(const BipartiteMatrix &t, const Tolerances &tol) {
    BipartiteMatrix state = validated_state(t, tol);
    if (state.mat().norm() == 0) {
        throw Error(ErrorCode::ZeroMatrix, "cannot filter the zero matrix");
    }
    ComplexMatrix t_b = partial_trace_A(state);
    t_b = (t_b + t_b.adjoint()) * 0.5;
    ComplexMatrix filter = psd_power(t_b, -0.5, tol);
    BipartiteMatrix filtered = conjugate_B(state, filter);
    ComplexMatrix sym = (filtered.mat() + filtered.mat().adjoint()) * 0.5;
    return FilteredPair{
        BipartiteMatrix(t.m(), t.n(), std::move(sym)),
        t_b,
        support_projection(t_b, tol),
    };
}

BipartiteMatrix reconstruct(const FilteredPair &fp, const Tolerances &tol) {
    if ((size_t)fp.t_b.rows() != fp.t_tilde.n() || (size_t)fp.t_b.cols() != fp.t_tilde.n()) {
        throw Error(ErrorCode::ShapeMismatch, "marginal does not match the filtered matrix");
    }
    return conjugate_B(fp.t_tilde, psd_sqrt(fp.t_b, tol));
}

BipartiteMatrix swap_sides(const BipartiteMatrix &t) {
    size_t m = t.m();
    size_t n = t.n();
    ComplexMatrix result(m * n, m * n);
    for (size_t i = 0; i < m; i++) {
        for (size_t k = 0; k < n; k++) {
            for (size_t j = 0; j < m; j++) {
                for (size_t l = 0; l < n; l++) {
                    result(k * m + i, l * m + j) = t.mat()(i * n + k, j * n + l);
                }
            }
        }
    }
    return BipartiteMatrix(n, m, std::move(result));
}

BipartiteMatrix partial_transpose_B(const BipartiteMatrix &t) {
    BlockGrid grid = blocks(t);
    for (size_t i = 0; i < grid.m(); i++) {
        for (size_t j = 0; j < grid.m(); j++) {
            grid.at(i, j).transposeInPlace();
        }
    }
    return from_blocks(grid);
}

std::pair<ComplexMatrix, ComplexMatrix> product_range(const BipartiteMatrix &t, const Tolerances &tol) {
    BipartiteMatrix state = validated_state(t, tol);
    return {support_projection(partial_trace_B(state), tol), support_projection(partial_trace_A(state), tol)};
}

double relative_residual(const ComplexMatrix &x, const ComplexMatrix &y) {
    double denominator = y.norm();
    double difference = (x - y).norm();
    return denominator == 0 ? difference : difference / denominator;
}

}  // namespace sepdec
