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

#ifndef SEPDEC_TESTS_ORACLES_H
#define SEPDEC_TESTS_ORACLES_H

// Reference computations used to check the library. They deliberately take
// different routes (explicit index sums, SVD instead of the Hermitian
// eigensolver) from the code under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sepdec/matcore.h"

namespace oracle {

using sepdec::Complex;
using sepdec::ComplexMatrix;
using sepdec::ComplexVector;

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++)
        for (Eigen::Index j = 0; j < a.cols(); j++)
            for (Eigen::Index k = 0; k < b.rows(); k++)
                for (Eigen::Index l = 0; l < b.cols(); l++)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

inline ComplexMatrix partial_trace_B(const ComplexMatrix &t, size_t m, size_t n) {
    ComplexMatrix r = ComplexMatrix::Zero(m, m);
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++)
            for (size_t k = 0; k < n; k++)
                r(i, j) += t(i * n + k, j * n + k);
    return r;
}

inline ComplexMatrix partial_trace_A(const ComplexMatrix &t, size_t m, size_t n) {
    ComplexMatrix r = ComplexMatrix::Zero(n, n);
    for (size_t i = 0; i < m; i++)
        for (size_t k = 0; k < n; k++)
            for (size_t l = 0; l < n; l++)
                r(k, l) += t(i * n + k, i * n + l);
    return r;
}

inline ComplexMatrix partial_transpose_B(const ComplexMatrix &t, size_t m, size_t n) {
    ComplexMatrix r(m * n, m * n);
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++)
            for (size_t k = 0; k < n; k++)
                for (size_t l = 0; l < n; l++)
                    r(i * n + k, j * n + l) = t(i * n + l, j * n + k);
    return r;
}

inline Eigen::VectorXd singular_values(const ComplexMatrix &a) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues();
}

/// Number of singular values above rel * largest.
inline size_t rank(const ComplexMatrix &a, double rel = 1e-9) {
    if (a.size() == 0) return 0;
    Eigen::VectorXd s = singular_values(a);
    if (s.size() == 0 || s[0] == 0) return 0;
    size_t r = 0;
    for (Eigen::Index k = 0; k < s.size(); k++)
        if (s[k] > rel * s[0]) r++;
    return r;
}

/// Orthonormal columns spanning the image of a.
inline ComplexMatrix range_basis(const ComplexMatrix &a, double rel = 1e-9) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU);
    return svd.matrixU().leftCols(rank(a, rel));
}

/// dim of the sum of the images, computed from concatenated range bases.
inline size_t image_union_dim(const std::vector<ComplexMatrix> &family, double rel = 1e-9) {
    Eigen::Index total = 0;
    std::vector<ComplexMatrix> bases;
    for (const ComplexMatrix &f : family) {
        bases.push_back(range_basis(f, rel));
        total += bases.back().cols();
    }
    if (total == 0) return 0;
    ComplexMatrix all(family[0].rows(), total);
    Eigen::Index c = 0;
    for (const ComplexMatrix &b : bases) {
        all.middleCols(c, b.cols()) = b;
        c += b.cols();
    }
    return rank(all, 1e-7);
}

inline bool images_independent(const std::vector<ComplexMatrix> &family) {
    size_t sum = 0;
    for (const ComplexMatrix &f : family) sum += rank(f);
    return image_union_dim(family) == sum;
}

/// f applied to the nonzero spectrum of a PSD matrix, via the SVD.
inline ComplexMatrix psd_function(const ComplexMatrix &a, const std::function<double(double)> &f, double rel = 1e-9) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU);
    const Eigen::VectorXd &s = svd.singularValues();
    ComplexMatrix r = ComplexMatrix::Zero(a.rows(), a.cols());
    for (Eigen::Index k = 0; k < s.size(); k++) {
        if (s[k] > rel * s[0]) {
            ComplexVector u = svd.matrixU().col(k);
            r += f(s[k]) * u * u.adjoint();
        }
    }
    return r;
}

/// Projection onto the span of the given columns.
inline ComplexMatrix span_projection(const ComplexMatrix &columns) {
    ComplexMatrix q = range_basis(columns);
    return q * q.adjoint();
}

/// Smallest real part among the eigenvalues, using the general eigensolver.
inline double min_eigenvalue(const ComplexMatrix &a) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a);
    return solver.eigenvalues().real().minCoeff();
}

inline ComplexMatrix unit(size_t n, size_t i, size_t j) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(i, j) = 1;
    return e;
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
    ComplexMatrix d = ComplexMatrix::Zero(values.size(), values.size());
    Eigen::Index k = 0;
    for (double v : values) {
        d(k, k) = v;
        k++;
    }
    return d;
}

inline ComplexMatrix line(const ComplexVector &x) {
    return x * x.adjoint() / x.squaredNorm();
}

inline ComplexVector vec(std::initializer_list<Complex> values) {
    ComplexVector v(values.size());
    Eigen::Index k = 0;
    for (Complex z : values) v[k++] = z;
    return v;
}

inline ComplexMatrix bell() {
    ComplexVector psi = ComplexVector::Zero(4);
    psi[0] = psi[3] = 1 / std::sqrt(2.0);
    return psi * psi.adjoint();
}

}  // namespace oracle

#endif
