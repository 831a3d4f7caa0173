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

#include "sepdec/random.h"

#include <cmath>
#include <limits>
#include <numbers>

namespace sepdec {

double Rng::uniform() {
    return (double)(engine_() >> 11) * 0x1.0p-53;
}

size_t Rng::index(size_t count) {
    return std::min(count - 1, (size_t)(uniform() * (double)count));
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

ComplexMatrix random_ginibre(size_t rows, size_t cols, Rng &rng) {
    ComplexMatrix result(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            result(i, j) = rng.complex_normal();
        }
    }
    return result;
}

ComplexMatrix random_unitary(size_t n, Rng &rng) {
    Eigen::HouseholderQR<ComplexMatrix> qr(random_ginibre(n, n, rng));
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (size_t k = 0; k < n; k++) {
        Complex d = r(k, k);
        double magnitude = std::abs(d);
        if (magnitude > 0) {
            q.col(k) *= d / magnitude;
        }
    }
    return q;
}

ComplexMatrix random_hermitian(size_t n, Rng &rng) {
    ComplexMatrix g = random_ginibre(n, n, rng);
    return (g + g.adjoint()) * 0.5;
}

ComplexMatrix random_density(size_t n, size_t rank, Rng &rng) {
    ComplexMatrix g = random_ginibre(n, rank, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho = (rho + rho.adjoint()) * 0.5;
    return rho / rho.trace().real();
}

ComplexVector random_unit_vector(size_t n, Rng &rng) {
    ComplexVector v = random_ginibre(n, 1, rng).col(0);
    return v / v.norm();
}

double condition_number(const ComplexMatrix &m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const RealVector &s = svd.singularValues();
    if (s.size() == 0) {
        return 1;
    }
    double smallest = s[s.size() - 1];
    return smallest == 0 ? std::numeric_limits<double>::infinity() : s[0] / smallest;
}

}  // namespace sepdec
