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

#ifndef SEPDEC_RANDOM_H
#define SEPDEC_RANDOM_H

#include <cstdint>
#include <random>

#include "sepdec/matcore.h"

namespace sepdec {

/// Platform-independent random source.
///
/// Bits come from std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniforms use the top 53 bits; normals use Box-Muller. The
/// standard library distributions are avoided because their algorithms are
/// implementation-defined.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    /// Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }
    /// Uniform on {0, ..., count - 1}.
    size_t index(size_t count);
    double normal();
    /// Standard complex Gaussian: (N + iN) / sqrt(2).
    Complex complex_normal();

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0;
};

ComplexMatrix random_ginibre(size_t rows, size_t cols, Rng &rng);
/// Haar-distributed unitary from the QR of a Ginibre matrix with phases fixed.
ComplexMatrix random_unitary(size_t n, Rng &rng);
ComplexMatrix random_hermitian(size_t n, Rng &rng);
/// G G^* for an n x rank Ginibre G, scaled to unit trace.
ComplexMatrix random_density(size_t n, size_t rank, Rng &rng);
ComplexVector random_unit_vector(size_t n, Rng &rng);

/// 2-norm condition number of a square matrix.
double condition_number(const ComplexMatrix &m);

}  // namespace sepdec

#endif
