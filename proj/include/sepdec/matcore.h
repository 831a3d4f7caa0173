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

#ifndef SEPDEC_MATCORE_H
#define SEPDEC_MATCORE_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "sepdec/errors.h"

namespace sepdec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds. Every value is relative: rank and support cutoffs
/// are taken against the largest eigenvalue, defects against Frobenius norms.
struct Tolerances {
    double herm = 1e-9;     // Hermiticity defect tolerated before symmetrizing
    double psd = 1e-9;      // negative eigenvalues clamped down to -psd * |lambda|_max
    double rank = 1e-9;     // eigenvalues <= rank * lambda_max count as zero
    double normal = 1e-8;   // ||MM^* - M^*M|| threshold
    double commute = 1e-8;  // ||MN - NM|| threshold
    double cluster = 1e-7;  // eigenvalue gaps, in units of the family scale
    double recon = 1e-9;    // reconstruction and invariant checks
    double floor = 1e-4;    // normality/commutator floor, in units of scale^2

    /// Throws InvalidArgument unless every field lies in (0, 1).
    void validate() const;
};

struct HermitianEigenSystem {
    RealVector values;     // descending
    ComplexMatrix vectors; // orthonormal columns, vectors.col(k) pairs with values[k]
};

bool all_finite(const ComplexMatrix &m);
void require_finite(const ComplexMatrix &m, const char *what);
void require_square(const ComplexMatrix &m, const char *what);

/// ||M - M^*||_F / ||M||_F (zero for the zero matrix).
double hermiticity_defect(const ComplexMatrix &m);

/// Returns (M + M^*) / 2 after checking the defect against tol.herm.
ComplexMatrix checked_hermitian(const ComplexMatrix &m, const Tolerances &tol = {});

HermitianEigenSystem herm_eig(const ComplexMatrix &m, const Tolerances &tol = {});

/// Throws NotPSD when the smallest eigenvalue is below -tol.psd * max|lambda|.
void require_psd(const HermitianEigenSystem &eig, const Tolerances &tol, const char *what);
void require_psd(const ComplexMatrix &m, const Tolerances &tol, const char *what);

/// Number of eigenvalues strictly above tol.rank * lambda_max.
size_t support_size(const HermitianEigenSystem &eig, const Tolerances &tol);

/// M^p restricted to the support of a PSD matrix M; zero on its complement.
/// p = -1 is the pseudo-inverse, p = 1/2 the square root, p = 0 the support
/// projection.
ComplexMatrix psd_power(const ComplexMatrix &m, double exponent, const Tolerances &tol = {});

ComplexMatrix pseudo_inverse(const ComplexMatrix &m, const Tolerances &tol = {});
ComplexMatrix psd_sqrt(const ComplexMatrix &m, const Tolerances &tol = {});
ComplexMatrix support_projection(const ComplexMatrix &m, const Tolerances &tol = {});
size_t rank_tol(const ComplexMatrix &m, const Tolerances &tol = {});

/// Normality test ||MM^* - M^*M||_F <= tol.normal * max(||M||_F^2, floor).
/// The floor is tol.floor * reference_scale^2; reference_scale defaults to
/// ||M||_F, which makes the floor inactive.
bool is_normal(const ComplexMatrix &m, const Tolerances &tol = {}, double reference_scale = -1);
double normality_defect(const ComplexMatrix &m);

/// ||MN - NM||_F <= tol.commute * max(||M||_F ||N||_F, floor), floor as in
/// is_normal with reference_scale defaulting to sqrt(||M||_F ||N||_F).
bool commutes(
    const ComplexMatrix &a, const ComplexMatrix &b, const Tolerances &tol = {}, double reference_scale = -1);
double commutator_defect(const ComplexMatrix &a, const ComplexMatrix &b);

/// Standard Kronecker product: (A (x) B)[i*rb + k, j*cb + l] = A[i,j] B[k,l].
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Projection onto the span of a nonzero vector.
ComplexMatrix rank_one_projection(const ComplexVector &x);

}  // namespace sepdec

#endif
