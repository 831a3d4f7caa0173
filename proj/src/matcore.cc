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

#include "sepdec/matcore.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace sepdec {

namespace {

constexpr double kAbsoluteFloor = 1e-300;

void require_unit_interval(double value, const char *name) {
    if (!(value > 0 && value < 1)) {
        throw Error(ErrorCode::InvalidArgument, std::string("tolerance ") + name + " must lie in (0, 1)");
    }
}

double max_abs_eigenvalue(const HermitianEigenSystem &eig) {
    if (eig.values.size() == 0) {
        return 0;
    }
    return std::max(std::abs(eig.values[0]), std::abs(eig.values[eig.values.size() - 1]));
}

}  // namespace

void Tolerances::validate() const {
    require_unit_interval(herm, "herm");
    require_unit_interval(psd, "psd");
    require_unit_interval(rank, "rank");
    require_unit_interval(normal, "normal");
    require_unit_interval(commute, "commute");
    require_unit_interval(cluster, "cluster");
    require_unit_interval(recon, "recon");
    require_unit_interval(floor, "floor");
}

bool all_finite(const ComplexMatrix &m) {
    for (Eigen::Index k = 0; k < m.size(); k++) {
        if (!std::isfinite(m.data()[k].real()) || !std::isfinite(m.data()[k].imag())) {
            return false;
        }
    }
    return true;
}

void require_finite(const ComplexMatrix &m, const char *what) {
    if (!all_finite(m)) {
        throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN or infinite entries");
    }
}

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols()) {
        throw Error(
            ErrorCode::NotSquare,
            std::string(what) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

double hermiticity_defect(const ComplexMatrix &m) {
    double norm = m.norm();
    if (norm == 0) {
        return 0;
    }
    return (m - m.adjoint()).norm() / norm;
}

ComplexMatrix checked_hermitian(const ComplexMatrix &m, const Tolerances &tol) {
    require_square(m, "matrix");
    require_finite(m, "matrix");
    double defect = hermiticity_defect(m);
    if (defect > tol.herm) {
        throw Error(
            ErrorCode::NotHermitian,
            "relative Hermiticity defect " + format_number(defect) + " exceeds " + format_number(tol.herm));
    }
    return (m + m.adjoint()) * 0.5;
}

HermitianEigenSystem herm_eig(const ComplexMatrix &m, const Tolerances &tol) {
    ComplexMatrix h = checked_hermitian(m, tol);
    HermitianEigenSystem result;
    if (h.rows() == 0) {
        result.values = RealVector(0);
        result.vectors = ComplexMatrix(0, 0);
        return result;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
    }
    // Eigen sorts ascending.
    result.values = solver.eigenvalues().reverse();
    result.vectors = solver.eigenvectors().rowwise().reverse();
    return result;
}

void require_psd(const HermitianEigenSystem &eig, const Tolerances &tol, const char *what) {
    if (eig.values.size() == 0) {
        return;
    }
    double smallest = eig.values[eig.values.size() - 1];
    if (smallest < -tol.psd * max_abs_eigenvalue(eig)) {
        throw Error(
            ErrorCode::NotPSD,
            std::string(what) + " has eigenvalue " + format_number(smallest) + " (largest magnitude " +
                format_number(max_abs_eigenvalue(eig)) + ")");
    }
}

void require_psd(const ComplexMatrix &m, const Tolerances &tol, const char *what) {
    require_psd(herm_eig(m, tol), tol, what);
}

size_t support_size(const HermitianEigenSystem &eig, const Tolerances &tol) {
    if (eig.values.size() == 0 || eig.values[0] <= 0) {
        return 0;
    }
    double cutoff = tol.rank * eig.values[0];
    size_t count = 0;
    while (count < (size_t)eig.values.size() && eig.values[count] > cutoff) {
        count++;
    }
    return count;
}

ComplexMatrix psd_power(const ComplexMatrix &m, double exponent, const Tolerances &tol) {
    HermitianEigenSystem eig = herm_eig(m, tol);
    require_psd(eig, tol, "matrix");
    size_t r = support_size(eig, tol);
    auto basis = eig.vectors.leftCols(r);
    RealVector powered(r);
    for (size_t k = 0; k < r; k++) {
        powered[k] = exponent == 0 ? 1.0 : std::pow(eig.values[k], exponent);
    }
    ComplexMatrix result = basis * powered.asDiagonal() * basis.adjoint();
    return (result + result.adjoint()) * 0.5;
}

ComplexMatrix pseudo_inverse(const ComplexMatrix &m, const Tolerances &tol) {
    return psd_power(m, -1, tol);
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m, const Tolerances &tol) {
    return psd_power(m, 0.5, tol);
}

ComplexMatrix support_projection(const ComplexMatrix &m, const Tolerances &tol) {
    return psd_power(m, 0, tol);
}

size_t rank_tol(const ComplexMatrix &m, const Tolerances &tol) {
    HermitianEigenSystem eig = herm_eig(m, tol);
    require_psd(eig, tol, "matrix");
    return support_size(eig, tol);
}

double normality_defect(const ComplexMatrix &m) {
    return (m * m.adjoint() - m.adjoint() * m).norm();
}

bool is_normal(const ComplexMatrix &m, const Tolerances &tol, double reference_scale) {
    require_square(m, "matrix");
    double norm = m.norm();
    if (reference_scale < 0) {
        reference_scale = norm;
    }
    double scale = std::max({norm * norm, tol.floor * reference_scale * reference_scale, kAbsoluteFloor});
    return normality_defect(m) <= tol.normal * scale;
}

double commutator_defect(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a * b - b * a).norm();
}

bool commutes(const ComplexMatrix &a, const ComplexMatrix &b, const Tolerances &tol, double reference_scale) {
    if (a.rows() != a.cols() || a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "commutes needs two square matrices of the same size");
    }
    double product = a.norm() * b.norm();
    double floor = reference_scale < 0 ? tol.floor * product : tol.floor * reference_scale * reference_scale;
    double scale = std::max({product, floor, kAbsoluteFloor});
    return commutator_defect(a, b) <= tol.commute * scale;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix result(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            result.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return result;
}

ComplexMatrix rank_one_projection(const ComplexVector &x) {
    double norm2 = x.squaredNorm();
    if (norm2 == 0) {
        throw Error(ErrorCode::ZeroMatrix, "cannot project onto the zero vector");
    }
    return x * x.adjoint() / norm2;
}

}  // namespace sepdec
