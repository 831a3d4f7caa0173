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

#include "sepdec/channels.h"

#include <cmath>
#include <string>

namespace sepdec {

namespace {

/// Orthonormal eigenvectors of a projection Q with eigenvalue 1.
std::vector<ComplexVector> range_basis(const ComplexMatrix &q, const Tolerances &tol) {
    HermitianEigenSystem eig = herm_eig(q, tol);
    std::vector<ComplexVector> result;
    for (Eigen::Index k = 0; k < eig.values.size(); k++) {
        if (eig.values[k] > 0.5) {
            result.push_back(eig.vectors.col(k));
        }
    }
    return result;
}

/// Completes the orthonormal vectors in `chosen` to a basis of C^n, picking at
/// each step the standard basis vector with the largest residual.
std::vector<ComplexVector> complete_basis(const std::vector<ComplexVector> &chosen, size_t n) {
    std::vector<ComplexVector> basis = chosen;
    std::vector<ComplexVector> added;
    while (basis.size() < n) {
        ComplexVector best;
        double best_norm = -1;
        for (size_t k = 0; k < n; k++) {
            ComplexVector v = ComplexVector::Unit(n, k);
            for (const ComplexVector &u : basis) {
                v -= u * u.dot(v);
            }
            for (const ComplexVector &u : basis) {
                v -= u * u.dot(v);
            }
            double norm = v.norm();
            if (norm > best_norm + 1e-12) {
                best_norm = norm;
                best = v;
            }
        }
        best /= best_norm;
        basis.push_back(best);
        added.push_back(best);
    }
    return added;
}

}  // namespace

const char *channel_kind_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::QC:
            return "QC";
        case ChannelKind::CQ:
            return "CQ";
        case ChannelKind::OrthogonalOnly:
            return "OrthogonalOnly";
        case ChannelKind::None:
            return "None";
    }
    return "Unknown";
}

ComplexMatrix HolevoForm::apply(const ComplexMatrix &x) const {
    if ((size_t)x.rows() != m || (size_t)x.cols() != m) {
        throw Error(ErrorCode::ShapeMismatch, "channel input has the wrong size");
    }
    ComplexMatrix result = ComplexMatrix::Zero(n, n);
    for (const HolevoPair &pair : pairs) {
        result += (pair.f * x).trace() * pair.r;
    }
    return result;
}

void HolevoForm::validate(const Tolerances &tol) const {
    for (const HolevoPair &pair : pairs) {
        if ((size_t)pair.f.rows() != m || (size_t)pair.f.cols() != m || (size_t)pair.r.rows() != n ||
            (size_t)pair.r.cols() != n) {
            throw Error(ErrorCode::ShapeMismatch, "Holevo pair does not match the form's dimensions");
        }
        require_psd(pair.f, tol, "F_k");
        require_psd(pair.r, tol, "R_k");
        if (std::abs(pair.r.trace() - Complex(1)) > tol.recon) {
            throw Error(ErrorCode::InvalidArgument, "R_k must have unit trace");
        }
    }
}

BipartiteMatrix choi_of_holevo(const HolevoForm &h) {
    if (h.m == 0 || h.n == 0) {
        throw Error(ErrorCode::InvalidArgument, "Holevo form dimensions must be positive");
    }
    ComplexMatrix sum = ComplexMatrix::Zero(h.m * h.n, h.m * h.n);
    for (const HolevoPair &pair : h.pairs) {
        if ((size_t)pair.f.rows() != h.m || (size_t)pair.f.cols() != h.m || (size_t)pair.r.rows() != h.n ||
            (size_t)pair.r.cols() != h.n) {
            throw Error(ErrorCode::ShapeMismatch, "Holevo pair does not match the form's dimensions");
        }
        sum += kron(pair.f.transpose(), pair.r);
    }
    return BipartiteMatrix(h.m, h.n, std::move(sum));
}

ComplexMatrix apply_channel_from_choi(const BipartiteMatrix &c, const ComplexMatrix &x) {
    if ((size_t)x.rows() != c.m() || (size_t)x.cols() != c.m()) {
        throw Error(ErrorCode::ShapeMismatch, "channel input has the wrong size");
    }
    size_t n = c.n();
    ComplexMatrix result = ComplexMatrix::Zero(n, n);
    for (size_t i = 0; i < c.m(); i++) {
        for (size_t j = 0; j < c.m(); j++) {
            result += x(i, j) * c.mat().block(i * n, j * n, n, n);
        }
    }
    return result;
}

bool is_trace_preserving_choi(const BipartiteMatrix &c, const Tolerances &tol) {
    ComplexMatrix identity = ComplexMatrix::Identity(c.m(), c.m());
    return (partial_trace_B(c) - identity).norm() <= tol.recon * std::sqrt((double)c.m());
}

ChannelClass detect_qc(const BipartiteMatrix &c, const Tolerances &tol) {
    BipartiteMatrix state = validated_state(c, tol);
    ChannelClass result;
    CanonicalDecomposition dec;
    try {
        dec = b_orthogonal_form(state, tol);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::NotBOrthogonal) {
            throw;
        }
        result.diagnostics = e.diagnostics();
        return result;
    }
    if (!is_trace_preserving_choi(state, tol)) {
        result.kind = ChannelKind::OrthogonalOnly;
        return result;
    }

    HolevoForm witness{c.m(), c.n(), {}};
    std::vector<ComplexVector> used;
    for (const ProductTerm &term : dec.terms) {
        for (const ComplexVector &y : range_basis(term.projection, tol)) {
            double weight = (y.adjoint() * term.b * y)(0, 0).real();
            witness.pairs.push_back({(weight * term.a).transpose(), y * y.adjoint()});
            used.push_back(y);
        }
    }
    for (const ComplexVector &y : complete_basis(used, c.n())) {
        witness.pairs.push_back({ComplexMatrix::Zero(c.m(), c.m()), y * y.adjoint()});
    }
    result.kind = ChannelKind::QC;
    result.witness = std::move(witness);
    return result;
}

ChannelClass detect_cq(const BipartiteMatrix &c, const Tolerances &tol) {
    BipartiteMatrix state = validated_state(c, tol);
    ChannelClass result;
    CanonicalDecomposition dec;
    try {
        dec = orthogonal_form(state, Side::A, tol);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::NotAOrthogonal) {
            throw;
        }
        result.diagnostics = e.diagnostics();
        return result;
    }
    if (!is_trace_preserving_choi(state, tol)) {
        result.kind = ChannelKind::OrthogonalOnly;
        return result;
    }

    // Trace preservation forces every A-side factor to be a bare projection,
    // so each splits into rank-one projections F_k^t sharing the same R.
    HolevoForm witness{c.m(), c.n(), {}};
    for (const ProductTerm &term : dec.terms) {
        for (const ComplexVector &x : range_basis(term.projection, tol)) {
            ComplexMatrix line = x * x.adjoint();
            witness.pairs.push_back({line.transpose(), term.b});
        }
    }
    result.kind = ChannelKind::CQ;
    result.witness = std::move(witness);
    return result;
}

}  // namespace sepdec
