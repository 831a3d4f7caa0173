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

#ifndef SEPDEC_CHANNELS_H
#define SEPDEC_CHANNELS_H

#include <optional>
#include <vector>

#include "sepdec/decompose.h"

namespace sepdec {

struct HolevoPair {
    ComplexMatrix f;  // m x m, PSD
    ComplexMatrix r;  // n x n, PSD with unit trace
};

/// Phi(X) = sum_k tr(F_k X) R_k.
struct HolevoForm {
    size_t m = 0;
    size_t n = 0;
    std::vector<HolevoPair> pairs;

    ComplexMatrix apply(const ComplexMatrix &x) const;
    /// Throws ShapeMismatch, NotPSD or InvalidArgument (tr R_k != 1).
    void validate(const Tolerances &tol = {}) const;
};

enum class ChannelKind { QC, CQ, OrthogonalOnly, None };

const char *channel_kind_name(ChannelKind kind);

struct ChannelClass {
    ChannelKind kind = ChannelKind::None;
    std::optional<HolevoForm> witness;
    std::optional<FamilyDiagnostics> diagnostics;
};

/// C = sum_k F_k^t (x) R_k, with ^t the entrywise transpose in the standard basis.
BipartiteMatrix choi_of_holevo(const HolevoForm &h);

/// Phi(X) = sum_ij X[i,j] C_ij for C = sum_ij E_ij (x) Phi(E_ij).
ComplexMatrix apply_channel_from_choi(const BipartiteMatrix &c, const ComplexMatrix &x);

/// ||tr_B C - I_m||_F <= tol.recon * sqrt(m).
bool is_trace_preserving_choi(const BipartiteMatrix &c, const Tolerances &tol = {});

/// QC when C is B-orthogonal and trace preserving. The witness has rank-one
/// orthogonal R_k summing to I_n; missing directions are padded with F = 0
/// and projections chosen from the complement by pivoted Gram-Schmidt on the
/// standard basis. OrthogonalOnly when B-orthogonal but not trace preserving.
ChannelClass detect_qc(const BipartiteMatrix &c, const Tolerances &tol = {});

/// CQ when C is A-orthogonal and trace preserving; the witness has rank-one
/// projections F_k summing to I_m.
ChannelClass detect_cq(const BipartiteMatrix &c, const Tolerances &tol = {});

}  // namespace sepdec

#endif
