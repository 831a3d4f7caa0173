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

#ifndef SEPDEC_ERRORS_H
#define SEPDEC_ERRORS_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sepdec {

enum class ErrorCode {
    InvalidArgument,
    NonFinite,
    NotSquare,
    NotHermitian,
    NotPSD,
    ShapeMismatch,
    ZeroMatrix,
    NotCommutingFamily,
    ClusterAmbiguity,
    NotBOrthogonal,
    NotAOrthogonal,
    NotBIndependent,
    NotAIndependent,
    InfeasibleRanks,
    ParseError,
    VerificationFailed,
    NumericalFailure,
};

const char *error_name(ErrorCode code);

/// "%.3e" formatting for numbers quoted in error messages.
std::string format_number(double x);

/// 1-based (row, col) position of a block in a BlockGrid.
struct BlockIndex {
    size_t row = 0;
    size_t col = 0;

    bool operator==(const BlockIndex &) const = default;
};

enum class FamilyDefect { None, NonNormal, NonCommuting };

/// Worst offender found while checking that a block family is normal and
/// commuting. For NonNormal only `first` is meaningful.
struct FamilyDiagnostics {
    FamilyDefect defect = FamilyDefect::None;
    BlockIndex first{};
    BlockIndex second{};
    double defect_norm = 0;      // ||MM^* - M^*M||_F or ||MN - NM||_F
    double relative_defect = 0;  // defect_norm divided by the threshold scale

    std::string describe() const;
};

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    Error(ErrorCode code, const std::string &message, FamilyDiagnostics diagnostics);

    ErrorCode code() const noexcept {
        return code_;
    }
    const std::optional<FamilyDiagnostics> &diagnostics() const noexcept {
        return diagnostics_;
    }

   private:
    ErrorCode code_;
    std::optional<FamilyDiagnostics> diagnostics_;
};

}  // namespace sepdec

#endif
