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

#include "sepdec/errors.h"

#include <cstdio>
#include <sstream>

namespace sepdec {

const char *error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::NonFinite:
            return "NonFinite";
        case ErrorCode::NotSquare:
            return "NotSquare";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::NotPSD:
            return "NotPSD";
        case ErrorCode::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::ZeroMatrix:
            return "ZeroMatrix";
        case ErrorCode::NotCommutingFamily:
            return "NotCommutingFamily";
        case ErrorCode::ClusterAmbiguity:
            return "ClusterAmbiguity";
        case ErrorCode::NotBOrthogonal:
            return "NotBOrthogonal";
        case ErrorCode::NotAOrthogonal:
            return "NotAOrthogonal";
        case ErrorCode::NotBIndependent:
            return "NotBIndependent";
        case ErrorCode::NotAIndependent:
            return "NotAIndependent";
        case ErrorCode::InfeasibleRanks:
            return "InfeasibleRanks";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::VerificationFailed:
            return "VerificationFailed";
        case ErrorCode::NumericalFailure:
            return "NumericalFailure";
    }
    return "Unknown";
}

std::string format_number(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3e", x);
    return buffer;
}

std::string FamilyDiagnostics::describe() const {
    std::ostringstream out;
    switch (defect) {
        case FamilyDefect::None:
            return "normal commuting family";
        case FamilyDefect::NonNormal:
            out << "block (" << first.row << "," << first.col << ") is not normal";
            break;
        case FamilyDefect::NonCommuting:
            out << "blocks (" << first.row << "," << first.col << ") and (" << second.row << "," << second.col
                << ") do not commute";
            break;
    }
    out << " (defect " << defect_norm << ", " << relative_defect << "x threshold)";
    return out.str();
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {
}

Error::Error(ErrorCode code, const std::string &message, FamilyDiagnostics diagnostics)
    : std::runtime_error(std::string(error_name(code)) + ": " + message + ": " + diagnostics.describe()),
      code_(code),
      diagnostics_(std::move(diagnostics)) {
}

}  // namespace sepdec
