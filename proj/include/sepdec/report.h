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

#ifndef SEPDEC_REPORT_H
#define SEPDEC_REPORT_H

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "sepdec/channels.h"

namespace sepdec {

/// Result of decomposing one input. `verdict` is "B-independent" /
/// "A-independent" on success and the error name (for instance
/// "NotBIndependent") on rejection.
struct DecompositionReport {
    std::string verdict;
    Side side = Side::B;
    size_t m = 0;
    size_t n = 0;
    std::optional<CanonicalDecomposition> decomposition;
    std::optional<PureProductDecomposition> pure;
    std::optional<FaceReport> faces;
    std::optional<FamilyDiagnostics> diagnostics;
    Tolerances tolerances;
    std::optional<uint64_t> seed;
};

/// Matrices are arrays of rows, each entry a [re, im] pair.
nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j);
nlohmann::json vector_to_json(const ComplexVector &v);
ComplexVector vector_from_json(const nlohmann::json &j);

nlohmann::json tolerances_to_json(const Tolerances &tol);
Tolerances tolerances_from_json(const nlohmann::json &j);

nlohmann::json decomposition_to_json(const CanonicalDecomposition &c);
CanonicalDecomposition decomposition_from_json(const nlohmann::json &j);

nlohmann::json holevo_to_json(const HolevoForm &h);
HolevoForm holevo_from_json(const nlohmann::json &j);

nlohmann::json report_to_json(const DecompositionReport &report);
/// Throws ParseError on missing or malformed fields.
DecompositionReport report_from_json(const nlohmann::json &j);

std::string report_to_text(const DecompositionReport &report);

}  // namespace sepdec

#endif
