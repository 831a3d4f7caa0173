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

#ifndef SEPDEC_MATRIX_IO_H
#define SEPDEC_MATRIX_IO_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sepdec/bipartite.h"

namespace sepdec {

/// Text matrix file:
///
///     # comments run from '#' to the end of the line
///     m n
///     mn rows of mn whitespace-separated complex literals
///
/// Literals are "a+bi", "a-bi", "a", "bi" with decimal or exponent notation.
/// Emission writes every entry as "%.17g%+.17gi", which round-trips doubles.
/// A "# seed: N" comment line is preserved as metadata.
struct MatrixFile {
    BipartiteMatrix t;
    std::optional<uint64_t> seed;
};

Complex parse_complex(std::string_view token);
std::string format_complex(Complex z);

MatrixFile parse_matrix_file(std::string_view text);
std::string emit_matrix_file(const MatrixFile &file);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace sepdec

#endif
