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

#include "sepdec/matrix_io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace sepdec {

namespace {

[[noreturn]] void parse_error(const std::string &message) {
    throw Error(ErrorCode::ParseError, message);
}

double parse_real(std::string_view text, std::string_view token) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    if (text.empty() || text == "-") {
        parse_error("malformed number in '" + std::string(token) + "'");
    }
    double value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        parse_error("malformed number in '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        parse_error("non-finite number in '" + std::string(token) + "'");
    }
    return value;
}

double parse_imaginary(std::string_view text, std::string_view token) {
    if (text.empty() || text == "+") {
        return 1;
    }
    if (text == "-") {
        return -1;
    }
    return parse_real(text, token);
}

std::vector<std::string> split_tokens(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

size_t parse_dimension(const std::string &token, size_t line_number) {
    size_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || value == 0) {
        parse_error("line " + std::to_string(line_number) + ": header needs two positive integers 'm n'");
    }
    return value;
}

std::optional<uint64_t> seed_comment(std::string_view comment) {
    constexpr std::string_view prefix = "seed:";
    size_t start = comment.find_first_not_of(" \t");
    if (start == std::string_view::npos || comment.substr(start, prefix.size()) != prefix) {
        return std::nullopt;
    }
    std::string_view rest = comment.substr(start + prefix.size());
    size_t digits = rest.find_first_not_of(" \t");
    if (digits == std::string_view::npos) {
        return std::nullopt;
    }
    rest = rest.substr(digits);
    uint64_t value = 0;
    auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

Complex parse_complex(std::string_view token) {
    if (token.empty()) {
        parse_error("empty complex literal");
    }
    char last = token.back();
    if (last != 'i' && last != 'j') {
        return {parse_real(token, token), 0};
    }
    std::string_view body = token.substr(0, token.size() - 1);
    // The imaginary part starts at the last sign that is neither leading nor
    // part of an exponent.
    size_t split = std::string_view::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0, parse_imaginary(body, token)};
    }
    return {parse_real(body.substr(0, split), token), parse_imaginary(body.substr(split), token)};
}

std::string format_complex(Complex z) {
    char buffer[80];
    std::snprintf(buffer, sizeof(buffer), "%.17g%+.17gi", z.real(), z.imag());
    return buffer;
}

MatrixFile parse_matrix_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    size_t line_number = 0;
    std::optional<uint64_t> seed;
    std::optional<std::pair<size_t, size_t>> dims;
    std::vector<std::vector<std::string>> rows;

    while (std::getline(in, raw)) {
        line_number++;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) {
            if (auto s = seed_comment(std::string_view(raw).substr(hash + 1))) {
                seed = s;
            }
            raw.resize(hash);
        }
        std::vector<std::string> tokens = split_tokens(raw);
        if (tokens.empty()) {
            continue;
        }
        if (!dims) {
            if (tokens.size() != 2) {
                parse_error("line " + std::to_string(line_number) + ": header needs two positive integers 'm n'");
            }
            dims = {parse_dimension(tokens[0], line_number), parse_dimension(tokens[1], line_number)};
            continue;
        }
        size_t d = dims->first * dims->second;
        if (tokens.size() != d) {
            parse_error(
                "line " + std::to_string(line_number) + ": expected " + std::to_string(d) + " entries, found " +
                std::to_string(tokens.size()));
        }
        rows.push_back(std::move(tokens));
    }
    if (!dims) {
        parse_error("missing 'm n' header");
    }
    size_t d = dims->first * dims->second;
    if (rows.size() != d) {
        parse_error("expected " + std::to_string(d) + " matrix rows, found " + std::to_string(rows.size()));
    }
    ComplexMatrix mat(d, d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            mat(i, j) = parse_complex(rows[i][j]);
        }
    }
    return {BipartiteMatrix(dims->first, dims->second, std::move(mat)), seed};
}

std::string emit_matrix_file(const MatrixFile &file) {
    std::string out;
    if (file.seed) {
        out += "# seed: " + std::to_string(*file.seed) + "\n";
    }
    out += std::to_string(file.t.m()) + " " + std::to_string(file.t.n()) + "\n";
    const ComplexMatrix &mat = file.t.mat();
    for (Eigen::Index i = 0; i < mat.rows(); i++) {
        for (Eigen::Index j = 0; j < mat.cols(); j++) {
            if (j > 0) {
                out += ' ';
            }
            out += format_complex(mat(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        parse_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    }
    out << text;
}

}  // namespace sepdec
