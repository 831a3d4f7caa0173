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

#include "sepdec/report.h"

#include <cstdio>
#include <sstream>

namespace sepdec {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string &message) {
    throw Error(ErrorCode::ParseError, message);
}

const char *defect_name(FamilyDefect defect) {
    switch (defect) {
        case FamilyDefect::None:
            return "none";
        case FamilyDefect::NonNormal:
            return "non_normal";
        case FamilyDefect::NonCommuting:
            return "non_commuting";
    }
    return "none";
}

FamilyDefect defect_from_name(const std::string &name) {
    if (name == "non_normal") {
        return FamilyDefect::NonNormal;
    }
    if (name == "non_commuting") {
        return FamilyDefect::NonCommuting;
    }
    if (name == "none") {
        return FamilyDefect::None;
    }
    parse_error("unknown defect '" + name + "'");
}

Side side_from_name(const std::string &name) {
    if (name == "A") {
        return Side::A;
    }
    if (name == "B") {
        return Side::B;
    }
    parse_error("side must be 'A' or 'B'");
}

FaceMode face_mode_from_name(const std::string &name) {
    if (name == "disjoint_A") {
        return FaceMode::DisjointA;
    }
    if (name == "rank_one_A") {
        return FaceMode::RankOneA;
    }
    if (name == "none") {
        return FaceMode::None;
    }
    parse_error("unknown face mode '" + name + "'");
}

json diagnostics_to_json(const FamilyDiagnostics &d) {
    return {
        {"defect", defect_name(d.defect)},
        {"first", {d.first.row, d.first.col}},
        {"second", {d.second.row, d.second.col}},
        {"defect_norm", d.defect_norm},
        {"relative_defect", d.relative_defect},
        {"description", d.describe()},
    };
}

FamilyDiagnostics diagnostics_from_json(const json &j) {
    FamilyDiagnostics d;
    d.defect = defect_from_name(j.at("defect").get<std::string>());
    d.first = {j.at("first").at(0).get<size_t>(), j.at("first").at(1).get<size_t>()};
    d.second = {j.at("second").at(0).get<size_t>(), j.at("second").at(1).get<size_t>()};
    d.defect_norm = j.at("defect_norm").get<double>();
    d.relative_defect = j.at("relative_defect").get<double>();
    return d;
}

json faces_to_json(const FaceReport &f) {
    json summands = json::array();
    for (const FaceSummand &s : f.summands) {
        summands.push_back({
            {"rank_a", s.rank_a},
            {"rank_b", s.rank_b},
            {"face_dim", s.face_dim ? json(*s.face_dim) : json("unknown")},
            {"terms", s.terms},
        });
    }
    return {{"prerequisites_met", f.prerequisites_met}, {"mode", face_mode_name(f.mode)}, {"summands", summands}};
}

FaceReport faces_from_json(const json &j) {
    FaceReport f;
    f.prerequisites_met = j.at("prerequisites_met").get<bool>();
    f.mode = face_mode_from_name(j.at("mode").get<std::string>());
    for (const json &s : j.at("summands")) {
        FaceSummand summand;
        summand.rank_a = s.at("rank_a").get<size_t>();
        summand.rank_b = s.at("rank_b").get<size_t>();
        if (s.at("face_dim").is_number()) {
            summand.face_dim = s.at("face_dim").get<size_t>();
        }
        summand.terms = s.at("terms").get<std::vector<size_t>>();
        f.summands.push_back(std::move(summand));
    }
    return f;
}

json pure_to_json(const PureProductDecomposition &p) {
    json terms = json::array();
    for (const PureProductTerm &t : p.terms) {
        terms.push_back({{"weight", t.weight}, {"x", vector_to_json(t.x)}, {"y", vector_to_json(t.y)}});
    }
    return {{"unique", p.unique}, {"terms", terms}};
}

PureProductDecomposition pure_from_json(const json &j) {
    PureProductDecomposition p;
    p.unique = j.at("unique").get<bool>();
    for (const json &t : j.at("terms")) {
        p.terms.push_back({t.at("weight").get<double>(), vector_from_json(t.at("x")), vector_from_json(t.at("y"))});
    }
    return p;
}

std::string format_double(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6g", x);
    return buffer;
}

void print_matrix(std::ostream &out, const ComplexMatrix &m, const std::string &indent) {
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        out << indent << "[";
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            char buffer[64];
            std::snprintf(buffer, sizeof(buffer), "%s%10.6f%+10.6fi", j ? "  " : " ", m(i, j).real(), m(i, j).imag());
            out << buffer;
        }
        out << " ]\n";
    }
}

}  // namespace

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array()) {
        parse_error("matrix must be an array of rows");
    }
    size_t rows = j.size();
    size_t cols = rows == 0 ? 0 : j.at(0).size();
    ComplexMatrix m(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        if (!j[i].is_array() || j[i].size() != cols) {
            parse_error("matrix rows must all have the same length");
        }
        for (size_t k = 0; k < cols; k++) {
            const json &entry = j[i][k];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
                parse_error("matrix entries must be [re, im] pairs");
            }
            m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return m;
}

json vector_to_json(const ComplexVector &v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); k++) {
        out.push_back({v[k].real(), v[k].imag()});
    }
    return out;
}

ComplexVector vector_from_json(const json &j) {
    if (!j.is_array()) {
        parse_error("vector must be an array");
    }
    ComplexVector v(j.size());
    for (size_t k = 0; k < j.size(); k++) {
        const json &entry = j[k];
        if (!entry.is_array() || entry.size() != 2) {
            parse_error("vector entries must be [re, im] pairs");
        }
        v[k] = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    return v;
}

json tolerances_to_json(const Tolerances &tol) {
    return {
        {"herm", tol.herm},
        {"psd", tol.psd},
        {"rank", tol.rank},
        {"normal", tol.normal},
        {"commute", tol.commute},
        {"cluster", tol.cluster},
        {"recon", tol.recon},
        {"floor", tol.floor},
    };
}

Tolerances tolerances_from_json(const json &j) {
    Tolerances tol;
    tol.herm = j.value("herm", tol.herm);
    tol.psd = j.value("psd", tol.psd);
    tol.rank = j.value("rank", tol.rank);
    tol.normal = j.value("normal", tol.normal);
    tol.commute = j.value("commute", tol.commute);
    tol.cluster = j.value("cluster", tol.cluster);
    tol.recon = j.value("recon", tol.recon);
    tol.floor = j.value("floor", tol.floor);
    tol.validate();
    return tol;
}

json decomposition_to_json(const CanonicalDecomposition &c) {
    json terms = json::array();
    for (const ProductTerm &t : c.terms) {
        json term = {{"a", matrix_to_json(t.a)}, {"b", matrix_to_json(t.b)}};
        if (t.projection.size() > 0) {
            term["projection"] = matrix_to_json(t.projection);
        }
        terms.push_back(std::move(term));
    }
    return {
        {"side", side_name(c.side)},
        {"m", c.m},
        {"n", c.n},
        {"p", c.p()},
        {"orthogonal", c.orthogonal},
        {"residual", c.residual},
        {"terms", terms},
    };
}

CanonicalDecomposition decomposition_from_json(const json &j) {
    CanonicalDecomposition c;
    c.side = side_from_name(j.at("side").get<std::string>());
    c.m = j.at("m").get<size_t>();
    c.n = j.at("n").get<size_t>();
    c.orthogonal = j.value("orthogonal", false);
    c.residual = j.value("residual", 0.0);
    for (const json &t : j.at("terms")) {
        ProductTerm term{matrix_from_json(t.at("a")), matrix_from_json(t.at("b")), ComplexMatrix()};
        if (t.contains("projection")) {
            term.projection = matrix_from_json(t.at("projection"));
        }
        if ((size_t)term.a.rows() != c.m || (size_t)term.a.cols() != c.m || (size_t)term.b.rows() != c.n ||
            (size_t)term.b.cols() != c.n) {
            parse_error("term factor sizes do not match m and n");
        }
        c.terms.push_back(std::move(term));
    }
    return c;
}

json holevo_to_json(const HolevoForm &h) {
    json pairs = json::array();
    for (const HolevoPair &p : h.pairs) {
        pairs.push_back({{"F", matrix_to_json(p.f)}, {"R", matrix_to_json(p.r)}});
    }
    return {{"m", h.m}, {"n", h.n}, {"pairs", pairs}};
}

HolevoForm holevo_from_json(const json &j) {
    try {
        HolevoForm h;
        h.m = j.at("m").get<size_t>();
        h.n = j.at("n").get<size_t>();
        for (const json &p : j.at("pairs")) {
            h.pairs.push_back({matrix_from_json(p.at("F")), matrix_from_json(p.at("R"))});
        }
        return h;
    } catch (const json::exception &e) {
        parse_error(std::string("Holevo form: ") + e.what());
    }
}

json report_to_json(const DecompositionReport &report) {
    json j = {
        {"format", "sepdec-report"},
        {"version", 1},
        {"verdict", report.verdict},
        {"side", side_name(report.side)},
        {"m", report.m},
        {"n", report.n},
        {"tolerances", tolerances_to_json(report.tolerances)},
    };
    if (report.decomposition) {
        j["decomposition"] = decomposition_to_json(*report.decomposition);
    }
    if (report.pure) {
        j["pure_product"] = pure_to_json(*report.pure);
    }
    if (report.faces) {
        j["faces"] = faces_to_json(*report.faces);
    }
    if (report.diagnostics) {
        j["diagnostics"] = diagnostics_to_json(*report.diagnostics);
    }
    if (report.seed) {
        j["seed"] = *report.seed;
    }
    return j;
}

DecompositionReport report_from_json(const json &j) {
    try {
        if (j.value("format", std::string()) != "sepdec-report") {
            parse_error("not a sepdec report");
        }
        DecompositionReport r;
        r.verdict = j.at("verdict").get<std::string>();
        r.side = side_from_name(j.at("side").get<std::string>());
        r.m = j.at("m").get<size_t>();
        r.n = j.at("n").get<size_t>();
        r.tolerances = tolerances_from_json(j.at("tolerances"));
        if (j.contains("decomposition")) {
            r.decomposition = decomposition_from_json(j.at("decomposition"));
        }
        if (j.contains("pure_product")) {
            r.pure = pure_from_json(j.at("pure_product"));
        }
        if (j.contains("faces")) {
            r.faces = faces_from_json(j.at("faces"));
        }
        if (j.contains("diagnostics")) {
            r.diagnostics = diagnostics_from_json(j.at("diagnostics"));
        }
        if (j.contains("seed")) {
            r.seed = j.at("seed").get<uint64_t>();
        }
        return r;
    } catch (const json::exception &e) {
        parse_error(std::string("report: ") + e.what());
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ParseError) {
            throw;
        }
        parse_error(std::string("report: ") + e.what());
    }
}

std::string report_to_text(const DecompositionReport &report) {
    std::ostringstream out;
    out << "verdict: " << report.verdict << "\n";
    out << "side: " << side_name(report.side) << "  (m=" << report.m << ", n=" << report.n << ")\n";
    if (report.seed) {
        out << "seed: " << *report.seed << "\n";
    }
    if (report.diagnostics) {
        out << "diagnostics: " << report.diagnostics->describe() << "\n";
    }
    if (report.decomposition) {
        const CanonicalDecomposition &c = *report.decomposition;
        out << "terms: " << c.p() << "\n";
        out << "residual: " << format_double(c.residual) << "\n";
        for (size_t g = 0; g < c.p(); g++) {
            out << "term " << g + 1 << ":\n";
            out << "  A (" << c.m << "x" << c.m << "):\n";
            print_matrix(out, c.terms[g].a, "    ");
            out << "  B (" << c.n << "x" << c.n << "):\n";
            print_matrix(out, c.terms[g].b, "    ");
        }
    }
    if (report.pure) {
        out << "pure product terms: " << report.pure->terms.size()
            << " (unique: " << (report.pure->unique ? "yes" : "no") << ")\n";
        for (const PureProductTerm &t : report.pure->terms) {
            out << "  weight " << format_double(t.weight) << "\n";
        }
    }
    if (report.faces) {
        out << "face mode: " << face_mode_name(report.faces->mode) << "\n";
        for (const FaceSummand &s : report.faces->summands) {
            out << "  summand: rank_a=" << s.rank_a << " rank_b=" << s.rank_b
                << " face_dim=" << (s.face_dim ? std::to_string(*s.face_dim) : std::string("unknown")) << "\n";
        }
    }
    const Tolerances &t = report.tolerances;
    out << "tolerances: herm=" << format_double(t.herm) << " psd=" << format_double(t.psd)
        << " rank=" << format_double(t.rank) << " normal=" << format_double(t.normal)
        << " commute=" << format_double(t.commute) << " cluster=" << format_double(t.cluster)
        << " recon=" << format_double(t.recon) << " floor=" << format_double(t.floor) << "\n";
    return out.str();
}

}  // namespace sepdec
