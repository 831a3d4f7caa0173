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

#include "sepdec/commands.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepdec/generators.h"
#include "sepdec/matrix_io.h"
#include "sepdec/report.h"

namespace sepdec {

namespace {

struct ToleranceField {
    const char *name;
    double Tolerances::*field;
};

constexpr ToleranceField kToleranceFields[] = {
    {"herm", &Tolerances::herm},       {"psd", &Tolerances::psd},         {"rank", &Tolerances::rank},
    {"normal", &Tolerances::normal},   {"commute", &Tolerances::commute}, {"cluster", &Tolerances::cluster},
    {"recon", &Tolerances::recon},     {"floor", &Tolerances::floor},
};

double parse_tolerance(const std::string &text, const std::string &what) {
    double value = 0;
    const char *begin = text.data();
    const char *end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw Error(ErrorCode::InvalidArgument, what + " is not a number: '" + text + "'");
    }
    return value;
}

std::string upper(std::string s) {
    for (char &c : s) {
        c = (char)std::toupper((unsigned char)c);
    }
    return s;
}

/// Options shared by every subcommand.
struct CommonOptions {
    std::optional<double> overrides[std::size(kToleranceFields)];
    std::string format = "text";
    std::string out_path;

    void add_tolerances(CLI::App *app) {
        for (size_t k = 0; k < std::size(kToleranceFields); k++) {
            std::string flag = std::string("--tol-") + kToleranceFields[k].name;
            app->add_option(flag, overrides[k], std::string("override the ") + kToleranceFields[k].name + " tolerance");
        }
    }
    void add_format(CLI::App *app) {
        app->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    }
    void add_out(CLI::App *app) {
        app->add_option("--out", out_path, "write the output to a file instead of stdout");
    }

    Tolerances tolerances(const EnvLookup &env) const {
        Tolerances tol = tolerances_from_env(env);
        for (size_t k = 0; k < std::size(kToleranceFields); k++) {
            if (overrides[k]) {
                tol.*(kToleranceFields[k].field) = *overrides[k];
            }
        }
        tol.validate();
        return tol;
    }
};

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

Side parse_side(const std::string &s) {
    return s == "A" ? Side::A : Side::B;
}

BipartiteMatrix load_matrix(const std::string &path) {
    return parse_matrix_file(read_text_file(path)).t;
}

bool is_rejection(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotBIndependent:
        case ErrorCode::NotAIndependent:
        case ErrorCode::NotBOrthogonal:
        case ErrorCode::NotAOrthogonal:
        case ErrorCode::NotCommutingFamily:
        case ErrorCode::VerificationFailed:
            return true;
        default:
            return false;
    }
}

int cmd_decompose(
    const std::string &input, const std::string &side_text, const CommonOptions &opts, const EnvLookup &env,
    std::ostream &out) {
    Tolerances tol = opts.tolerances(env);
    MatrixFile file = parse_matrix_file(read_text_file(input));
    BipartiteMatrix state = validated_state(file.t, tol);

    DecompositionReport report;
    report.side = parse_side(side_text);
    report.m = state.m();
    report.n = state.n();
    report.tolerances = tol;
    report.seed = file.seed;
    int code = kExitSuccess;
    try {
        CanonicalDecomposition c = independent_form(state, report.side, tol);
        report.verdict = report.side == Side::B ? "B-independent" : "A-independent";
        report.pure = pure_product_decomposition(c, tol);
        report.faces = face_summary(c, tol);
        report.decomposition = std::move(c);
    } catch (const Error &e) {
        if (!is_rejection(e.code())) {
            throw;
        }
        report.verdict = error_name(e.code());
        report.diagnostics = e.diagnostics();
        code = kExitRejected;
    }

    std::string text = opts.format == "json" ? report_to_json(report).dump(2) + "\n" : report_to_text(report);
    emit(text, opts.out_path, out);
    return code;
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

int cmd_check(
    const std::string &input, const std::string &test, const std::string &side_text, const CommonOptions &opts,
    const EnvLookup &env, std::ostream &out) {
    Tolerances tol = opts.tolerances(env);
    BipartiteMatrix t = load_matrix(input);
    Side side = parse_side(side_text);
    std::string line;
    bool accepted = false;

    if (test == "b-independent" || test == "b-orthogonal") {
        bool orthogonal = test == "b-orthogonal";
        std::string label = std::string(side_name(side)) + (orthogonal ? "-orthogonal" : "-independent");
        try {
            BipartiteMatrix state = validated_state(t, tol);
            CanonicalDecomposition c = orthogonal ? orthogonal_form(state, side, tol) : independent_form(state, side, tol);
            accepted = true;
            line = label + ": yes (p=" + std::to_string(c.p()) + ")";
        } catch (const Error &e) {
            if (!is_rejection(e.code())) {
                throw;
            }
            line = label + ": no";
            if (e.diagnostics()) {
                line += " (" + e.diagnostics()->describe() + ")";
            }
        }
    } else if (test == "marginal-rank") {
        MarginalRankResult r = marginal_rank_separability(t, tol);
        switch (r.verdict) {
            case MarginalRankVerdict::Separable:
                accepted = true;
                line = "separable: yes (p=" + std::to_string(r.decomposition->p()) + ")";
                break;
            case MarginalRankVerdict::Entangled:
                line = "separable: no";
                break;
            case MarginalRankVerdict::NotMarginalRank:
                line = "separable: n/a (marginal rank condition fails)";
                break;
        }
    } else if (test == "qc" || test == "cq") {
        BipartiteMatrix state = validated_state(t, tol);
        ChannelClass cls = test == "qc" ? detect_qc(state, tol) : detect_cq(state, tol);
        ChannelKind wanted = test == "qc" ? ChannelKind::QC : ChannelKind::CQ;
        accepted = cls.kind == wanted;
        line = std::string(test == "qc" ? "QC: " : "CQ: ") + yes_no(accepted);
        if (cls.kind == ChannelKind::OrthogonalOnly) {
            line += " (orthogonal but not trace preserving)";
        }
    } else {
        BipartiteMatrix state = validated_state(t, tol);
        accepted = ppt_check(state, tol);
        line = "PPT: " + yes_no(accepted);
    }

    out << line << "\n";
    return accepted ? kExitSuccess : kExitRejected;
}

void verification_failed(const std::string &check, const std::string &detail) {
    throw Error(ErrorCode::VerificationFailed, check + ": " + detail);
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

int cmd_verify(
    const std::string &report_path, const std::string &input, const CommonOptions &opts, const EnvLookup &env,
    std::ostream &out) {
    Tolerances tol = opts.tolerances(env);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(report_path));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("report is not valid JSON: ") + e.what());
    }
    DecompositionReport report = report_from_json(j);
    BipartiteMatrix t = load_matrix(input);
    if (!report.decomposition) {
        verification_failed("terms", "the report carries no decomposition (verdict " + report.verdict + ")");
    }
    const CanonicalDecomposition &c = *report.decomposition;
    if (c.m != t.m() || c.n != t.n()) {
        throw Error(ErrorCode::ShapeMismatch, "report and input dimensions differ");
    }
    if (c.p() == 0) {
        verification_failed("terms", "the decomposition is empty");
    }

    ComplexMatrix sum = ComplexMatrix::Zero(t.mat().rows(), t.mat().cols());
    for (const ProductTerm &term : c.terms) {
        sum += kron(term.a, term.b);
    }
    double residual = relative_residual(sum, t.mat());
    if (residual > tol.recon) {
        verification_failed("residual", "relative residual " + fmt(residual) + " exceeds " + fmt(tol.recon));
    }

    for (size_t g = 0; g < c.p(); g++) {
        for (const ComplexMatrix *f : {&c.terms[g].a, &c.terms[g].b}) {
            if (hermiticity_defect(*f) > tol.herm) {
                verification_failed("positivity", "factor of term " + std::to_string(g + 1) + " is not Hermitian");
            }
            HermitianEigenSystem eig = herm_eig(*f, tol);
            double smallest = eig.values[eig.values.size() - 1];
            if (eig.values[0] <= 0 || smallest < -tol.psd * eig.values[0]) {
                verification_failed("positivity", "factor of term " + std::to_string(g + 1) + " is not PSD");
            }
        }
    }

    for (size_t g = 0; g < c.p(); g++) {
        double trace_error = std::abs(c.normalized(g).trace() - Complex(1));
        if (trace_error > tol.recon * (double)std::max(c.m, c.n)) {
            verification_failed("trace", "term " + std::to_string(g + 1) + " has trace error " + fmt(trace_error));
        }
    }

    std::vector<ComplexMatrix> independent;
    for (size_t g = 0; g < c.p(); g++) {
        independent.push_back(c.independent(g));
    }
    if (!images_independent(independent, tol)) {
        verification_failed("independence", "images of the independent factors are not independent");
    }

    if (c.orthogonal) {
        for (size_t x = 0; x < c.p(); x++) {
            for (size_t y = x + 1; y < c.p(); y++) {
                double overlap = (independent[x] * independent[y]).norm() / (independent[x].norm() * independent[y].norm());
                if (overlap > tol.recon * std::sqrt((double)independent[x].rows())) {
                    verification_failed(
                        "orthogonality", "terms " + std::to_string(x + 1) + " and " + std::to_string(y + 1) +
                                             " overlap by " + fmt(overlap));
                }
            }
        }
    }
    std::vector<const ComplexMatrix *> projections;
    for (const ProductTerm &term : c.terms) {
        if (term.projection.size() > 0) {
            projections.push_back(&term.projection);
        }
    }
    if (projections.size() == c.p()) {
        double bound = tol.recon * std::sqrt((double)projections[0]->rows()) * 10;
        for (size_t x = 0; x < c.p(); x++) {
            const ComplexMatrix &q = *projections[x];
            if ((q * q - q).norm() > bound || hermiticity_defect(q) > tol.herm) {
                verification_failed("orthogonality", "Q of term " + std::to_string(x + 1) + " is not a projection");
            }
            for (size_t y = x + 1; y < c.p(); y++) {
                if ((q * *projections[y]).norm() > bound) {
                    verification_failed(
                        "orthogonality", "Q of terms " + std::to_string(x + 1) + " and " + std::to_string(y + 1) +
                                             " are not orthogonal");
                }
            }
        }
    }

    for (size_t x = 0; x < c.p(); x++) {
        for (size_t y = x + 1; y < c.p(); y++) {
            if ((c.normalized(x) - c.normalized(y)).norm() <= tol.cluster) {
                verification_failed(
                    "distinctness",
                    "terms " + std::to_string(x + 1) + " and " + std::to_string(y + 1) + " share a unit-trace factor");
            }
        }
    }

    out << "verified: " << c.p() << " terms, residual " << fmt(residual) << "\n";
    return kExitSuccess;
}

struct GenerateOptions {
    std::string kind;
    size_t m = 2;
    size_t n = 2;
    size_t p = 2;
    std::vector<size_t> ranks;
    std::vector<size_t> a_ranks;
    size_t schmidt_rank = 2;
    bool uniform = false;
    uint64_t seed = 0;
    std::string truth_path;
};

int cmd_generate(const GenerateOptions &g, const CommonOptions &opts, std::ostream &out) {
    MatrixFile file{BipartiteMatrix(1, 1, ComplexMatrix::Identity(1, 1)), std::nullopt};
    std::optional<nlohmann::json> truth;
    const std::string &kind = g.kind;
    if (kind == "b-independent") {
        std::vector<size_t> ranks = g.ranks.empty() ? std::vector<size_t>(g.p, 1) : g.ranks;
        GeneratedInstance inst = generate_b_independent(g.m, g.n, ranks, g.seed, g.a_ranks);
        file = {inst.t, g.seed};
        truth = decomposition_to_json(inst.truth);
    } else if (kind == "marginal-rank") {
        GeneratedInstance inst = generate_marginal_rank(g.m, g.n, g.p, g.seed);
        file = {inst.t, g.seed};
        truth = decomposition_to_json(inst.truth);
    } else if (kind == "entangled") {
        EntangledInstance inst = generate_entangled_pure(g.m, g.n, g.schmidt_rank, g.seed, g.uniform);
        file = {inst.t, g.seed};
        truth = nlohmann::json{{"schmidt", inst.schmidt}};
    } else if (kind == "bell") {
        file.t = bell_state();
    } else if (kind == "qc" || kind == "cq") {
        HolevoForm h = kind == "qc" ? generate_qc_form(g.m, g.n, g.seed) : generate_cq_form(g.m, g.n, g.seed);
        file = {choi_of_holevo(h), g.seed};
        truth = holevo_to_json(h);
    } else if (kind == "identity") {
        file.t = identity_channel_choi(g.n);
    } else if (kind == "dephasing") {
        file.t = choi_of_holevo(dephasing_form(g.n));
    } else {
        file.t = choi_of_holevo(depolarizing_form(g.m, g.n));
    }
    if (!g.truth_path.empty()) {
        if (!truth) {
            throw Error(ErrorCode::InvalidArgument, "kind '" + kind + "' has no ground truth to write");
        }
        write_text_file(g.truth_path, truth->dump(2) + "\n");
    }
    emit(emit_matrix_file(file), opts.out_path, out);
    return kExitSuccess;
}

int cmd_choi(
    const std::string &form_path, const std::string &channel, size_t m, size_t n, const CommonOptions &opts,
    const EnvLookup &env, std::ostream &out) {
    Tolerances tol = opts.tolerances(env);
    HolevoForm h;
    if (!form_path.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_text_file(form_path));
        } catch (const nlohmann::json::exception &e) {
            throw Error(ErrorCode::ParseError, std::string("Holevo form is not valid JSON: ") + e.what());
        }
        h = holevo_from_json(j);
    } else if (channel == "dephasing") {
        h = dephasing_form(n);
    } else if (channel == "depolarizing") {
        h = depolarizing_form(m, n);
    } else if (channel == "identity") {
        emit(emit_matrix_file({identity_channel_choi(n), std::nullopt}), opts.out_path, out);
        return kExitSuccess;
    } else {
        throw Error(ErrorCode::InvalidArgument, "give a Holevo form file or --channel");
    }
    h.validate(tol);
    emit(emit_matrix_file({choi_of_holevo(h), std::nullopt}), opts.out_path, out);
    return kExitSuccess;
}

}  // namespace

std::optional<std::string> process_env(const std::string &name) {
    const char *value = std::getenv(name.c_str());
    if (value == nullptr) {
        return std::nullopt;
    }
    return std::string(value);
}

Tolerances tolerances_from_env(const EnvLookup &env) {
    Tolerances tol;
    for (const ToleranceField &f : kToleranceFields) {
        std::string name = "SEPDEC_TOL_" + upper(f.name);
        if (std::optional<std::string> value = env(name)) {
            tol.*(f.field) = parse_tolerance(*value, name);
        }
    }
    tol.validate();
    return tol;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const EnvLookup &env) {
    CLI::App app{"Certifies B-independent separable states and computes their canonical decompositions.", "sepdec"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string input;
    std::string side = "B";
    auto add_side = [&](CLI::App *sub) {
        sub->add_option("--side", side, "side carrying the independent factors")->check(CLI::IsMember({"A", "B"}));
    };

    CLI::App *decompose = app.add_subcommand("decompose", "decompose a state into its canonical product terms");
    decompose->add_option("input", input, "matrix file")->required();
    add_side(decompose);
    opts.add_tolerances(decompose);
    opts.add_format(decompose);
    opts.add_out(decompose);

    std::string test;
    CLI::App *check = app.add_subcommand("check", "answer one yes/no question about a matrix");
    check->add_option("input", input, "matrix file")->required();
    check->add_option("--test", test, "question to answer")
        ->required()
        ->check(CLI::IsMember({"b-independent", "b-orthogonal", "marginal-rank", "qc", "cq", "ppt"}));
    add_side(check);
    opts.add_tolerances(check);

    std::string report_path;
    CLI::App *verify = app.add_subcommand("verify", "independently check a decomposition report against its input");
    verify->add_option("report", report_path, "JSON report")->required();
    verify->add_option("input", input, "matrix file")->required();
    opts.add_tolerances(verify);

    GenerateOptions gen;
    CLI::App *generate = app.add_subcommand("generate", "write a seeded test instance as a matrix file");
    generate->add_option("kind", gen.kind, "instance kind")
        ->required()
        ->check(CLI::IsMember(
            {"b-independent", "marginal-rank", "entangled", "bell", "qc", "cq", "identity", "dephasing",
             "depolarizing"}));
    generate->add_option("--m", gen.m, "dimension of the A factor");
    generate->add_option("--n", gen.n, "dimension of the B factor");
    generate->add_option("--p", gen.p, "number of terms");
    generate->add_option("--ranks", gen.ranks, "ranks of the B factors")->delimiter(',');
    generate->add_option("--a-ranks", gen.a_ranks, "ranks of the A factors")->delimiter(',');
    generate->add_option("--schmidt-rank", gen.schmidt_rank, "Schmidt rank of an entangled instance");
    generate->add_flag("--uniform", gen.uniform, "equal Schmidt coefficients");
    generate->add_option("--seed", gen.seed, "64-bit seed");
    generate->add_option("--truth", gen.truth_path, "write the ground truth as JSON to this file");
    opts.add_out(generate);

    std::string form_path;
    std::string channel;
    size_t choi_m = 2;
    size_t choi_n = 2;
    CLI::App *choi = app.add_subcommand("choi", "write the Choi matrix of a channel");
    choi->add_option("form", form_path, "Holevo form JSON file");
    choi->add_option("--channel", channel, "built-in channel")
        ->check(CLI::IsMember({"identity", "dephasing", "depolarizing"}));
    choi->add_option("--m", choi_m, "input dimension");
    choi->add_option("--n", choi_n, "output dimension");
    opts.add_tolerances(choi);
    opts.add_out(choi);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        if (decompose->parsed()) {
            return cmd_decompose(input, side, opts, env, out);
        }
        if (check->parsed()) {
            return cmd_check(input, test, side, opts, env, out);
        }
        if (verify->parsed()) {
            return cmd_verify(report_path, input, opts, env, out);
        }
        if (generate->parsed()) {
            return cmd_generate(gen, opts, out);
        }
        return cmd_choi(form_path, channel, choi_m, choi_n, opts, env, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        if (e.diagnostics()) {
            err << "  " << e.diagnostics()->describe() << "\n";
        }
        return is_rejection(e.code()) ? kExitRejected : kExitInputError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace sepdec
