#include "cli_commands.hpp"

#include "expsolve/elimination.hpp"
#include "expsolve/parser.hpp"
#include "expsolve/printer.hpp"
#include "expsolve/theorem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

namespace expsolve::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

/// Every sampled |LHS - RHS| must stay below this for the corpus numeric check.
const Rational kNumericTolerance(Integer(1), Integer("100000000000000000000"));

struct Options {
    std::string format = "text";
    unsigned numeric = 0;
    unsigned precision_bits = 128;
    std::string candidate;
    std::string path;
};

/// Unreadable input or bad arguments discovered after option parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A ParseError rendered against its source.
class Diagnostic : public std::runtime_error {
public:
    Diagnostic(const std::string& rendered, json detail) : std::runtime_error(rendered), detail_(std::move(detail)) {}
    const json& detail() const { return detail_; }

private:
    json detail_;
};

struct Outcome {
    int code = kSuccess;
    json payload;
    std::string text;
};

std::string read_file(const std::string& path) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec))
        throw UsageError("cannot read '" + path + "'");
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string error_kind(const ParseError& e) {
    if (dynamic_cast<const SyntaxError*>(&e))
        return "SyntaxError";
    if (dynamic_cast<const NonPolynomialExponent*>(&e))
        return "NonPolynomialExponent";
    if (dynamic_cast<const ShapeError*>(&e))
        return "ShapeError";
    return "ParseError";
}

template <class F>
auto parse_source(const std::string& text, const std::string& origin, F&& parse) {
    try {
        return parse(text);
    } catch (const ParseError& e) {
        const SourceSpan& s = e.span();
        std::size_t line_start = text.rfind('\n', s.start == 0 ? 0 : s.start - 1);
        line_start = (line_start == std::string::npos || s.start == 0) ? 0 : line_start + 1;
        if (s.start > 0 && text[s.start - 1] == '\n')
            line_start = s.start;
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos)
            line_end = text.size();
        const std::string line = text.substr(line_start, line_end - line_start);
        const std::size_t width = std::max<std::size_t>(1, std::min(s.end, line_end) - std::min(s.start, line_end));

        std::ostringstream rendered;
        rendered << origin << ":" << s.line << ":" << s.column << ": " << error_kind(e) << ": " << e.what() << "\n"
                 << "  " << line << "\n"
                 << "  " << std::string(s.column - 1, ' ') << std::string(width, '^') << "\n";
        json detail = {{"kind", error_kind(e)},
                       {"message", e.what()},
                       {"origin", origin},
                       {"span", {{"start", s.start}, {"end", s.end}, {"line", s.line}, {"column", s.column}}}};
        throw Diagnostic(rendered.str(), detail);
    }
}

EquationSpec load_equation(const std::string& path) {
    return parse_source(read_file(path), path, [](const std::string& t) { return parse_equation(t); });
}

ExpPolynomial load_candidate(const Options& opt) {
    std::string origin = "--candidate";
    std::string text = opt.candidate;
    std::error_code ec;
    if (text.empty()) {
        const fs::path sibling = fs::path(opt.path).replace_extension(".sol");
        if (!fs::is_regular_file(sibling, ec))
            throw UsageError("no --candidate given and no " + sibling.string() + " next to the equation");
        origin = sibling.string();
        text = read_file(origin);
    } else if (fs::is_regular_file(text, ec)) {
        origin = text;
        text = read_file(text);
    }
    return parse_source(text, origin, [](const std::string& t) { return parse_function(t); });
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (const auto& s : items)
        out += (out.empty() ? "" : sep) + s;
    return out;
}

// ---- hypotheses -----------------------------------------------------------

json hypothesis_json(const EquationSpec& spec, const HypothesisReport& r) {
    return {{"case", to_string(r.case_tag)},
            {"family", to_string(r.family)},
            {"n", spec.n()},
            {"a", to_string(spec.a())},
            {"k", spec.k()},
            {"d", spec.d()},
            {"pairwise_deg_ok", r.pairwise_deg_ok},
            {"n_ok", r.n_ok},
            {"bound_ok", r.bound_ok},
            {"violations", r.violations},
            {"notes", r.notes}};
}

std::string hypothesis_text(const EquationSpec& spec, const HypothesisReport& r) {
    std::ostringstream out;
    out << "equation: " << print_canonical(spec) << "\n"
        << "n = " << spec.n() << ", a = " << to_string(spec.a()) << ", k = " << spec.k() << ", d = " << spec.d() << "\n"
        << "case: " << to_string(r.case_tag);
    if (r.case_tag == CaseTag::NotApplicable)
        out << " (family " << to_string(r.family) << ")";
    out << "\n";
    for (const auto& v : r.violations)
        out << "violation: " << v << "\n";
    for (const auto& n : r.notes)
        out << "note: " << n << "\n";
    return out.str();
}

// ---- commands -------------------------------------------------------------

Outcome cmd_verify(const Options& opt) {
    const EquationSpec spec = load_equation(opt.path);
    const ExpPolynomial f = load_candidate(opt);
    const VerificationReport report = verify(spec, f, {opt.numeric, opt.precision_bits});

    Outcome o;
    o.code = report.holds ? kSuccess : kNegative;
    json checks = json::array();
    std::optional<BigFloat> worst;
    for (const auto& c : report.numeric_checks) {
        checks.push_back({{"re", to_string(c.re)}, {"im", to_string(c.im)}, {"abs_residual", c.magnitude.to_string(6)}});
        if (!worst || c.magnitude > *worst)
            worst = c.magnitude;
    }
    o.payload = {{"equation", print_canonical(spec)},
                 {"candidate", print_canonical(f)},
                 {"holds", report.holds},
                 {"residual", print_canonical(report.residual)},
                 {"numeric_checks", checks},
                 {"max_abs_residual", worst ? json(worst->to_string(6)) : json(nullptr)},
                 {"precision_bits", opt.precision_bits},
                 {"warnings", report.warnings}};

    std::ostringstream out;
    out << "equation: " << print_canonical(spec) << "\n"
        << "candidate: f = " << print_canonical(f) << "\n"
        << "holds: " << (report.holds ? "true" : "false") << "\n";
    if (!report.holds)
        out << "residual: " << print_canonical(report.residual) << "\n";
    if (!report.numeric_checks.empty())
        out << "numeric: " << report.numeric_checks.size() << " samples at " << opt.precision_bits
            << " bits, max |LHS - RHS| = " << worst->to_string(6) << "\n";
    for (const auto& w : report.warnings)
        out << "warning: " << w << "\n";
    o.text = out.str();
    return o;
}

Outcome cmd_classify(const Options& opt) {
    const EquationSpec spec = load_equation(opt.path);
    const HypothesisReport r = classify(spec);
    return {r.case_tag == CaseTag::NotApplicable ? kNegative : kSuccess, hypothesis_json(spec, r), hypothesis_text(spec, r)};
}

json candidate_json(const EquationSpec& spec, const SolutionCandidate& c) {
    json roles = json::array();
    for (const auto& r : c.assignment)
        roles.push_back({{"role", r.role}, {"term", r.rhs_index + 1}, {"alpha", to_string(spec.rhs()[r.rhs_index].alpha)}, {"multiplier", r.multiplier}});
    return {{"f", print_canonical(c.function())},
            {"case", to_string(c.case_tag)},
            {"q", to_string(c.q)},
            {"unit", to_string(c.unit)},
            {"P", to_string(c.P)},
            {"P_const", to_string(c.P_const)},
            {"roles", roles}};
}

Outcome cmd_solve(const Options& opt) {
    const EquationSpec spec = load_equation(opt.path);
    const HypothesisReport report = classify(spec);
    const SolveOutcome result = solve(spec);

    Outcome o;
    o.payload = {{"hypotheses", hypothesis_json(spec, report)}};
    std::ostringstream out;
    out << hypothesis_text(spec, report);

    if (const auto* c = std::get_if<Candidates>(&result)) {
        o.code = c->list.empty() ? kNegative : kSuccess;
        json list = json::array();
        out << "outcome: Candidates (" << c->list.size() << ")\n";
        for (const auto& cand : c->list) {
            list.push_back(candidate_json(spec, cand));
            out << "  f = " << print_canonical(cand.function()) << "   [case " << to_string(cand.case_tag) << "]\n"
                << "    q = " << to_string(cand.q) << ", unit = " << to_string(cand.unit) << ", P = " << to_string(cand.P)
                << ", P_const = " << to_string(cand.P_const) << "\n    roles:";
            for (const auto& r : cand.assignment)
                out << " " << r.role << "=term " << r.rhs_index + 1 << " (j=" << r.multiplier << ")";
            out << "\n";
        }
        for (const auto& n : c->notes)
            out << "  note: " << n << "\n";
        o.payload["kind"] = "Candidates";
        o.payload["candidates"] = list;
        o.payload["notes"] = c->notes;
    } else if (const auto* n = std::get_if<NoSolution>(&result)) {
        o.code = kSuccess;
        out << "outcome: NoSolution (case IIA)\n  " << n->reason << "\n";
        o.payload["kind"] = "NoSolution";
        o.payload["reason"] = n->reason;
    } else if (std::get_if<NotApplicableOutcome>(&result)) {
        o.code = kNegative;
        out << "outcome: NotApplicable\n";
        o.payload["kind"] = "NotApplicable";
    } else if (const auto* u = std::get_if<Unresolved>(&result)) {
        o.code = kNegative;
        out << "outcome: Unresolved\n";
        for (const auto& s : u->constraints)
            out << "  constraint: " << s << "\n";
        o.payload["kind"] = "Unresolved";
        o.payload["constraints"] = u->constraints;
    }
    o.text = out.str();
    return o;
}

Outcome cmd_diagnose(const Options& opt) {
    const EquationSpec spec = load_equation(opt.path);
    Outcome o;
    if (spec.k() < 2) {
        o.code = kNegative;
        o.payload = {{"k", spec.k()}, {"error", "diagnosis needs k >= 2"}};
        o.text = "diagnosis needs k >= 2 (this equation has k = " + std::to_string(spec.k()) + ")\n";
        return o;
    }
    const CramerReport cramer = cramer_identity_check(spec);
    const RankReport ranks = rank_report(spec);

    json matrix = json::array();
    std::ostringstream out;
    out << "equation: " << print_canonical(spec) << "\n"
        << "coefficient matrix (row t: coefficients of exp(alpha_i) in h^(t)):\n";
    for (std::size_t t = 0; t < cramer.matrix.rows(); ++t) {
        json row = json::array();
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < cramer.matrix.cols(); ++i) {
            cells.push_back(to_string(cramer.matrix(t, i)));
            row.push_back(cells.back());
        }
        matrix.push_back(row);
        out << "  [" << join(cells, ", ") << "]\n";
    }
    std::vector<std::string> cofactors;
    for (const auto& c : cramer.cofactors)
        cofactors.push_back(to_string(c));

    out << "D0 = " << to_string(cramer.d0) << "\n";
    if (cramer.degenerate)
        out << "DEGENERATE: D0 vanishes identically; the identity D0*exp(alpha_1) = D1 cannot be used to solve for exp(alpha_1)\n";
    out << "first-column cofactors: [" << join(cofactors, ", ") << "]\n"
        << "D1 = " << print_canonical(cramer.d1) << "\n"
        << "rank: coefficient " << ranks.rank_coeff << ", augmented " << ranks.rank_augmented << "\n"
        << "identity D0*exp(alpha_1) = D1: " << (cramer.holds ? "holds" : "FAILS") << "\n";

    o.code = cramer.holds ? kSuccess : kNegative;
    o.payload = {{"k", spec.k()},
                 {"matrix", matrix},
                 {"d0", to_string(cramer.d0)},
                 {"degenerate", cramer.degenerate},
                 {"cofactors", cofactors},
                 {"d1", print_canonical(cramer.d1)},
                 {"identity_holds", cramer.holds},
                 {"rank_coeff", ranks.rank_coeff},
                 {"rank_augmented", ranks.rank_augmented}};
    o.text = out.str();
    return o;
}

struct ManifestEntry {
    std::string name;
    std::string expected;
    std::string solution;
};

struct EntryResult {
    ManifestEntry entry;
    std::string observed;
    bool pass = false;
    std::string detail;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<ManifestEntry> read_manifest(const fs::path& dir) {
    std::vector<ManifestEntry> out;
    std::error_code ec;
    if (!fs::is_regular_file(dir / "MANIFEST", ec))
        return out;
    std::istringstream lines(read_file((dir / "MANIFEST").string()));
    std::string line;
    while (std::getline(lines, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        ManifestEntry e;
        fields >> e.name >> e.expected;
        std::getline(fields, e.solution);
        e.solution = trim(e.solution);
        if (e.expected != "holds" && e.expected != "fails")
            throw UsageError("MANIFEST entry '" + e.name + "': verdict must be holds or fails");
        out.push_back(std::move(e));
    }
    return out;
}

EntryResult run_entry(const fs::path& dir, const ManifestEntry& entry, const Options& opt) {
    EntryResult r{entry, "error", false, ""};
    try {
        const std::string eq_path = (dir / (entry.name + ".eq")).string();
        const std::string sol_path = (dir / (entry.name + ".sol")).string();
        const EquationSpec spec = load_equation(eq_path);
        const ExpPolynomial f = parse_source(read_file(sol_path), sol_path, [](const std::string& t) { return parse_function(t); });
        const VerificationReport report = verify(spec, f, {opt.numeric, opt.precision_bits});
        r.observed = report.holds ? "holds" : "fails";
        r.pass = r.observed == entry.expected;
        std::vector<std::string> details;
        if (!r.pass)
            details.push_back("expected " + entry.expected);

        if (report.holds && opt.numeric > 0) {
            const BigFloat tolerance(kNumericTolerance, opt.precision_bits);
            for (const auto& c : report.numeric_checks)
                if (!(c.magnitude < tolerance)) {
                    r.pass = false;
                    details.push_back("numeric residual " + c.magnitude.to_string(4) + " at " + to_string(c.re) + "+" + to_string(c.im) + "i");
                    break;
                }
            if (report.numeric_checks.size() < opt.numeric) {
                r.pass = false;
                details.push_back("too few numeric samples");
            }
        }

        if (!entry.solution.empty()) {
            const ExpPolynomial want = parse_source(entry.solution, "MANIFEST", [](const std::string& t) { return parse_function(t); });
            const SolveOutcome solved = solve(spec);
            bool found = false;
            if (const auto* c = std::get_if<Candidates>(&solved))
                found = std::any_of(c->list.begin(), c->list.end(), [&](const SolutionCandidate& s) { return s.function() == want; });
            if (found) {
                details.push_back("solver recovers " + print_canonical(want));
            } else {
                r.pass = false;
                details.push_back("solver did not recover " + print_canonical(want));
            }
        }
        r.detail = join(details, "; ");
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

Outcome cmd_corpus(const Options& opt) {
    const fs::path dir(opt.path);
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw UsageError("'" + opt.path + "' is not a directory");
    const auto entries = read_manifest(dir);

    Outcome o;
    if (entries.empty()) {
        o.code = kNegative;
        o.payload = {{"directory", opt.path}, {"total", 0}, {"passed", 0}, {"entries", json::array()}, {"error", "no entries"}};
        o.text = "no entries\n";
        return o;
    }

    std::vector<std::future<EntryResult>> jobs;
    for (const auto& e : entries)
        jobs.push_back(std::async(std::launch::async, run_entry, dir, e, opt));

    std::size_t passed = 0;
    json list = json::array();
    std::ostringstream out;
    for (auto& job : jobs) {
        const EntryResult r = job.get();
        passed += r.pass ? 1 : 0;
        list.push_back({{"name", r.entry.name},
                        {"expected", r.entry.expected},
                        {"observed", r.observed},
                        {"expected_solution", r.entry.solution.empty() ? json(nullptr) : json(r.entry.solution)},
                        {"pass", r.pass},
                        {"detail", r.detail}});
        out << (r.pass ? "PASS  " : "FAIL  ") << r.entry.name << "  expected " << r.entry.expected << ", observed " << r.observed;
        if (!r.detail.empty())
            out << "  (" << r.detail << ")";
        out << "\n";
    }
    out << passed << "/" << entries.size() << " passed\n";
    o.code = passed == entries.size() ? kSuccess : kNegative;
    o.payload = {{"directory", opt.path}, {"total", entries.size()}, {"passed", passed}, {"numeric_samples", opt.numeric}, {"entries", list}};
    o.text = out.str();
    return o;
}

void add_common(CLI::App* sub, Options& opt, const std::string& what) {
    sub->add_option("path", opt.path, what)->required();
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_numeric(CLI::App* sub, Options& opt) {
    sub->add_option("--numeric", opt.numeric, "Random sample points for a floating-point cross-check (default 0)")
        ->check(CLI::Range(0u, 10000u));
    sub->add_option("--precision-bits", opt.precision_bits, "Working precision of the numeric check (default 128)")
        ->check(CLI::Range(64u, 65536u));
}

} // namespace

CliResult run(const std::vector<std::string>& args) {
    Options opt;
    CLI::App app{"Exact verifier, classifier and solver for f^n + a f^(n-2) f' + P_d(z,f) = sum p_i(z) exp(alpha_i(z))", "expsolve"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* verify_cmd = app.add_subcommand("verify", "Decide whether a candidate solves an equation");
    add_common(verify_cmd, opt, "Equation file (.eq)");
    verify_cmd->add_option("--candidate", opt.candidate, "Candidate expression or .sol file (default: sibling .sol)");
    add_numeric(verify_cmd, opt);

    auto* solve_cmd = app.add_subcommand("solve", "Classify and construct every q(z)exp(P(z)) solution");
    add_common(solve_cmd, opt, "Equation file (.eq)");

    auto* classify_cmd = app.add_subcommand("classify", "Report which case of the classification applies");
    add_common(classify_cmd, opt, "Equation file (.eq)");

    auto* diagnose_cmd = app.add_subcommand("diagnose", "Show the elimination system, D0, ranks and the Cramer identity");
    add_common(diagnose_cmd, opt, "Equation file (.eq)");

    auto* corpus_cmd = app.add_subcommand("corpus", "Run every entry listed in DIR/MANIFEST");
    add_common(corpus_cmd, opt, "Corpus directory");
    add_numeric(corpus_cmd, opt);

    std::vector<std::string> argv_storage{"expsolve"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage)
        argv.push_back(s.data());

    CliResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        return {code == 0 ? kSuccess : kUsage, out.str(), err.str()};
    }

    std::string command;
    for (auto* sub : app.get_subcommands())
        command = sub->get_name();
    const bool as_json = opt.format == "json";
    const auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    };
    auto envelope = [&](const json& outcome) {
        return json{{"command", command}, {"version", kVersion}, {"inputs", json::array({opt.path})}, {"outcome", outcome}, {"timing_ms", elapsed_ms()}};
    };

    try {
        Outcome o;
        if (command == "verify")
            o = cmd_verify(opt);
        else if (command == "solve")
            o = cmd_solve(opt);
        else if (command == "classify")
            o = cmd_classify(opt);
        else if (command == "diagnose")
            o = cmd_diagnose(opt);
        else
            o = cmd_corpus(opt);
        result.exit_code = o.code;
        if (as_json)
            result.out = envelope(o.payload).dump(2) + "\n";
        else
            result.out = o.text;
    } catch (const Diagnostic& d) {
        result.exit_code = kUsage;
        result.err = d.what();
        if (as_json)
            result.out = envelope(json{{"error", d.detail()}}).dump(2) + "\n";
    } catch (const std::exception& e) {
        result.exit_code = kUsage;
        result.err = std::string("error: ") + e.what() + "\n";
        if (as_json)
            result.out = envelope(json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}).dump(2) + "\n";
    }
    return result;
}

} // namespace expsolve::cli
