// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "brute_force.hpp"
#include "generators.hpp"
#include "support.hpp"

#include "expsolve/elimination.hpp"
#include "expsolve/parser.hpp"
#include "expsolve/printer.hpp"
#include "expsolve/theorem.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace expsolve;
using testgen::Gen;

namespace {

constexpr double kCorpusSeconds = 5.0;
constexpr double kSolveSeconds = 1.0;
constexpr double kCramerSeconds = 30.0;
constexpr unsigned kNumericSamples = 10;
constexpr unsigned kPrecisionBits = 128;
const Rational kNumericTolerance = make_rational(1, 100000) * make_rational(1, 1000000000) * make_rational(1, 1000000);  // 1e-20

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string stem(int i) { return "ex2_" + std::to_string(i); }
EquationSpec load_eq(const std::string& s) { return parse_equation(testgen::read_text(testgen::corpus_path(s + ".eq"))); }
ExpPolynomial load_sol(const std::string& s) { return parse_function(testgen::read_text(testgen::corpus_path(s + ".sol"))); }

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

Verdict corpus_exactness() {
    Verdict v;
    const auto start = Clock::now();
    int held = 0;
    for (int i = 1; i <= 8; ++i) {
        const bool ok = verify(load_eq(stem(i)), load_sol(stem(i))).holds;
        held += ok ? 1 : 0;
        v.require(ok, stem(i));
    }
    const double t = seconds_since(start);
    v.require(t < kCorpusSeconds, "runtime");
    v.detail << " " << held << "/8 hold in " << t << " s";
    return v;
}

Verdict solver_recovery() {
    Verdict v;
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"ex2_2", "(z/(z+1))*exp(z^2 + 2)"}, {"ex2_3", "exp(2z/3)"}, {"ex2_4", "exp(2z/7)"}};
    for (const auto& [name, expected] : cases) {
        const auto start = Clock::now();
        const SolveOutcome out = solve(load_eq(name));
        const double t = seconds_since(start);
        bool found = false;
        if (const auto* c = std::get_if<Candidates>(&out))
            for (const auto& cand : c->list)
                found = found || cand.function() == parse_function(expected);
        v.require(found, name + " recovers " + expected);
        v.require(t < kSolveSeconds, name + " runtime");
        v.detail << " " << name << " " << t * 1000 << " ms;";
    }
    return v;
}

EquationSpec random_iia(Gen& gen) {
    for (;;) {
        const unsigned n = static_cast<unsigned>(gen.integer(5, 7));
        try {
            EquationSpec spec(n, gen.nonzero_rational(5, 3), gen.diff_polynomial(static_cast<int>(n) - 4, 2, 3, 1), {testgen::iia_term(gen, n)});
            if (validate(spec).case_tag == CaseTag::IIA)
                return spec;
        } catch (const InvalidSpec&) {
        }
    }
}

Verdict iia_nonexistence() {
    Verdict v;
    Gen gen(2024);
    std::vector<EquationSpec> specs{load_eq("iia")};
    for (int i = 0; i < 4; ++i)
        specs.push_back(random_iia(gen));
    int agree = 0;
    std::size_t examined = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const bool none = std::holds_alternative<NoSolution>(solve(specs[i]));
        std::size_t before = examined;
        const bool brute_empty = testgen::brute_force_solutions(specs[i], &examined).empty();
        v.require(examined > before, "grid reaches spec " + std::to_string(i));
        v.require(none, "NoSolution for spec " + std::to_string(i));
        v.require(brute_empty, "empty brute force for spec " + std::to_string(i));
        agree += none && brute_empty ? 1 : 0;
    }
    v.detail << " " << agree << "/5 specs: NoSolution and none of " << testgen::q_grid().size() * testgen::p_grid().size()
             << " grid ansatze per spec verifies (" << examined << " reached the exact check)";
    return v;
}

Verdict sharpness() {
    Verdict v;
    const std::vector<std::pair<int, std::string>> cases = {
        {5, "d=2 > n-k-1=1"}, {6, "d=2 > n-k-1=1"}, {7, "d=1 > n-k-1=0"}, {8, "d=2 > n-k-3=1"}};
    for (const auto& [i, violation] : cases) {
        const EquationSpec spec = load_eq(stem(i));
        const HypothesisReport r = classify(spec);
        const bool named = std::find(r.violations.begin(), r.violations.end(), violation) != r.violations.end();
        v.require(r.case_tag == CaseTag::NotApplicable && named, stem(i) + " violates " + violation);
        v.require(verify(spec, load_sol(stem(i))).holds, stem(i) + " solution verifies");
    }
    v.detail << " 2.5-2.8 NotApplicable with the stated bound, each f still verifies";
    return v;
}

Verdict cramer() {
    Verdict v;
    const auto start = Clock::now();
    const CramerReport ex = cramer_identity_check(load_eq("ex2_1"));
    v.require(ex.d0 == RationalFunction(-98) && ex.holds, "ex2_1 D0 = -98 and identity");
    Gen gen(5150);
    int checked = 0;
    int attempts = 0;
    while (checked < 50 && attempts < 500) {
        ++attempts;
        const auto terms = gen.rhs_terms(static_cast<std::size_t>(gen.integer(2, 4)), 3, 2);
        const CramerReport r = cramer_identity_check(terms);
        if (r.degenerate)
            continue;
        v.require(r.holds, "random spec " + std::to_string(checked));
        ++checked;
    }
    v.require(checked == 50, "50 nondegenerate specs");
    const double t = seconds_since(start);
    v.require(t < kCramerSeconds, "runtime");
    v.detail << " D0=" << to_string(ex.d0) << ", " << checked << " random specs in " << t << " s";
    return v;
}

Verdict properties() {
    Verdict v;
    Gen gen(777);
    int leibniz = 0, ring = 0, idem = 0, trip = 0, roots = 0;
    for (int i = 0; i < 200; ++i) {
        const ExpPolynomial f = gen.exp_polynomial(3, 3), g = gen.exp_polynomial(3, 3);
        leibniz += (f * g).derivative() == f.derivative() * g + f * g.derivative() ? 1 : 0;
    }
    for (int i = 0; i < 200; ++i) {
        const ExpPolynomial a = gen.exp_polynomial(3, 2), b = gen.exp_polynomial(3, 2), c = gen.exp_polynomial(3, 2);
        ring += (a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && (a + b) + c == a + (b + c)) ? 1 : 0;
        ExpPolynomial rebuilt;
        for (const auto& [e, coeff] : a.terms())
            rebuilt += ExpPolynomial::term(coeff, e);
        idem += rebuilt == a && is_canonical(a) ? 1 : 0;
    }
    for (int i = 0; i < 100; ++i) {
        const ExpPolynomial x = gen.exp_polynomial(4, 3);
        trip += parse_function(print_canonical(x)) == x ? 1 : 0;
    }
    for (int i = 0; i < 50; ++i) {
        const unsigned n = static_cast<unsigned>(gen.integer(2, 7));
        const EquationSpec spec(n, gen.coin() ? Rational(0) : gen.nonzero_rational(5, 3), gen.diff_polynomial(static_cast<int>(n) - 2, 3),
                                gen.rhs_terms(static_cast<std::size_t>(gen.integer(1, 4)), 3, 2));
        trip += parse_equation(print_canonical(spec)) == spec ? 1 : 0;
    }
    for (int i = 0; i < 100; ++i) {
        const unsigned n = static_cast<unsigned>(gen.integer(2, 7));
        const CoefficientSum s(pow(gen.nonzero_rational_function(2, 4), n), gen.rational(4, 3));
        const NthRoot r = nth_root(s, n);
        roots += CoefficientSum(pow(r.q, n), r.c) == s ? 1 : 0;
    }
    v.require(leibniz == 200, "Leibniz");
    v.require(ring == 200, "ring laws");
    v.require(idem == 200, "idempotence");
    v.require(trip == 150, "round trip");
    v.require(roots == 100, "nth_root");
    v.detail << " Leibniz " << leibniz << "/200, ring " << ring << "/200, idempotence " << idem << "/200, round trip " << trip
             << "/150, nth_root " << roots << "/100";
    return v;
}

Verdict numeric() {
    Verdict v;
    const BigFloat tol(kNumericTolerance, kPrecisionBits);
    double worst = 0;
    std::size_t samples = 0;
    for (int i = 1; i <= 8; ++i) {
        VerifyOptions opt;
        opt.numeric_samples = kNumericSamples;
        opt.precision_bits = kPrecisionBits;
        const VerificationReport r = verify(load_eq(stem(i)), load_sol(stem(i)), opt);
        v.require(r.numeric_checks.size() == kNumericSamples, stem(i) + " sample count");
        for (const auto& c : r.numeric_checks) {
            ++samples;
            worst = std::max(worst, c.magnitude.to_double());
            v.require(c.magnitude < tol, stem(i) + " residual");
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    v.detail << " " << samples << " samples, max |residual| = " << buf << " (< 1e-20)";
    return v;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"1 corpus exactness", corpus_exactness}, {"2 solver recovery", solver_recovery}, {"3 IIA non-existence", iia_nonexistence},
        {"4 sharpness fixtures", sharpness},      {"5 Cramer machinery", cramer},         {"6 property suites", properties},
        {"7 numeric cross-check", numeric},
    };
    bool all = true;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail << " [exception: " << e.what() << "]";
        }
        all = all && v.pass;
        std::cout << (v.pass ? "PASS " : "FAIL ") << name << ":" << v.detail.str() << std::endl;
    }
    return all ? 0 : 1;
}
