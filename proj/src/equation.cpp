#include "expsolve/equation.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace expsolve {

EquationSpec::EquationSpec(unsigned n, Rational a, DiffPolynomial pd, std::vector<RhsTerm> rhs)
    : n_(n), a_(std::move(a)) {
    if (n_ < 2)
        throw InvalidSpec("n must be at least 2, got " + std::to_string(n_));

    std::vector<DiffMonomial> kept;
    const std::vector<unsigned> a_pattern = [&] {
        std::vector<unsigned> e(2, 0);
        e[0] = n_ - 2;
        e[1] = 1;
        return e;
    }();
    for (const auto& m : pd.monomials()) {
        if (m.exponents.size() == 1 && m.exponents[0] >= n_)
            throw InvalidSpec("P_d contains the pure power f^" + std::to_string(m.exponents[0]) + " (n = " + std::to_string(n_) + ")");
        if (m.exponents == a_pattern && m.coeff.is_constant()) {
            a_ += *m.coeff.constant_value();
            continue;
        }
        kept.push_back(m);
    }
    pd_ = DiffPolynomial(std::move(kept));

    std::map<Polynomial, RationalFunction, GrowthLess> merged;
    for (auto& term : rhs) {
        if (term.alpha.is_constant())
            throw InvalidSpec("exponent " + to_string(term.alpha) + " is constant");
        auto [it, inserted] = merged.try_emplace(term.alpha, term.p);
        if (!inserted) {
            it->second += term.p;
            ++merged_;
        }
    }
    for (auto it = merged.rbegin(); it != merged.rend(); ++it)
        if (!it->second.is_zero())
            rhs_.push_back({it->second, it->first});
    if (rhs_.empty())
        throw InvalidSpec("the right-hand side has no nonzero exponential term");
}

std::string to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::IA: return "IA";
    case CaseTag::IB: return "IB";
    case CaseTag::IIA: return "IIA";
    case CaseTag::IIB: return "IIB";
    case CaseTag::IIC: return "IIC";
    case CaseTag::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

HypothesisReport validate(const EquationSpec& spec) {
    HypothesisReport report;
    const long n = spec.n();
    const long k = static_cast<long>(spec.k());
    const long d = spec.d();
    const bool a_zero = spec.a() == 0;

    report.pairwise_deg_ok = true;
    const auto& rhs = spec.rhs();
    for (std::size_t i = 0; i < rhs.size(); ++i)
        for (std::size_t j = i + 1; j < rhs.size(); ++j)
            if ((rhs[i].alpha - rhs[j].alpha).degree() < 1) {
                report.pairwise_deg_ok = false;
                report.violations.push_back("deg(alpha_" + std::to_string(i + 1) + " - alpha_" + std::to_string(j + 1) + ") < 1");
            }

    long min_n = 0;
    long slack = 0;
    if (a_zero) {
        report.family = k == 1 ? CaseTag::IA : CaseTag::IB;
        min_n = k == 1 ? 2 : k + 2;
        slack = 1;
    } else {
        report.family = k == 1 ? CaseTag::IIA : k == 2 ? CaseTag::IIB : CaseTag::IIC;
        min_n = k == 1 ? 5 : k == 2 ? 6 : k + 4;
        slack = 3;
    }

    report.n_ok = n >= min_n;
    if (!report.n_ok)
        report.violations.push_back("n=" + std::to_string(n) + " < " + std::to_string(min_n) + " required by case " + to_string(report.family));

    const long bound = n - k - slack;
    report.bound_ok = d <= bound;
    if (!report.bound_ok)
        report.violations.push_back("d=" + std::to_string(d) + " > n-k-" + std::to_string(slack) + "=" + std::to_string(bound));

    if (spec.merged_terms() > 0)
        report.notes.push_back(std::to_string(spec.merged_terms()) + " right-hand term(s) with identical exponents merged");

    if (report.pairwise_deg_ok && report.n_ok && report.bound_ok)
        report.case_tag = report.family;
    return report;
}

ExpPolynomial rhs_expression(const EquationSpec& spec) {
    ExpPolynomial out;
    for (const auto& term : spec.rhs())
        out += ep_from(term.p, term.alpha);
    return out;
}

ExpPolynomial lhs_apply(const EquationSpec& spec, const ExpPolynomial& f) {
    ExpPolynomial out = ep_pow(f, spec.n());
    if (spec.a() != 0)
        out += ExpPolynomial(RationalFunction(spec.a())) * ep_pow(f, spec.n() - 2) * ep_differentiate(f);
    out += dp_evaluate(spec.pd(), f);
    return out;
}

namespace {

BigComplex power(const BigComplex& base, unsigned exponent, unsigned prec) {
    BigComplex out(Rational(1), Rational(0), prec);
    for (unsigned i = 0; i < exponent; ++i)
        out = out * base;
    return out;
}

BigComplex scalar(const Rational& r, unsigned prec) { return BigComplex(r, Rational(0), prec); }

} // namespace

BigFloat numeric_residual(const EquationSpec& spec, const ExpPolynomial& f, const BigComplex& z0, unsigned precision_bits) {
    const unsigned prec = precision_bits;
    const int max_order = std::max(1, spec.pd().order());
    std::vector<BigComplex> values;
    ExpPolynomial derivative = f;
    for (int i = 0; i <= max_order; ++i) {
        values.push_back(ep_eval_numeric(derivative, z0, prec));
        derivative = ep_differentiate(derivative);
    }

    BigComplex lhs = power(values[0], spec.n(), prec);
    if (spec.a() != 0)
        lhs = lhs + scalar(spec.a(), prec) * power(values[0], spec.n() - 2, prec) * values[1];
    for (const auto& m : spec.pd().monomials()) {
        BigComplex term = eval(m.coeff, z0);
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            term = term * power(values[i], m.exponents[i], prec);
        lhs = lhs + term;
    }

    BigComplex rhs(prec);
    for (const auto& t : spec.rhs())
        rhs = rhs + eval(t.p, z0) * exp(eval(t.alpha, z0));
    return abs(lhs - rhs);
}

VerificationReport verify(const EquationSpec& spec, const ExpPolynomial& f, const VerifyOptions& options) {
    VerificationReport report;
    report.residual = lhs_apply(spec, f) - rhs_expression(spec);
    report.holds = ep_is_zero(report.residual);

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> coord(-20, 20);
    const unsigned max_attempts = 50 * std::max(1u, options.numeric_samples);
    unsigned attempts = 0;
    while (report.numeric_checks.size() < options.numeric_samples && attempts++ < max_attempts) {
        const Rational re = make_rational(coord(rng), 16);
        const Rational im = make_rational(coord(rng), 16);
        const BigComplex z0(re, im, options.precision_bits);
        try {
            report.numeric_checks.push_back({re, im, numeric_residual(spec, f, z0, options.precision_bits)});
        } catch (const PoleAtSample& e) {
            report.warnings.push_back("skipped sample " + to_string(re) + (sgn(im) < 0 ? "" : "+") + to_string(im) + "i: " + e.what());
        }
    }
    if (report.numeric_checks.size() < options.numeric_samples)
        report.warnings.push_back("only " + std::to_string(report.numeric_checks.size()) + " of " + std::to_string(options.numeric_samples) + " numeric samples avoided poles");
    return report;
}

} // namespace expsolve
