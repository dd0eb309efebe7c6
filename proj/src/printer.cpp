#include "expsolve/printer.hpp"

namespace expsolve {

namespace {

/// Signed rendering of r * tail; a leading '-' marks a negative term.
std::string product_term(const RationalFunction& r, const std::string& tail) {
    if (tail.empty())
        return r.is_polynomial() ? to_string(r.num()) : to_string(r);
    const bool negative = sgn(r.num().leading()) < 0;
    const RationalFunction rr = negative ? -r : r;
    std::string body;
    if (rr == RationalFunction(1)) {
        body = tail;
    } else if (rr.is_constant()) {
        const Rational c = *rr.constant_value();
        body = (is_integer(c) ? to_string(c) : "(" + to_string(c) + ")") + "*" + tail;
    } else if (rr.is_polynomial() && rr.num().leading() == 1 && rr.num() == Polynomial::monomial(1, rr.num().degree())) {
        body = to_string(rr.num()) + "*" + tail;
    } else {
        body = "(" + to_string(rr) + ")*" + tail;
    }
    return negative ? "-" + body : body;
}

void append_term(std::string& out, const std::string& term) {
    if (out.empty())
        out = term;
    else if (!term.empty() && term.front() == '-')
        out += " - " + term.substr(1);
    else
        out += " + " + term;
}

std::string exp_of(const Polynomial& g) { return "exp(" + to_string(g) + ")"; }

std::string factors(const std::vector<unsigned>& exponents) {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += derivative_name(static_cast<unsigned>(i));
        if (exponents[i] > 1)
            out += "^" + std::to_string(exponents[i]);
    }
    return out;
}

} // namespace

std::string derivative_name(unsigned order) {
    if (order <= 3)
        return "f" + std::string(order, '\'');
    return "f^(" + std::to_string(order) + ")";
}

std::string print_monomial(const DiffMonomial& m) { return product_term(m.coeff, factors(m.exponents)); }

std::string print_canonical(const ExpPolynomial& x) {
    if (x.is_zero())
        return "0";
    std::string out;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const auto& [g, coeff] = *it;
        for (auto ct = coeff.terms().rbegin(); ct != coeff.terms().rend(); ++ct) {
            const auto& [unit, r] = *ct;
            const Polynomial exponent = g + Polynomial(unit);
            append_term(out, exponent.is_zero() ? product_term(r, "") : product_term(r, exp_of(exponent)));
        }
    }
    return out;
}

std::string print_canonical(const EquationSpec& spec) {
    std::string lhs = "f^" + std::to_string(spec.n());
    if (spec.a() != 0) {
        std::vector<unsigned> e{spec.n() - 2, 1};
        append_term(lhs, product_term(RationalFunction(spec.a()), factors(e)));
    }
    for (const auto& m : spec.pd().monomials())
        append_term(lhs, print_monomial(m));

    std::string rhs;
    for (const auto& t : spec.rhs())
        append_term(rhs, product_term(t.p, exp_of(t.alpha)));
    return lhs + " = " + rhs;
}

} // namespace expsolve
