#include "expsolve/exp_polynomial.hpp"

namespace expsolve {

void ExpPolynomial::add_term(const Polynomial& exponent, const CoefficientSum& coeff) {
    if (coeff.is_zero())
        return;
    const Rational shift = exponent.constant_term();
    const CoefficientSum c = shift == 0 ? coeff : coeff.shifted(shift);
    const Polynomial g = shift == 0 ? exponent : exponent.without_constant();
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

ExpPolynomial ExpPolynomial::term(const CoefficientSum& coeff, const Polynomial& exponent) {
    ExpPolynomial out;
    out.add_term(exponent, coeff);
    return out;
}

CoefficientSum ExpPolynomial::coefficient(const Polynomial& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? CoefficientSum() : it->second;
}

ExpPolynomial ExpPolynomial::derivative() const {
    // (C e^g)' = (C' + C g') e^g
    ExpPolynomial out;
    for (const auto& [g, c] : terms_)
        out.add_term(g, c.derivative() + c * RationalFunction(g.derivative()));
    return out;
}

ExpPolynomial ExpPolynomial::operator-() const {
    ExpPolynomial out;
    for (const auto& [g, c] : terms_)
        out.terms_.emplace(g, -c);
    return out;
}

ExpPolynomial& ExpPolynomial::operator+=(const ExpPolynomial& rhs) {
    for (const auto& [g, c] : rhs.terms_)
        add_term(g, c);
    return *this;
}

ExpPolynomial& ExpPolynomial::operator-=(const ExpPolynomial& rhs) {
    for (const auto& [g, c] : rhs.terms_)
        add_term(g, -c);
    return *this;
}

ExpPolynomial operator*(const ExpPolynomial& a, const ExpPolynomial& b) {
    ExpPolynomial out;
    for (const auto& [ga, ca] : a.terms_)
        for (const auto& [gb, cb] : b.terms_)
            out.add_term(ga + gb, ca * cb);
    return out;
}

ExpPolynomial& ExpPolynomial::operator*=(const ExpPolynomial& rhs) { return *this = *this * rhs; }

ExpPolynomial ep_from(const RationalFunction& r, const Polynomial& g) {
    return ExpPolynomial::term(CoefficientSum(r), g);
}

ExpPolynomial ep_pow(const ExpPolynomial& x, unsigned n) {
    ExpPolynomial result(1);
    ExpPolynomial base = x;
    while (n) {
        if (n & 1u)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

ExpPolynomial ep_differentiate(const ExpPolynomial& x) { return x.derivative(); }

bool ep_is_zero(const ExpPolynomial& x) { return x.is_zero(); }

bool is_canonical(const ExpPolynomial& x) {
    for (const auto& [g, c] : x.terms()) {
        if (g.constant_term() != 0 || c.is_zero())
            return false;
        for (const auto& [unit, r] : c.terms())
            if (r.is_zero())
                return false;
    }
    return true;
}

} // namespace expsolve
