#include "expsolve/rational_function.hpp"

#include "expsolve/error.hpp"

namespace expsolve {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        throw DivisionByZero();
    if (num.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = gcd(num, den);
    Polynomial n = divmod(num, g).first;
    Polynomial d = divmod(den, g).first;
    const Rational lc = d.leading();
    if (lc != 1) {
        n *= Rational(1 / lc);
        d *= Rational(1 / lc);
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

std::optional<Rational> RationalFunction::constant_value() const {
    if (!is_constant())
        return std::nullopt;
    return num_.constant_term();
}

RationalFunction RationalFunction::derivative() const {
    if (is_polynomial())
        return RationalFunction(num_.derivative());
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (den_ == rhs.den_)
        return *this = RationalFunction(num_ + rhs.num_, den_);
    return *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    if (den_ == rhs.den_)
        return *this = RationalFunction(num_ - rhs.num_, den_);
    return *this = RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    if (is_zero() || rhs.is_zero())
        return *this = RationalFunction();
    if (is_polynomial() && rhs.is_polynomial())
        return *this = RationalFunction(num_ * rhs.num_, Polynomial(1), Canonical{});
    return *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero())
        throw DivisionByZero();
    return *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction pow(const RationalFunction& base, unsigned exponent) {
    // Powers of coprime polynomials stay coprime.
    if (base.is_zero())
        return exponent == 0 ? RationalFunction(1) : RationalFunction();
    return RationalFunction(pow(base.num(), exponent), pow(base.den(), exponent));
}

namespace {

bool single_term(const Polynomial& p) {
    int nonzero = 0;
    for (const auto& c : p.coefficients())
        nonzero += (c != 0);
    return nonzero <= 1;
}

} // namespace

std::string to_string(const RationalFunction& r) {
    if (r.is_polynomial())
        return to_string(r.num(), true);
    std::string num = to_string(r.num(), true);
    // A lone monomial with a fractional coefficient ("2z/3") still needs parentheses
    // so the denominator does not attach to it.
    const bool wrap_num = !single_term(r.num()) || r.num().leading().get_den() != 1 || sgn(r.num().leading()) < 0;
    std::string den = to_string(r.den(), true);
    const bool wrap_den = !single_term(r.den()) || r.den().leading() != 1;
    return (wrap_num ? "(" + num + ")" : num) + "/" + (wrap_den ? "(" + den + ")" : den);
}

} // namespace expsolve
