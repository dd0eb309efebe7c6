#pragma once

#include "expsolve/polynomial.hpp"

#include <optional>
#include <string>

namespace expsolve {

/// num/den in lowest terms with a monic denominator; zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(long c) : RationalFunction(Rational(c)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    /// Reduces to canonical form; throws DivisionByZero when den is zero.
    RationalFunction(const Polynomial& num, const Polynomial& den);

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    /// The value when constant.
    std::optional<Rational> constant_value() const;

    RationalFunction derivative() const;
    RationalFunction inverse() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    struct Canonical {};
    RationalFunction(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

RationalFunction pow(const RationalFunction& base, unsigned exponent);

/// "z/(z+1)" style rendering; polynomials print bare.
std::string to_string(const RationalFunction& r);

} // namespace expsolve
