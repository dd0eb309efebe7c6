#pragma once

#include "expsolve/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace expsolve {

/// Dense univariate polynomial over Q in the variable z. coefficients()[i] is the
/// coefficient of z^i; the leading entry is never zero and the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(long constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial z() { return monomial(Rational(1), 1); }
    static Polynomial monomial(const Rational& c, unsigned power);

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of z^i, zero past the degree.
    Rational coeff(std::size_t i) const;

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    Rational leading() const;
    Rational constant_term() const;

    Polynomial derivative() const;
    Polynomial monic() const;
    /// The polynomial minus its constant term.
    Polynomial without_constant() const;
    Rational eval(const Rational& at) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
    friend Polynomial operator*(const Rational& a, Polynomial b) { return b *= a; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Square-free factors: result[i] is the product of the monic irreducible factors of
/// multiplicity i + 1. The input's leading coefficient is dropped.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// Total order comparing the behaviour at z -> +infinity: a < b iff the leading
/// coefficient of a - b is negative. Used to key exponents.
struct GrowthLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const;
};

/// DSL rendering, e.g. "z^2 + 2", "2z/3", "-z + 1". Compact drops the blanks
/// around + and - ("z+1"), which is how factors inside fractions print.
std::string to_string(const Polynomial& p, bool compact = false);

} // namespace expsolve
