#pragma once

#include "expsolve/coefficient_sum.hpp"

#include <map>

namespace expsolve {

/// Exponential polynomial  sum_g C_g(z) * e^{g(z)}  with CoefficientSum coefficients.
///
/// Canonical form: every exponent g has zero constant term (constants live in the
/// e^c units of C_g) and no coefficient is zero. Two canonical exponents then differ
/// by a non-constant polynomial, so the value is zero iff the map is empty.
class ExpPolynomial {
public:
    using Terms = std::map<Polynomial, CoefficientSum, GrowthLess>;

    ExpPolynomial() = default;
    ExpPolynomial(const CoefficientSum& c) { add_term(Polynomial(), c); }
    ExpPolynomial(const RationalFunction& r) : ExpPolynomial(CoefficientSum(r)) {}
    ExpPolynomial(const Polynomial& p) : ExpPolynomial(RationalFunction(p)) {}
    ExpPolynomial(long c) : ExpPolynomial(RationalFunction(c)) {}

    /// coeff * e^{exponent}; the exponent's constant term moves into the units.
    static ExpPolynomial term(const CoefficientSum& coeff, const Polynomial& exponent);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Coefficient of e^{g} for a canonical exponent g (zero when absent).
    CoefficientSum coefficient(const Polynomial& g) const;

    ExpPolynomial derivative() const;

    ExpPolynomial operator-() const;
    ExpPolynomial& operator+=(const ExpPolynomial& rhs);
    ExpPolynomial& operator-=(const ExpPolynomial& rhs);
    ExpPolynomial& operator*=(const ExpPolynomial& rhs);

    friend ExpPolynomial operator+(ExpPolynomial a, const ExpPolynomial& b) { return a += b; }
    friend ExpPolynomial operator-(ExpPolynomial a, const ExpPolynomial& b) { return a -= b; }
    friend ExpPolynomial operator*(const ExpPolynomial& a, const ExpPolynomial& b);

    friend bool operator==(const ExpPolynomial& a, const ExpPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ExpPolynomial& a, const ExpPolynomial& b) { return !(a == b); }

private:
    void add_term(const Polynomial& exponent, const CoefficientSum& coeff);

    Terms terms_;
};

/// r * e^{g}, canonicalized.
ExpPolynomial ep_from(const RationalFunction& r, const Polynomial& g);
ExpPolynomial ep_pow(const ExpPolynomial& x, unsigned n);
ExpPolynomial ep_differentiate(const ExpPolynomial& x);
/// Exact zero test; sound by independence of e^{g} over Q(z) for pairwise
/// non-constant exponent differences.
bool ep_is_zero(const ExpPolynomial& x);

/// True when every exponent has zero constant term and no coefficient is zero.
bool is_canonical(const ExpPolynomial& x);

} // namespace expsolve
