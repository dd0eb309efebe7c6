#pragma once

#include "expsolve/exp_polynomial.hpp"

#include <vector>

namespace expsolve {

/// a_lambda * prod_i (f^(i))^{lambda_i}. `exponents` has no trailing zeros.
struct DiffMonomial {
    RationalFunction coeff;
    std::vector<unsigned> exponents;

    int degree() const;
    /// Highest derivative order that appears, -1 for a constant monomial.
    int order() const;

    friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
};

/// Differential polynomial P_d(z, f) with rational-function coefficients.
///
/// Monomials are kept sorted by (degree, exponent vector) descending with unique
/// exponent vectors and nonzero coefficients, so structural equality is value equality.
class DiffPolynomial {
public:
    DiffPolynomial() = default;
    explicit DiffPolynomial(std::vector<DiffMonomial> monomials);

    /// coeff * f^(order)
    static DiffPolynomial derivative_term(const RationalFunction& coeff, unsigned order, unsigned power = 1);

    const std::vector<DiffMonomial>& monomials() const noexcept { return monomials_; }
    bool is_zero() const noexcept { return monomials_.empty(); }
    int order() const;

    /// Coefficient of the monomial with the given (trimmed) exponents, zero if absent.
    RationalFunction coefficient(const std::vector<unsigned>& exponents) const;

    DiffPolynomial& operator+=(const DiffPolynomial& rhs);
    friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { return a += b; }

    friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

private:
    std::vector<DiffMonomial> monomials_;
};

/// Max total degree over the monomials; -1 for the zero differential polynomial so
/// every bound "d <= n - k - c" holds vacuously.
int dp_degree(const DiffPolynomial& p);

/// P(z, f) with f^(i) computed once by repeated differentiation.
ExpPolynomial dp_evaluate(const DiffPolynomial& p, const ExpPolynomial& f);

} // namespace expsolve
