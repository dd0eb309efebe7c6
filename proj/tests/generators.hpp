#pragma once

// Seeded random generators for property tests.

#include "expsolve/equation.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testgen {

using namespace expsolve;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    template <class T>
    const T& pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(integer(0, static_cast<long>(items.size()) - 1))];
    }

    /// num/den with num in [-range, range], den in [1, max_den].
    Rational rational(long range = 9, long max_den = 1) { return make_rational(integer(-range, range), integer(1, max_den)); }

    Rational nonzero_rational(long range = 9, long max_den = 1) {
        Rational r;
        do
            r = rational(range, max_den);
        while (r == 0);
        return r;
    }

    Polynomial polynomial(int max_degree, long range = 9, long max_den = 1) {
        std::vector<Rational> c;
        const long degree = integer(0, max_degree);
        for (long i = 0; i <= degree; ++i)
            c.push_back(rational(range, max_den));
        return Polynomial(std::move(c));
    }

    Polynomial nonzero_polynomial(int max_degree, long range = 9, long max_den = 1) {
        Polynomial p;
        do
            p = polynomial(max_degree, range, max_den);
        while (p.is_zero());
        return p;
    }

    /// Non-constant polynomial with zero constant term.
    Polynomial exponent(int max_degree, long range = 4, long max_den = 3) {
        Polynomial p;
        do
            p = polynomial(max_degree, range, max_den).without_constant();
        while (p.is_zero());
        return p;
    }

    RationalFunction rational_function(int max_degree, long range = 9) {
        const Polynomial num = polynomial(max_degree, range);
        const Polynomial den = coin() ? Polynomial(1) : nonzero_polynomial(max_degree, range);
        return RationalFunction(num, den);
    }

    RationalFunction nonzero_rational_function(int max_degree, long range = 9) {
        RationalFunction r;
        do
            r = rational_function(max_degree, range);
        while (r.is_zero());
        return r;
    }

    CoefficientSum coefficient_sum(int max_terms, int max_degree) {
        CoefficientSum out;
        const long terms = integer(0, max_terms);
        for (long i = 0; i < terms; ++i)
            out += CoefficientSum(rational_function(max_degree), rational(3, 2));
        return out;
    }

    /// Up to max_terms terms r e^{c} e^{g}; g may be zero.
    ExpPolynomial exp_polynomial(int max_terms, int exponent_degree, int coeff_degree = 2) {
        ExpPolynomial out;
        const long terms = integer(0, max_terms);
        for (long i = 0; i < terms; ++i) {
            const Polynomial g = coin() ? Polynomial() : exponent(exponent_degree);
            out += ExpPolynomial::term(CoefficientSum(rational_function(coeff_degree, 5), rational(2, 2)), g);
        }
        return out;
    }

    /// Random P_d with monomial degree in [0, max_degree] and derivative order <= max_order.
    DiffPolynomial diff_polynomial(int max_degree, int max_order, int max_monomials = 3, int coeff_degree = 2) {
        std::vector<DiffMonomial> monomials;
        const long count = integer(0, max_monomials);
        for (long m = 0; m < count; ++m) {
            std::vector<unsigned> e(static_cast<std::size_t>(max_order) + 1, 0);
            const long degree = integer(0, max_degree);
            for (long i = 0; i < degree; ++i)
                ++e[static_cast<std::size_t>(integer(0, max_order))];
            monomials.push_back({nonzero_rational_function(coeff_degree, 5), e});
        }
        return DiffPolynomial(std::move(monomials));
    }

    /// k right-hand terms with pairwise non-constant exponent differences.
    std::vector<RhsTerm> rhs_terms(std::size_t k, int exponent_degree, int p_degree) {
        std::vector<RhsTerm> out;
        while (out.size() < k) {
            Polynomial alpha = exponent(exponent_degree) + Polynomial(rational(3, 1));
            bool distinct = true;
            for (const auto& t : out)
                if ((t.alpha - alpha).degree() < 1)
                    distinct = false;
            if (distinct)
                out.push_back({nonzero_rational_function(p_degree, 5), alpha});
        }
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace testgen
