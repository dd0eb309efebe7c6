#pragma once

// Exhaustive q e^P search over a small grid, used as an oracle for the solver.

#include "generators.hpp"

#include <vector>

namespace testgen {

using namespace expsolve;

struct Ansatz {
    RationalFunction q;
    Polynomial P;
};

/// Numerators with coefficients in {-1, 0, 1} and degree <= 3, denominators 1 and z + 1.
inline std::vector<RationalFunction> q_grid() {
    std::vector<RationalFunction> out;
    const std::vector<Polynomial> dens = {Polynomial(1), Polynomial::z() + Polynomial(1)};
    for (const auto& den : dens)
        for (int code = 0; code < 81; ++code) {
            std::vector<Rational> c;
            for (int i = 0, x = code; i < 4; ++i, x /= 3)
                c.push_back(x % 3 - 1);
            const Polynomial num(c);
            if (num.is_zero())
                continue;
            out.emplace_back(num, den);
        }
    return out;
}

/// Non-constant P with zero constant term and coefficients in {-1, 0, 1/5, 1/2, 1}, degree <= 3.
inline std::vector<Polynomial> p_grid() {
    const std::vector<Rational> values = {-1, 0, make_rational(1, 5), make_rational(1, 2), 1};
    std::vector<Polynomial> out;
    for (int code = 0; code < 125; ++code) {
        std::vector<Rational> c{0};
        for (int i = 0, x = code; i < 3; ++i, x /= 5)
            c.push_back(values[static_cast<std::size_t>(x % 5)]);
        const Polynomial P(c);
        if (!P.is_zero())
            out.push_back(P);
    }
    return out;
}

/// Every grid ansatz q e^P that solves `spec` exactly. `examined` counts full checks.
inline std::vector<Ansatz> brute_force_solutions(const EquationSpec& spec, std::size_t* examined = nullptr) {
    std::vector<Ansatz> hits;
    const auto qs = q_grid();
    const auto ps = p_grid();
    const ExpPolynomial rhs = rhs_expression(spec);
    for (const auto& P : ps) {
        // f^n contributes e^{nP}; skip exponents the right side cannot absorb before the full check.
        bool reachable = false;
        for (const auto& [g, c] : rhs.terms())
            if (g == P * Rational(spec.n()))
                reachable = true;
        if (!reachable)
            continue;
        for (const auto& q : qs) {
            const ExpPolynomial f = ep_from(q, P);
            if (examined)
                ++*examined;
            if (verify(spec, f).holds)
                hits.push_back({q, P});
        }
    }
    return hits;
}

/// Right-hand term p e^{alpha} with alpha = n P + c for a grid P, so the grid search is not vacuous.
inline RhsTerm iia_term(Gen& gen, unsigned n) {
    const auto ps = p_grid();
    const Polynomial P = gen.pick(ps);
    return {gen.nonzero_rational_function(2, 5), P * Rational(n) + Polynomial(gen.rational(3))};
}

} // namespace testgen
