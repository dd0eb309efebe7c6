#pragma once

#include "expsolve/rational_function.hpp"

#include <map>
#include <optional>
#include <string>

namespace expsolve {

/// Finite formal sum  sum_j r_j(z) * e^{c_j}  with distinct rational c_j and nonzero r_j.
///
/// The numbers e^c for distinct rational c are linearly independent over Q(z)
/// (Lindemann-Weierstrass), so equality and the zero test are termwise on the map.
class CoefficientSum {
public:
    using Terms = std::map<Rational, RationalFunction>;

    CoefficientSum() = default;
    CoefficientSum(const RationalFunction& r) { add_term(Rational(0), r); }
    CoefficientSum(const Rational& c) : CoefficientSum(RationalFunction(c)) {}
    CoefficientSum(long c) : CoefficientSum(RationalFunction(c)) {}
    /// r * e^{unit}
    CoefficientSum(const RationalFunction& r, const Rational& unit) { add_term(unit, r); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// The single (unit, r) pair, if there is exactly one.
    std::optional<std::pair<Rational, RationalFunction>> single_term() const;
    /// Multiply by e^{shift}.
    CoefficientSum shifted(const Rational& shift) const;

    CoefficientSum derivative() const;

    CoefficientSum operator-() const;
    CoefficientSum& operator+=(const CoefficientSum& rhs);
    CoefficientSum& operator-=(const CoefficientSum& rhs);
    CoefficientSum& operator*=(const CoefficientSum& rhs);
    CoefficientSum& operator*=(const RationalFunction& rhs);

    friend CoefficientSum operator+(CoefficientSum a, const CoefficientSum& b) { return a += b; }
    friend CoefficientSum operator-(CoefficientSum a, const CoefficientSum& b) { return a -= b; }
    friend CoefficientSum operator*(const CoefficientSum& a, const CoefficientSum& b);
    friend CoefficientSum operator*(CoefficientSum a, const RationalFunction& b) { return a *= b; }

    friend bool operator==(const CoefficientSum& a, const CoefficientSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CoefficientSum& a, const CoefficientSum& b) { return !(a == b); }

private:
    void add_term(const Rational& unit, const RationalFunction& r);

    Terms terms_;
};

CoefficientSum pow(const CoefficientSum& base, unsigned exponent);

struct NthRoot {
    RationalFunction q;
    Rational c;  ///< q^n * e^c reproduces the input
};

/// Exact n-th root of a single-term coefficient r * e^{c0}: returns (q, c0) with q^n = r.
/// Throws NotSingleTerm, or NotPerfectPower when a square-free factor's multiplicity
/// is not divisible by n or the rational scale has no rational n-th root. For even n
/// the root with positive leading coefficient is returned; -q is the other one.
NthRoot nth_root(const CoefficientSum& s, unsigned n);

/// "7 + exp(3)*(z/(z+1))"-style debug rendering.
std::string to_string(const CoefficientSum& s);

} // namespace expsolve
