#pragma once

#include "expsolve/exp_polynomial.hpp"

#include <mpfr.h>

#include <string>

namespace expsolve {

/// RAII wrapper over an mpfr_t with an explicit precision in bits.
class BigFloat {
public:
    explicit BigFloat(unsigned precision_bits = 128);
    BigFloat(const Rational& value, unsigned precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits.
    std::string to_string(int digits = 6) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }

private:
    mpfr_t value_;
};

BigFloat exp(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(unsigned precision_bits = 128) : re(precision_bits), im(precision_bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(const Rational& r, const Rational& i, unsigned precision_bits)
        : re(r, precision_bits), im(i, precision_bits) {}

    unsigned precision() const { return re.precision(); }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex exp(const BigComplex& z);
BigFloat abs(const BigComplex& z);

/// Points closer than this to a denominator root are rejected.
inline constexpr double kPoleExclusionRadius = 1e-6;

BigComplex eval(const Polynomial& p, const BigComplex& z);
/// True unless p provably has no root within `radius` of z (Taylor-coefficient bound).
bool near_root(const Polynomial& p, const BigComplex& z, double radius = kPoleExclusionRadius);
/// Throws PoleAtSample when z is near a root of the denominator.
BigComplex eval(const RationalFunction& r, const BigComplex& z);
BigComplex eval(const CoefficientSum& c, const BigComplex& z);

/// sum r(z0) e^{c} e^{g(z0)} at the given working precision (>= 64 bits).
BigComplex ep_eval_numeric(const ExpPolynomial& x, const BigComplex& z0, unsigned precision_bits = 128);

} // namespace expsolve
