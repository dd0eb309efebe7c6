#include "expsolve/numeric.hpp"

#include "expsolve/error.hpp"

#include <algorithm>
#include <vector>

namespace expsolve {

BigFloat::BigFloat(unsigned precision_bits) {
    mpfr_init2(value_, std::max<unsigned>(precision_bits, MPFR_PREC_MIN));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, unsigned precision_bits) : BigFloat(precision_bits) {
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other)
        mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
    std::vector<char> buf(64 + static_cast<std::size_t>(digits));
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
    return buf.data();
}

namespace {

mpfr_prec_t joint_precision(const BigFloat& a, const BigFloat& b) {
    return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

} // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(static_cast<unsigned>(joint_precision(a, b)));
    mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(static_cast<unsigned>(joint_precision(a, b)));
    mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(static_cast<unsigned>(joint_precision(a, b)));
    mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat out(static_cast<unsigned>(joint_precision(a, b)));
    mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

BigFloat exp(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_exp(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat cos(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_cos(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat sin(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_sin(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }

BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const BigFloat norm = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

BigComplex exp(const BigComplex& z) {
    const BigFloat magnitude = exp(z.re);
    return {magnitude * cos(z.im), magnitude * sin(z.im)};
}

BigFloat abs(const BigComplex& z) {
    BigFloat out(z.precision());
    mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return out;
}

BigComplex eval(const Polynomial& p, const BigComplex& z) {
    const unsigned prec = z.precision();
    BigComplex acc(prec);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + BigComplex(*it, Rational(0), prec);
    return acc;
}

bool near_root(const Polynomial& p, const BigComplex& z, double radius) {
    if (p.degree() <= 0)
        return p.is_zero();
    // p(z + w) = sum_k t_k w^k with t_k = p^(k)(z)/k!. If |t_0| beats the sum of the
    // other |t_k| radius^k, no root lies in the disc.
    const unsigned prec = z.precision();
    const BigFloat r(Rational(radius), prec);
    BigFloat tail(prec);
    BigFloat r_power(Rational(1), prec);
    Polynomial derivative = p;
    Rational factorial = 1;
    const BigFloat head = abs(eval(p, z));
    for (int k = 1; k <= p.degree(); ++k) {
        derivative = derivative.derivative();
        factorial *= k;
        r_power = r_power * r;
        tail = tail + abs(eval(derivative, z)) / BigFloat(factorial, prec) * r_power;
    }
    return !(head > tail);
}

BigComplex eval(const RationalFunction& r, const BigComplex& z) {
    if (near_root(r.den(), z))
        throw PoleAtSample("sample point within " + std::to_string(kPoleExclusionRadius) + " of a root of " + to_string(r.den()));
    if (r.is_polynomial())
        return eval(r.num(), z);
    return eval(r.num(), z) / eval(r.den(), z);
}

BigComplex eval(const CoefficientSum& c, const BigComplex& z) {
    const unsigned prec = z.precision();
    BigComplex acc(prec);
    for (const auto& [unit, r] : c.terms()) {
        BigComplex value = eval(r, z);
        if (unit != 0) {
            const BigFloat scale = exp(BigFloat(unit, prec));
            value = BigComplex(value.re * scale, value.im * scale);
        }
        acc = acc + value;
    }
    return acc;
}

BigComplex ep_eval_numeric(const ExpPolynomial& x, const BigComplex& z0, unsigned precision_bits) {
    if (precision_bits < 64)
        throw Error("ep_eval_numeric needs at least 64 bits of precision");
    BigComplex at(precision_bits);
    mpfr_set(at.re.get(), z0.re.get(), MPFR_RNDN);
    mpfr_set(at.im.get(), z0.im.get(), MPFR_RNDN);
    BigComplex acc(precision_bits);
    for (const auto& [g, c] : x.terms()) {
        BigComplex value = eval(c, at);
        if (!g.is_zero())
            value = value * exp(eval(g, at));
        acc = acc + value;
    }
    return acc;
}

} // namespace expsolve
