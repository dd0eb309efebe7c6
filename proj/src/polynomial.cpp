#include "expsolve/polynomial.hpp"

#include "expsolve/error.hpp"

#include <algorithm>
#include <sstream>

namespace expsolve {

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0)
        coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, unsigned power) {
    if (c == 0)
        return {};
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::constant_term() const { return coeff(0); }

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return {};
    Polynomial out = *this;
    const Rational lc = leading();
    for (auto& c : out.coeffs_)
        c /= lc;
    return out;
}

Polynomial Polynomial::without_constant() const {
    Polynomial out = *this;
    if (!out.coeffs_.empty()) {
        out.coeffs_[0] = 0;
        out.trim();
    }
    return out;
}

Rational Polynomial::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& rhs) {
    if (rhs == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= rhs;
    return *this;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(1);
    Polynomial b = base;
    while (exponent) {
        if (exponent & 1u)
            result *= b;
        exponent >>= 1;
        if (exponent)
            b *= b;
    }
    return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        throw DivisionByZero();
    if (num.degree() < den.degree())
        return {Polynomial(), num};
    std::vector<Rational> rem = num.coefficients();
    const auto& d = den.coefficients();
    const std::size_t dn = d.size();
    std::vector<Rational> quot(rem.size() - dn + 1);
    const Rational lc = d.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + dn - 1] / lc;
        quot[k] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j < dn; ++j)
            rem[k + j] -= q * d[j];
    }
    rem.resize(dn - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

// Yun's algorithm.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
    std::vector<Polynomial> out;
    if (p.degree() <= 0)
        return out;
    const Polynomial a = p.monic();
    const Polynomial da = a.derivative();
    Polynomial b = gcd(a, da);
    Polynomial c = divmod(a, b).first;
    Polynomial d = divmod(da, b).first - c.derivative();
    while (c.degree() > 0) {
        Polynomial g = gcd(c, d);
        out.push_back(g);
        c = divmod(c, g).first;
        d = divmod(d, g).first - c.derivative();
    }
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

bool GrowthLess::operator()(const Polynomial& a, const Polynomial& b) const {
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    std::size_t i = std::max(ca.size(), cb.size());
    while (i-- > 0) {
        const int s = cmp(i < ca.size() ? ca[i] : Rational(0), i < cb.size() ? cb[i] : Rational(0));
        if (s != 0)
            return s < 0;
    }
    return false;
}

namespace {

// c*z^k with |c| already taken; "z", "3z^2", "2z/3", "1/2".
std::string format_term(const Rational& abs_c, unsigned power) {
    std::ostringstream os;
    const Integer& num = abs_c.get_num();
    const Integer& den = abs_c.get_den();
    if (power == 0)
        return abs_c.get_str();
    if (num != 1)
        os << num.get_str();
    os << 'z';
    if (power > 1)
        os << '^' << power;
    if (den != 1)
        os << '/' << den.get_str();
    return os.str();
}

} // namespace

std::string to_string(const Polynomial& p, bool compact) {
    if (p.is_zero())
        return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        const bool negative = sgn(c[i]) < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? (compact ? "-" : " - ") : (compact ? "+" : " + ");
        out += format_term(abs(c[i]), static_cast<unsigned>(i));
    }
    return out;
}

} // namespace expsolve
