#include "expsolve/coefficient_sum.hpp"

#include "expsolve/error.hpp"

namespace expsolve {

void CoefficientSum::add_term(const Rational& unit, const RationalFunction& r) {
    if (r.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(unit, r);
    if (inserted)
        return;
    it->second += r;
    if (it->second.is_zero())
        terms_.erase(it);
}

std::optional<std::pair<Rational, RationalFunction>> CoefficientSum::single_term() const {
    if (terms_.size() != 1)
        return std::nullopt;
    return *terms_.begin();
}

CoefficientSum CoefficientSum::shifted(const Rational& shift) const {
    CoefficientSum out;
    for (const auto& [c, r] : terms_)
        out.terms_.emplace(Rational(c + shift), r);
    return out;
}

CoefficientSum CoefficientSum::derivative() const {
    CoefficientSum out;
    for (const auto& [c, r] : terms_)
        out.add_term(c, r.derivative());
    return out;
}

CoefficientSum CoefficientSum::operator-() const {
    CoefficientSum out;
    for (const auto& [c, r] : terms_)
        out.terms_.emplace(c, -r);
    return out;
}

CoefficientSum& CoefficientSum::operator+=(const CoefficientSum& rhs) {
    for (const auto& [c, r] : rhs.terms_)
        add_term(c, r);
    return *this;
}

CoefficientSum& CoefficientSum::operator-=(const CoefficientSum& rhs) {
    for (const auto& [c, r] : rhs.terms_)
        add_term(c, -r);
    return *this;
}

CoefficientSum operator*(const CoefficientSum& a, const CoefficientSum& b) {
    CoefficientSum out;
    for (const auto& [ca, ra] : a.terms_)
        for (const auto& [cb, rb] : b.terms_)
            out.add_term(Rational(ca + cb), ra * rb);
    return out;
}

CoefficientSum& CoefficientSum::operator*=(const CoefficientSum& rhs) { return *this = *this * rhs; }

CoefficientSum& CoefficientSum::operator*=(const RationalFunction& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, r] : terms_)
        r *= rhs;
    return *this;
}

CoefficientSum pow(const CoefficientSum& base, unsigned exponent) {
    if (auto single = base.single_term())
        return CoefficientSum(pow(single->second, exponent), Rational(single->first * exponent));
    CoefficientSum result(1);
    CoefficientSum b = base;
    while (exponent) {
        if (exponent & 1u)
            result *= b;
        exponent >>= 1;
        if (exponent)
            b *= b;
    }
    return result;
}

namespace {

std::optional<Integer> exact_integer_root(const Integer& x, unsigned n) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), n) == 0)
        return std::nullopt;
    return root;
}

// Root of a monic polynomial from its square-free decomposition.
std::optional<Polynomial> monic_root(const Polynomial& p, unsigned n) {
    Polynomial root(1);
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0)
            continue;
        const unsigned multiplicity = static_cast<unsigned>(i + 1);
        if (multiplicity % n != 0)
            return std::nullopt;
        root *= pow(factors[i], multiplicity / n);
    }
    return root;
}

} // namespace

NthRoot nth_root(const CoefficientSum& s, unsigned n) {
    if (n == 0)
        throw Error("nth_root needs n >= 1");
    auto single = s.single_term();
    if (!single)
        throw NotSingleTerm("nth_root needs exactly one e^c term, got " + std::to_string(s.size()));
    const auto& [unit, r] = *single;
    if (n == 1)
        return {r, unit};

    const std::string target = "q^" + std::to_string(n) + " = " + to_string(r);
    const auto num_root = monic_root(r.num().monic(), n);
    const auto den_root = monic_root(r.den(), n);
    if (!num_root || !den_root)
        throw NotPerfectPower(NotPerfectPower::Reason::Multiplicity, target + " (factor multiplicity not divisible by " + std::to_string(n) + ")");

    const Rational scale = r.num().leading();
    if (sgn(scale) < 0 && n % 2 == 0)
        throw NotPerfectPower(NotPerfectPower::Reason::Constant, target + " (even root of negative constant " + to_string(scale) + ")");
    const Integer abs_num = abs(scale.get_num());
    const auto root_num = exact_integer_root(abs_num, n);
    const auto root_den = exact_integer_root(scale.get_den(), n);
    if (!root_num || !root_den)
        throw NotPerfectPower(NotPerfectPower::Reason::Constant, target + " (constant " + to_string(scale) + " has no rational " + std::to_string(n) + "-th root)");
    Rational scale_root(*root_num, *root_den);
    scale_root.canonicalize();
    if (sgn(scale) < 0)
        scale_root = -scale_root;

    return {RationalFunction(*num_root * scale_root, *den_root), unit};
}

std::string to_string(const CoefficientSum& s) {
    if (s.is_zero())
        return "0";
    std::string out;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        if (!out.empty())
            out += " + ";
        const auto& [c, r] = *it;
        if (c == 0) {
            out += "(" + to_string(r) + ")";
        } else {
            out += "exp(" + to_string(c) + ")*(" + to_string(r) + ")";
        }
    }
    return out;
}

} // namespace expsolve
