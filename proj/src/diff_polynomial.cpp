#include "expsolve/diff_polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace expsolve {

int DiffMonomial::degree() const { return static_cast<int>(std::accumulate(exponents.begin(), exponents.end(), 0u)); }

int DiffMonomial::order() const { return static_cast<int>(exponents.size()) - 1; }

namespace {

struct DegreeThenLex {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        const auto da = std::accumulate(a.begin(), a.end(), 0u);
        const auto db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db)
            return da > db;
        return a > b;
    }
};

using MonomialMap = std::map<std::vector<unsigned>, RationalFunction, DegreeThenLex>;

void trim(std::vector<unsigned>& e) {
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

std::vector<DiffMonomial> flatten(const MonomialMap& m) {
    std::vector<DiffMonomial> out;
    out.reserve(m.size());
    for (const auto& [e, c] : m)
        out.push_back({c, e});
    return out;
}

void accumulate_into(MonomialMap& m, std::vector<unsigned> e, const RationalFunction& c) {
    if (c.is_zero())
        return;
    trim(e);
    auto [it, inserted] = m.try_emplace(std::move(e), c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        m.erase(it);
}

} // namespace

DiffPolynomial::DiffPolynomial(std::vector<DiffMonomial> monomials) {
    MonomialMap m;
    for (auto& mono : monomials)
        accumulate_into(m, std::move(mono.exponents), mono.coeff);
    monomials_ = flatten(m);
}

DiffPolynomial DiffPolynomial::derivative_term(const RationalFunction& coeff, unsigned order, unsigned power) {
    std::vector<unsigned> e(order + 1, 0);
    e[order] = power;
    return DiffPolynomial({{coeff, std::move(e)}});
}

int DiffPolynomial::order() const {
    int out = -1;
    for (const auto& m : monomials_)
        out = std::max(out, m.order());
    return out;
}

RationalFunction DiffPolynomial::coefficient(const std::vector<unsigned>& exponents) const {
    for (const auto& m : monomials_)
        if (m.exponents == exponents)
            return m.coeff;
    return {};
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& rhs) {
    std::vector<DiffMonomial> all = monomials_;
    all.insert(all.end(), rhs.monomials_.begin(), rhs.monomials_.end());
    return *this = DiffPolynomial(std::move(all));
}

int dp_degree(const DiffPolynomial& p) {
    int d = -1;
    for (const auto& m : p.monomials())
        d = std::max(d, m.degree());
    return d;
}

ExpPolynomial dp_evaluate(const DiffPolynomial& p, const ExpPolynomial& f) {
    if (p.is_zero())
        return {};
    std::vector<ExpPolynomial> derivatives{f};
    for (int i = 1; i <= p.order(); ++i)
        derivatives.push_back(ep_differentiate(derivatives.back()));

    ExpPolynomial out;
    for (const auto& m : p.monomials()) {
        ExpPolynomial term(m.coeff);
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0)
                term *= ep_pow(derivatives[i], m.exponents[i]);
        out += term;
    }
    return out;
}

} // namespace expsolve
