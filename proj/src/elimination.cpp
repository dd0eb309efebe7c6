#include "expsolve/elimination.hpp"

namespace expsolve {

CoefficientMatrix build_system(const std::vector<RhsTerm>& terms) {
    const std::size_t k = terms.size();
    CoefficientMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const RationalFunction slope(terms[i].alpha.derivative());
        m(0, i) = terms[i].p;
        for (std::size_t t = 1; t < k; ++t)
            m(t, i) = m(t - 1, i).derivative() + m(t - 1, i) * slope;
    }
    return m;
}

CoefficientMatrix build_system(const EquationSpec& spec) { return build_system(spec.rhs()); }

RationalFunction det_bareiss(Matrix<RationalFunction> m) {
    if (!m.square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t k = m.rows();
    if (k == 0)
        return RationalFunction(1);
    bool negate = false;
    RationalFunction previous(1);
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (m(p, p).is_zero()) {
            std::size_t r = p + 1;
            while (r < k && m(r, p).is_zero())
                ++r;
            if (r == k)
                return {};
            m.swap_rows(p, r);
            negate = !negate;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j)
                m(i, j) = (m(i, j) * m(p, p) - m(i, p) * m(p, j)) / previous;
            m(i, p) = RationalFunction();
        }
        previous = m(p, p);
    }
    RationalFunction out = m(k - 1, k - 1);
    return negate ? -out : out;
}

RationalFunction det(const Matrix<RationalFunction>& m) {
    return m.rows() <= 3 ? det_cofactor(m) : det_bareiss(m);
}

namespace {

/// Row-reduces the coefficient block and applies the same operations to `extra`.
/// Returns the rank of the coefficient block; `extra` ends up with the entries of
/// the zero rows in positions rank..rows-1.
std::size_t eliminate(Matrix<RationalFunction>& m, std::vector<ExpPolynomial>* extra) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        m.swap_rows(row, pivot);
        if (extra)
            std::swap((*extra)[row], (*extra)[pivot]);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero())
                continue;
            const RationalFunction factor = m(i, col) / m(row, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= factor * m(row, j);
            if (extra)
                (*extra)[i] -= ExpPolynomial(factor) * (*extra)[row];
        }
        ++row;
    }
    return row;
}

} // namespace

std::size_t rank(Matrix<RationalFunction> m) { return eliminate(m, nullptr); }

std::vector<ExpPolynomial> h_derivatives(const std::vector<RhsTerm>& terms, std::size_t count) {
    ExpPolynomial h;
    for (const auto& t : terms)
        h += ep_from(t.p, t.alpha);
    std::vector<ExpPolynomial> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        out.push_back(h);
        h = ep_differentiate(h);
    }
    return out;
}

CramerReport cramer_identity_check(const std::vector<RhsTerm>& terms) {
    const std::size_t k = terms.size();
    if (k < 2)
        throw std::invalid_argument("the Cramer identity needs k >= 2, got k = " + std::to_string(k));

    CramerReport report;
    report.matrix = build_system(terms);
    report.d0 = det(report.matrix);
    report.degenerate = report.d0.is_zero();

    const auto h = h_derivatives(terms, k);
    for (std::size_t t = 0; t < k; ++t) {
        RationalFunction minor = det(report.matrix.minor(t, 0));
        if (t % 2 == 1)
            minor = -minor;
        report.d1 += ExpPolynomial(minor) * h[t];
        report.cofactors.push_back(std::move(minor));
    }
    const ExpPolynomial lhs = ExpPolynomial(report.d0) * ep_from(RationalFunction(1), terms[0].alpha);
    report.holds = ep_is_zero(lhs - report.d1);
    return report;
}

CramerReport cramer_identity_check(const EquationSpec& spec) { return cramer_identity_check(spec.rhs()); }

ExpPolynomial bordered_determinant(const std::vector<RhsTerm>& terms) {
    const std::size_t k = terms.size();
    const CoefficientMatrix m = build_system(terms);
    const auto h = h_derivatives(terms, k);
    Matrix<ExpPolynomial> bordered(k, k);
    for (std::size_t t = 0; t < k; ++t) {
        bordered(t, 0) = h[t];
        for (std::size_t i = 1; i < k; ++i)
            bordered(t, i) = ExpPolynomial(m(t, i));
    }
    return det_cofactor(bordered);
}

RankReport rank_report(const std::vector<RhsTerm>& terms) {
    CoefficientMatrix m = build_system(terms);
    auto h = h_derivatives(terms, terms.size());
    RankReport report;
    report.rank_coeff = eliminate(m, &h);
    report.rank_augmented = report.rank_coeff;
    for (std::size_t r = report.rank_coeff; r < h.size(); ++r)
        if (!ep_is_zero(h[r])) {
            ++report.rank_augmented;
            break;
        }
    return report;
}

RankReport rank_report(const EquationSpec& spec) { return rank_report(spec.rhs()); }

} // namespace expsolve
