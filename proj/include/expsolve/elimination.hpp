#pragma once

#include "expsolve/equation.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace expsolve {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    /// Copy with row r and column c removed.
    Matrix minor(std::size_t r, std::size_t c) const {
        Matrix out(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
            if (i == r)
                continue;
            for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
                if (j == c)
                    continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Entry (t, i) is the coefficient of e^{alpha_i} in h^(t), h = sum p_i e^{alpha_i}.
using CoefficientMatrix = Matrix<RationalFunction>;

CoefficientMatrix build_system(const std::vector<RhsTerm>& terms);
CoefficientMatrix build_system(const EquationSpec& spec);

/// Laplace expansion along the first row. Works over any commutative ring T.
template <class T>
T det_cofactor(const Matrix<T>& m) {
    if (!m.square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t k = m.rows();
    if (k == 0)
        return T(1);
    if (k == 1)
        return m(0, 0);
    if (k == 2)
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    T out{};
    for (std::size_t c = 0; c < k; ++c) {
        T term = m(0, c) * det_cofactor(m.minor(0, c));
        if (c % 2 == 0)
            out = out + term;
        else
            out = out - term;
    }
    return out;
}

/// Bareiss fraction-free elimination with exact division.
RationalFunction det_bareiss(Matrix<RationalFunction> m);

/// Cofactor expansion for k <= 3, Bareiss above.
RationalFunction det(const Matrix<RationalFunction>& m);

/// Rank over Q(z) by Gaussian elimination.
std::size_t rank(Matrix<RationalFunction> m);

struct CramerReport {
    CoefficientMatrix matrix;
    RationalFunction d0;
    /// (-1)^t M_{t,1} for t = 0..k-1: signed minors of the first column.
    std::vector<RationalFunction> cofactors;
    ExpPolynomial d1;
    bool degenerate = false;  ///< D0 is identically zero
    bool holds = false;       ///< D0 e^{alpha_1} - D1 == 0
};

/// h and its first `count - 1` derivatives.
std::vector<ExpPolynomial> h_derivatives(const std::vector<RhsTerm>& terms, std::size_t count);

/// Throws std::invalid_argument when k < 2.
CramerReport cramer_identity_check(const std::vector<RhsTerm>& terms);
CramerReport cramer_identity_check(const EquationSpec& spec);

/// D1 as the direct determinant of the matrix whose first column is replaced by
/// (h, h', ..., h^(k-1)), each entry an ExpPolynomial.
ExpPolynomial bordered_determinant(const std::vector<RhsTerm>& terms);

struct RankReport {
    std::size_t rank_coeff = 0;
    std::size_t rank_augmented = 0;
};

RankReport rank_report(const std::vector<RhsTerm>& terms);
RankReport rank_report(const EquationSpec& spec);

} // namespace expsolve
