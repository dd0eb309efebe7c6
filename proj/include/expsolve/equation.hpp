#pragma once

#include "expsolve/diff_polynomial.hpp"
#include "expsolve/error.hpp"
#include "expsolve/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace expsolve {

class InvalidSpec : public Error {
public:
    using Error::Error;
};

struct RhsTerm {
    RationalFunction p;
    Polynomial alpha;

    friend bool operator==(const RhsTerm&, const RhsTerm&) = default;
};

/// f^n + a f^(n-2) f' + P_d(z, f) = sum_i p_i(z) e^{alpha_i(z)}.
///
/// Construction normalizes: right-hand terms with identical alpha are merged (and
/// dropped when the merged p vanishes), terms are ordered by alpha descending, and a
/// constant-coefficient f^(n-2) f' monomial of P_d is folded into a. Throws InvalidSpec
/// for n < 2, a constant alpha, no right-hand terms, or a pure power f^m (m >= n) in P_d.
class EquationSpec {
public:
    EquationSpec(unsigned n, Rational a, DiffPolynomial pd, std::vector<RhsTerm> rhs);

    unsigned n() const noexcept { return n_; }
    const Rational& a() const noexcept { return a_; }
    const DiffPolynomial& pd() const noexcept { return pd_; }
    const std::vector<RhsTerm>& rhs() const noexcept { return rhs_; }
    std::size_t k() const noexcept { return rhs_.size(); }
    int d() const { return dp_degree(pd_); }
    /// How many input terms were absorbed by merging equal exponents.
    std::size_t merged_terms() const noexcept { return merged_; }

    friend bool operator==(const EquationSpec& x, const EquationSpec& y) {
        return x.n_ == y.n_ && x.a_ == y.a_ && x.pd_ == y.pd_ && x.rhs_ == y.rhs_;
    }

private:
    unsigned n_;
    Rational a_;
    DiffPolynomial pd_;
    std::vector<RhsTerm> rhs_;
    std::size_t merged_ = 0;
};

enum class CaseTag { IA, IB, IIA, IIB, IIC, NotApplicable };

std::string to_string(CaseTag tag);

struct HypothesisReport {
    bool pairwise_deg_ok = false;
    bool bound_ok = false;
    bool n_ok = false;
    CaseTag case_tag = CaseTag::NotApplicable;
    /// The case selected by (a, k) before any check; equals case_tag when applicable.
    CaseTag family = CaseTag::NotApplicable;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};

HypothesisReport validate(const EquationSpec& spec);

/// sum_i p_i e^{alpha_i}
ExpPolynomial rhs_expression(const EquationSpec& spec);
ExpPolynomial lhs_apply(const EquationSpec& spec, const ExpPolynomial& f);

struct NumericCheck {
    Rational re;
    Rational im;
    BigFloat magnitude;  ///< |LHS(z0) - RHS(z0)|
};

struct VerifyOptions {
    unsigned numeric_samples = 0;
    unsigned precision_bits = 128;
    std::uint64_t seed = 20240607;
};

struct VerificationReport {
    bool holds = false;
    ExpPolynomial residual;  ///< LHS - RHS
    std::vector<NumericCheck> numeric_checks;
    std::vector<std::string> warnings;
};

/// Exact decision of f being a solution, plus optional sampling of the residual.
VerificationReport verify(const EquationSpec& spec, const ExpPolynomial& f, const VerifyOptions& options = {});

/// |LHS - RHS| at z0 with every product formed in floating point from numerically
/// evaluated f, f', ..., independent of the symbolic products. Throws PoleAtSample.
BigFloat numeric_residual(const EquationSpec& spec, const ExpPolynomial& f, const BigComplex& z0, unsigned precision_bits);

} // namespace expsolve
