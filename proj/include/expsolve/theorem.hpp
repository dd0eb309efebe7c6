#pragma once

#include "expsolve/equation.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace expsolve {

/// r with alpha' = r * beta', if it exists.
std::optional<Rational> exponent_ratio(const Polynomial& alpha, const Polynomial& beta);

/// Demands actual * e^{multiplier * c} = target for the unknown constant c.
struct ConstantConstraint {
    unsigned multiplier = 1;
    CoefficientSum target;
    CoefficientSum actual;
    std::string label;
};

struct ConstantResolution {
    enum class Status {
        Resolved,      ///< c = value works with f scaled by +1 and/or -1
        Inconsistent,  ///< no complex c satisfies every constraint
        NotAUnit,      ///< some target/actual ratio is not a constant times e^r
        Unresolved,    ///< solvable, but only with c outside Q (or a non-real root of unity)
    };
    Status status = Status::Inconsistent;
    Rational value;          ///< the real part of c, as a rational (meaningful unless NotAUnit)
    bool plus = false;       ///< c = value works
    bool minus = false;      ///< c = value + i*pi works, i.e. f -> -f
    std::string detail;
};

std::string to_string(ConstantResolution::Status status);

/// With no constraints, c is free and normalized to 0.
ConstantResolution resolve_constant(const std::vector<ConstantConstraint>& constraints);

struct RoleAssignment {
    std::string role;        ///< tau0, tau1, ... or mu, nu, kappa1, ...
    std::size_t rhs_index;   ///< 0-based index into spec.rhs()
    unsigned multiplier;     ///< alpha_i - alpha_i(0) = multiplier * P
};

struct SolutionCandidate {
    CaseTag case_tag = CaseTag::NotApplicable;
    RationalFunction q;
    Rational unit;           ///< e^{unit} scale on q
    Polynomial P;            ///< zero constant term
    Rational P_const;
    std::vector<RoleAssignment> assignment;

    /// (q e^{unit}) e^{P + P_const}
    ExpPolynomial function() const;
};

struct Candidates {
    std::vector<SolutionCandidate> list;
    /// Why branches were rejected or left open.
    std::vector<std::string> notes;
};

struct NoSolution {
    std::string reason;
};

struct NotApplicableOutcome {
    HypothesisReport report;
};

struct Unresolved {
    std::vector<std::string> constraints;
};

using SolveOutcome = std::variant<Candidates, NoSolution, NotApplicableOutcome, Unresolved>;

HypothesisReport classify(const EquationSpec& spec);

struct CandidateSearch {
    std::vector<SolutionCandidate> found;
    std::vector<std::string> rejected;
    std::vector<std::string> unresolved;
};

/// Explores every choice of the n-th power term (tau0 / mu) with P = (alpha - alpha(0))/n
/// and matches all remaining exponents, regardless of the hypothesis report.
CandidateSearch enumerate_candidates(const EquationSpec& spec);

/// Classification followed by the case-specific construction. Each candidate is
/// re-verified before being returned.
SolveOutcome solve(const EquationSpec& spec);

} // namespace expsolve
