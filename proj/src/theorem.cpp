#include "expsolve/theorem.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace expsolve {

std::optional<Rational> exponent_ratio(const Polynomial& alpha, const Polynomial& beta) {
    const Polynomial da = alpha.derivative();
    const Polynomial db = beta.derivative();
    if (db.is_zero())
        return std::nullopt;
    if (da.is_zero())
        return Rational(0);
    if (da.degree() != db.degree())
        return std::nullopt;
    const Rational r = da.leading() / db.leading();
    if (da != db * r)
        return std::nullopt;
    return r;
}

std::string to_string(ConstantResolution::Status status) {
    switch (status) {
    case ConstantResolution::Status::Resolved: return "Resolved";
    case ConstantResolution::Status::Inconsistent: return "Inconsistent";
    case ConstantResolution::Status::NotAUnit: return "NotAUnit";
    case ConstantResolution::Status::Unresolved: return "Unresolved";
    }
    return "Inconsistent";
}

namespace {

Rational rational_pow(const Rational& base, unsigned e) {
    Rational out = 1;
    for (unsigned i = 0; i < e; ++i)
        out *= base;
    return out;
}

/// target = kappa * e^r * actual, when such kappa in Q(z) and r in Q exist.
std::optional<std::pair<RationalFunction, Rational>> unit_ratio(const CoefficientSum& target, const CoefficientSum& actual) {
    const auto& [ut, rt] = *target.terms().rbegin();
    const auto& [ua, ra] = *actual.terms().rbegin();
    const Rational r = ut - ua;
    const RationalFunction kappa = rt / ra;
    if (actual.shifted(r) * kappa != target)
        return std::nullopt;
    return std::make_pair(kappa, r);
}

struct UnitItem {
    unsigned j;
    Rational kappa;
    Rational r;
};

ConstantResolution fail(ConstantResolution::Status status, std::string detail) {
    ConstantResolution out;
    out.status = status;
    out.detail = std::move(detail);
    return out;
}

} // namespace

ConstantResolution resolve_constant(const std::vector<ConstantConstraint>& constraints) {
    using Status = ConstantResolution::Status;
    std::vector<UnitItem> items;
    for (const auto& c : constraints) {
        if (c.multiplier == 0)
            throw std::invalid_argument("constant constraint with multiplier 0");
        if (c.target.is_zero() && c.actual.is_zero())
            continue;
        if (c.target.is_zero() || c.actual.is_zero())
            return fail(Status::Inconsistent, c.label + ": one side vanishes identically");
        const auto ratio = unit_ratio(c.target, c.actual);
        if (!ratio)
            return fail(Status::NotAUnit, c.label + ": " + to_string(c.target) + " is not a unit multiple of " + to_string(c.actual));
        if (!ratio->first.is_constant())
            return fail(Status::NotAUnit, c.label + ": ratio " + to_string(ratio->first) + " is not constant");
        items.push_back({c.multiplier, *ratio->first.constant_value(), ratio->second});
    }

    ConstantResolution out;
    if (items.empty()) {
        out.status = Status::Resolved;
        out.plus = true;
        out.detail = "constant unconstrained, normalized to 0";
        return out;
    }

    // |kappa_j| e^{r_j} = e^{j Re c}: the rational and logarithmic parts must agree separately.
    const UnitItem& ref = items.front();
    const Rational ref_abs = abs(ref.kappa);
    for (const auto& it : items) {
        if (it.r * ref.j != ref.r * it.j)
            return fail(Status::Inconsistent, "exponent constants disagree: " + to_string(Rational(ref.r / ref.j)) + " vs " + to_string(Rational(it.r / it.j)));
        if (rational_pow(abs(it.kappa), ref.j) != rational_pow(ref_abs, it.j))
            return fail(Status::Inconsistent, "constant factors " + to_string(ref.kappa) + " and " + to_string(it.kappa) + " are incompatible");
    }
    out.value = ref.r / ref.j;

    // Im c = pi m / g with g = gcd of multipliers; the sign of kappa_j fixes the parity of j m / g.
    unsigned g = 0;
    for (const auto& it : items)
        g = std::gcd(g, it.j);
    bool other = false;
    for (unsigned m = 0; m < 2 * g; ++m) {
        bool ok = true;
        for (const auto& it : items)
            if ((static_cast<unsigned long>(it.j / g) * m) % 2 != (sgn(it.kappa) < 0 ? 1u : 0u)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        if (m == 0)
            out.plus = true;
        else if (m == g)
            out.minus = true;
        else
            other = true;
    }

    if (ref_abs != 1) {
        if (!(out.plus || out.minus || other))
            return fail(Status::Inconsistent, "no root of unity matches the signs");
        out.status = Status::Unresolved;
        out.plus = out.minus = false;
        out.detail = "needs e^(" + std::to_string(ref.j) + "c) = " + to_string(ref_abs) + " * e^(" + to_string(ref.r) + "), c not a rational unit";
        return out;
    }
    if (out.plus || out.minus) {
        out.status = Status::Resolved;
        out.detail = "c = " + to_string(out.value);
        return out;
    }
    if (other) {
        out.status = Status::Unresolved;
        out.detail = "c = " + to_string(out.value) + " + i*pi*m/" + std::to_string(g) + " needs a non-real root of unity";
        return out;
    }
    return fail(Status::Inconsistent, "signs admit no root of unity");
}

ExpPolynomial SolutionCandidate::function() const {
    return ExpPolynomial::term(CoefficientSum(q, unit), P + Polynomial(P_const));
}

HypothesisReport classify(const EquationSpec& spec) { return validate(spec); }

namespace {

std::string term_label(std::size_t i) { return "term " + std::to_string(i + 1); }

std::optional<unsigned> positive_multiple(const Polynomial& g, const Polynomial& P) {
    const auto r = exponent_ratio(g, P);
    if (!r || !is_integer(*r) || sgn(*r) < 0 || !r->get_num().fits_uint_p())
        return std::nullopt;
    return static_cast<unsigned>(r->get_num().get_ui());
}

std::vector<RoleAssignment> assign_roles(const EquationSpec& spec, std::size_t top, const std::vector<unsigned>& multipliers) {
    const bool second_family = spec.a() != 0;
    std::vector<RoleAssignment> roles;
    roles.push_back({second_family ? "mu" : "tau0", top, spec.n()});
    unsigned counter = 0;
    for (std::size_t i = 0; i < spec.k(); ++i) {
        if (i == top)
            continue;
        std::string role;
        if (second_family && multipliers[i] == spec.n() - 1)
            role = "nu";
        else
            role = (second_family ? "kappa" : "tau") + std::to_string(++counter);
        roles.push_back({role, i, multipliers[i]});
    }
    return roles;
}

} // namespace

CandidateSearch enumerate_candidates(const EquationSpec& spec) {
    CandidateSearch search;
    const unsigned n = spec.n();
    const CaseTag tag = validate(spec).case_tag;
    const auto& rhs = spec.rhs();

    for (std::size_t top = 0; top < rhs.size(); ++top) {
        const std::string branch = "branch " + term_label(top) + " as e^(nP)";
        const Polynomial P = rhs[top].alpha.without_constant() * Rational(1, n);

        std::vector<unsigned> multipliers(rhs.size(), 0);
        std::map<unsigned, CoefficientSum> targets;
        bool aligned = true;
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            const auto j = positive_multiple(rhs[i].alpha, P);
            if (!j || *j == 0) {
                search.rejected.push_back(branch + ": exponent of " + term_label(i) + " is not a positive integer multiple of P = " + to_string(P));
                aligned = false;
                break;
            }
            multipliers[i] = *j;
            targets[*j] += CoefficientSum(rhs[i].p, rhs[i].alpha.constant_term());
        }
        if (!aligned)
            continue;

        NthRoot root;
        try {
            root = nth_root(CoefficientSum(rhs[top].p), n);
        } catch (const NotPerfectPower& e) {
            if (e.reason() == NotPerfectPower::Reason::Constant)
                search.unresolved.push_back(branch + ": " + e.constraint());
            else
                search.rejected.push_back(branch + ": " + e.constraint());
            continue;
        }

        const Rational unit = root.c / n;
        const ExpPolynomial f0 = ExpPolynomial::term(CoefficientSum(root.q, unit), P);
        std::map<unsigned, CoefficientSum> actuals;
        const ExpPolynomial lhs = lhs_apply(spec, f0);
        for (const auto& [g, c] : lhs.terms()) {
            const auto j = g.is_zero() ? std::optional<unsigned>(0) : positive_multiple(g, P);
            if (!j)
                throw std::logic_error("left-hand exponent " + to_string(g) + " is not a multiple of P");
            actuals[*j] += c;
        }

        std::vector<ConstantConstraint> constraints;
        std::string mismatch;
        std::map<unsigned, bool> keys;
        for (const auto& [j, c] : targets)
            keys[j] = true;
        for (const auto& [j, c] : actuals)
            keys[j] = true;
        for (const auto& [j, unused] : keys) {
            const CoefficientSum target = targets.count(j) ? targets[j] : CoefficientSum();
            const CoefficientSum actual = actuals.count(j) ? actuals[j] : CoefficientSum();
            const std::string label = "e^(" + std::to_string(j) + "P)";
            if (target.is_zero() != actual.is_zero()) {
                mismatch = label + ": left side " + to_string(actual) + ", right side " + to_string(target);
                break;
            }
            if (j == 0) {
                if (target != actual)
                    mismatch = "constant term: left side " + to_string(actual) + ", right side " + to_string(target);
                continue;
            }
            constraints.push_back({j, target, actual, label});
        }
        if (!mismatch.empty()) {
            search.rejected.push_back(branch + ": " + mismatch);
            continue;
        }

        const ConstantResolution res = resolve_constant(constraints);
        if (res.status == ConstantResolution::Status::Unresolved) {
            search.unresolved.push_back(branch + ": " + res.detail);
            continue;
        }
        if (res.status != ConstantResolution::Status::Resolved) {
            search.rejected.push_back(branch + ": " + to_string(res.status) + " (" + res.detail + ")");
            continue;
        }

        const auto roles = assign_roles(spec, top, multipliers);
        for (int sign : {1, -1}) {
            if ((sign == 1 && !res.plus) || (sign == -1 && !res.minus))
                continue;
            SolutionCandidate cand;
            cand.case_tag = tag;
            cand.q = sign == 1 ? root.q : -root.q;
            cand.unit = unit;
            cand.P = P;
            cand.P_const = res.value;
            cand.assignment = roles;
            if (!verify(spec, cand.function()).holds)
                throw std::logic_error("constructed candidate fails verification: " + branch);
            search.found.push_back(std::move(cand));
        }
        if (!res.plus)
            search.rejected.push_back(branch + ": +q rejected by sign constraints");
        if (!res.minus && n % 2 == 0)
            search.rejected.push_back(branch + ": -q rejected by sign constraints");
    }
    return search;
}

SolveOutcome solve(const EquationSpec& spec) {
    const HypothesisReport report = validate(spec);
    if (report.case_tag == CaseTag::NotApplicable)
        return NotApplicableOutcome{report};
    if (report.case_tag == CaseTag::IIA)
        return NoSolution{"case IIA admits no meromorphic solution with finitely many poles"};

    CandidateSearch search = enumerate_candidates(spec);
    if (search.found.empty() && !search.unresolved.empty())
        return Unresolved{std::move(search.unresolved)};
    Candidates out{std::move(search.found), std::move(search.rejected)};
    for (auto& u : search.unresolved)
        out.notes.push_back("unresolved " + u);
    return out;
}

} // namespace expsolve
