#include <doctest.h>

#include "generators.hpp"
#include "support.hpp"

#include <algorithm>

#include "expsolve/parser.hpp"

using namespace expsolve;
using testgen::corpus_path;
using testgen::read_text;

namespace {

const Polynomial z = Polynomial::z();

RhsTerm term(long p, const Polynomial& alpha) { return {RationalFunction(p), alpha}; }

EquationSpec example_2_1() {
    DiffPolynomial pd({{RationalFunction(4), {1, 1}}, {RationalFunction(1), {0, 1}}, {RationalFunction(-1), {1}}});
    return EquationSpec(3, 0, pd, {term(1, Rational(3) * z), term(7, Rational(2) * z), term(7, z)});
}

struct Fixture {
    const char* name;
    CaseTag family;
    CaseTag tag;
    std::vector<std::string> violations;
};

} // namespace

TEST_CASE("spec construction normalizes") {
    const EquationSpec spec = example_2_1();
    CHECK(spec.n() == 3);
    CHECK(spec.a() == 4);
    CHECK(spec.k() == 3);
    CHECK(spec.d() == 1);
    CHECK(spec.rhs().front().alpha == Rational(3) * z);

    const EquationSpec merged(3, 0, DiffPolynomial(), {term(2, z), term(3, z), term(1, Rational(2) * z)});
    CHECK(merged.k() == 2);
    CHECK(merged.merged_terms() == 1);
    CHECK(merged.rhs()[1].p == RationalFunction(5));

    CHECK_THROWS_AS(EquationSpec(1, 0, DiffPolynomial(), {term(1, z)}), InvalidSpec);
    CHECK_THROWS_AS(EquationSpec(3, 0, DiffPolynomial(), {term(1, Polynomial(2))}), InvalidSpec);
    CHECK_THROWS_AS(EquationSpec(3, 0, DiffPolynomial(), {}), InvalidSpec);
    CHECK_THROWS_AS(EquationSpec(3, 0, DiffPolynomial(), {term(1, z), term(-1, z)}), InvalidSpec);
    CHECK_THROWS_AS(EquationSpec(3, 0, DiffPolynomial({{RationalFunction(1), {4}}}), {term(1, z)}), InvalidSpec);
}

TEST_CASE("lhs_apply against a hand expansion") {
    const EquationSpec spec = example_2_1();
    const ExpPolynomial ez = ep_from(RationalFunction(1), z);
    const ExpPolynomial f = ez + ExpPolynomial(1);
    // f^3 + 4 f f' + f' - f with f' = e^z.
    const ExpPolynomial hand = f * f * f + ExpPolynomial(4) * f * ez + ez - f;
    CHECK(lhs_apply(spec, f) == hand);
    CHECK(hand == rhs_expression(spec));
    const VerificationReport rep = verify(spec, f);
    CHECK(rep.holds);
    CHECK(rep.residual.is_zero());

    const VerificationReport bad = verify(spec, ez);
    CHECK_FALSE(bad.holds);
    CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("every corpus identity verifies") {
    for (int i = 1; i <= 8; ++i) {
        const std::string stem = "ex2_" + std::to_string(i);
        CAPTURE(stem);
        const EquationSpec spec = parse_equation(read_text(corpus_path(stem + ".eq")));
        const ExpPolynomial f = parse_function(read_text(corpus_path(stem + ".sol")));
        VerifyOptions opts;
        opts.numeric_samples = 4;
        const VerificationReport rep = verify(spec, f, opts);
        CHECK(rep.holds);
        CHECK(rep.numeric_checks.size() == 4);
        for (const auto& nc : rep.numeric_checks)
            CHECK(nc.magnitude < BigFloat(make_rational(1, 1000000000), 128));
    }
}

TEST_CASE("numeric residual detects a wrong solution") {
    const EquationSpec spec = example_2_1();
    const ExpPolynomial wrong = ep_from(RationalFunction(1), z) + ExpPolynomial(2);
    const BigComplex z0(make_rational(1, 4), make_rational(-3, 8), 128);
    CHECK(numeric_residual(spec, wrong, z0, 128) > BigFloat(Rational(1), 128));
}

TEST_CASE("classification of the corpus") {
    const std::vector<Fixture> fixtures = {
        {"ex2_1", CaseTag::IIC, CaseTag::NotApplicable, {}},
        {"ex2_2", CaseTag::IB, CaseTag::IB, {}},
        {"ex2_3", CaseTag::IIB, CaseTag::IIB, {}},
        {"ex2_4", CaseTag::IIC, CaseTag::IIC, {}},
        {"ex2_5", CaseTag::IB, CaseTag::NotApplicable, {"d=2 > n-k-1=1"}},
        {"ex2_6", CaseTag::IB, CaseTag::NotApplicable, {"d=2 > n-k-1=1"}},
        {"ex2_7", CaseTag::IB, CaseTag::NotApplicable, {"n=5 < 6 required by case IB", "d=1 > n-k-1=0"}},
        {"ex2_8", CaseTag::IIC, CaseTag::NotApplicable, {"d=2 > n-k-3=1"}},
    };
    for (const auto& fx : fixtures) {
        CAPTURE(fx.name);
        const HypothesisReport rep = validate(parse_equation(read_text(corpus_path(std::string(fx.name) + ".eq"))));
        CHECK(rep.family == fx.family);
        CHECK(rep.case_tag == fx.tag);
        CHECK(rep.pairwise_deg_ok);
        for (const auto& v : fx.violations)
            CHECK(std::find(rep.violations.begin(), rep.violations.end(), v) != rep.violations.end());
        if (fx.tag != CaseTag::NotApplicable)
            CHECK(rep.violations.empty());
    }
}

TEST_CASE("pairwise degree violation") {
    const EquationSpec spec(4, 0, DiffPolynomial(), {term(1, z * z + z), term(2, z * z + z + Polynomial(3))});
    const HypothesisReport rep = validate(spec);
    CHECK_FALSE(rep.pairwise_deg_ok);
    CHECK(rep.case_tag == CaseTag::NotApplicable);
}
