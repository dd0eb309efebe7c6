#include <doctest.h>

#include "generators.hpp"
#include "support.hpp"

#include "expsolve/parser.hpp"
#include "expsolve/printer.hpp"

using namespace expsolve;
using testgen::Gen;

namespace {

const Polynomial z = Polynomial::z();

template <class E>
SourceSpan span_of(const std::string& text) {
    try {
        parse_equation(text);
    } catch (const E& e) {
        return e.span();
    }
    FAIL("expected a parse error for: " << text);
    return {};
}

} // namespace

TEST_CASE("parse the three-term example") {
    const EquationSpec spec = parse_equation("f^3 + 4*f*f' + f' - f = exp(3z) + 7*exp(2z) + 7*exp(z)");
    CHECK(spec.n() == 3);
    CHECK(spec.a() == 4);
    CHECK(spec.k() == 3);
    CHECK(spec.rhs()[1].p == RationalFunction(7));
    CHECK(spec.pd().coefficient({0, 1}) == RationalFunction(1));
    CHECK(spec.pd().coefficient({1}) == RationalFunction(-1));
}

TEST_CASE("functions parse to canonical values") {
    const ExpPolynomial f = parse_function("(z/(z+1))*exp(z^2 + 2)");
    CHECK(f == ExpPolynomial::term(CoefficientSum(RationalFunction(z, z + Polynomial(1))), z * z + Polynomial(2)));
    CHECK(parse_function("exp(z)*exp(-z)") == ExpPolynomial(1));
    CHECK(parse_function("2z/3") == ExpPolynomial(z * make_rational(2, 3)));
    CHECK(parse_function("exp(2z/7)") == ep_from(RationalFunction(1), z * make_rational(2, 7)));
    CHECK(parse_function("(z+1)^2 - z^2 - 2z") == ExpPolynomial(1));
    CHECK(parse_function("exp(z)/(z+1)") == ep_from(RationalFunction(Polynomial(1), z + Polynomial(1)), z));
}

TEST_CASE("derivative spellings") {
    CHECK(derivative_name(0) == "f");
    CHECK(derivative_name(2) == "f''");
    CHECK(derivative_name(4) == "f^(4)");
    const EquationSpec a = parse_equation("f^5 + f'' + f^(3) + f^(0) = exp(z)");
    CHECK(a.pd().coefficient({0, 0, 1}) == RationalFunction(1));
    CHECK(a.pd().coefficient({0, 0, 0, 1}) == RationalFunction(1));
    CHECK(a.pd().coefficient({1}) == RationalFunction(1));
}

TEST_CASE("printing the corpus is stable") {
    for (int i = 1; i <= 8; ++i) {
        const std::string text = testgen::read_text(testgen::corpus_path("ex2_" + std::to_string(i) + ".eq"));
        const EquationSpec spec = parse_equation(text);
        const std::string printed = print_canonical(spec);
        CAPTURE(printed);
        CHECK(parse_equation(printed) == spec);
        CHECK(print_canonical(parse_equation(printed)) == printed);
    }
    CHECK(print_canonical(parse_equation("f^6 + 2*f^4*f' = exp(4z) + (4/3)*exp(10z/3)")) ==
          "f^6 + 2*f^4*f' = exp(4z) + (4/3)*exp(10z/3)");
    CHECK(print_canonical(ExpPolynomial()) == "0");
}

TEST_CASE("round trip of random exponential polynomials") {
    Gen gen(61);
    for (int trial = 0; trial < 100; ++trial) {
        const ExpPolynomial x = gen.exp_polynomial(4, 3);
        const std::string text = print_canonical(x);
        CAPTURE(text);
        CHECK(parse_function(text) == x);
    }
}

TEST_CASE("round trip of random specs") {
    Gen gen(62);
    int done = 0;
    while (done < 50) {
        const unsigned n = static_cast<unsigned>(gen.integer(2, 7));
        const Rational a = gen.coin() ? Rational(0) : gen.nonzero_rational(5, 3);
        // Degree <= n - 2 keeps P_d clear of pure powers f^m (m >= n) and of the a-term slot.
        const DiffPolynomial pd = gen.diff_polynomial(static_cast<int>(n) - 2, 3);
        const auto rhs = gen.rhs_terms(static_cast<std::size_t>(gen.integer(1, 4)), 3, 2);
        const EquationSpec spec(n, a, pd, rhs);
        const std::string text = print_canonical(spec);
        CAPTURE(text);
        CHECK(parse_equation(text) == spec);
        ++done;
    }
}

TEST_CASE("syntax errors carry spans") {
    const SourceSpan s = span_of<SyntaxError>("f^2 = exp(z) +");
    CHECK(s.start == 13);
    CHECK(s.line == 1);
    CHECK(s.column == 14);
    span_of<SyntaxError>("f^2 exp(z)");
    span_of<SyntaxError>("f^2 = exp(z) $ 1");
    span_of<SyntaxError>("f^2 = exp(z)/0");
    const SourceSpan multi = span_of<SyntaxError>("f^2\n= exp(z) )");
    CHECK(multi.line == 2);
}

TEST_CASE("shape and exponent errors") {
    span_of<NonPolynomialExponent>("f^2 = exp(exp(z))");
    span_of<NonPolynomialExponent>("f^2 = exp(1/z)");
    span_of<NonPolynomialExponent>("f^2 = exp(f)");
    span_of<ShapeError>("2*f^3 = exp(z)");
    span_of<ShapeError>("f^3 = z");
    span_of<ShapeError>("f^3 = exp(z) + f");
    span_of<ShapeError>("f^3 + exp(z)*f = exp(z)");
    span_of<ShapeError>("f^1 = exp(z)");
    span_of<ShapeError>("f^3 = exp(z) - exp(z)");
}
