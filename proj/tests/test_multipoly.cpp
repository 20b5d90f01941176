#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "appell/multipoly.hpp"
#include "testutil.hpp"

using namespace appell;

namespace {
const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly Y = MultiPoly::variable(Var::y);
const MultiPoly M = MultiPoly::variable(Var::m);
const MultiPoly L = MultiPoly::variable(Var::l);
MultiPoly C(long num, long den = 1) { return MultiPoly::constant(Rational(num, den)); }
}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK((X - C(1, 2)) + C(1, 2) == X);
    CHECK((X - C(1, 2)) * (X - C(1, 2)) == X * X - X + C(1, 4));
    testing::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        MultiPoly p = testing::rand_poly(rng, {Var::x, Var::m});
        CHECK((MultiPoly() * p).is_zero());
        CHECK(p - p == MultiPoly());
        CHECK(Rational(0) * p == MultiPoly());
    }
}

TEST_CASE("canonical form drops zero coefficients") {
    MultiPoly p = X + C(1) - X - C(1);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    MultiPoly q = (X + Y) * (X - Y);
    CHECK(q == X * X - Y * Y);
    CHECK(q.term_count() == 2);
}

TEST_CASE("taylor shift") {
    CHECK(X.pow(2).shift(Var::x, Rational(1)) == X * X + C(2) * X + C(1));
    MultiPoly b2 = X * X - X + C(1, 6);
    CHECK(b2.shift(Var::x, Rational(1)) == X * X + X + C(1, 6));
    testing::Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        MultiPoly p = testing::rand_poly(rng, {Var::x, Var::y, Var::m});
        CHECK(p.shift(Var::x, Rational(0)) == p);
        Rational a = testing::rand_rational(rng);
        CHECK(p.shift(Var::x, a).shift(Var::x, -a) == p);
        // shifting by a polynomial delta, then back
        MultiPoly delta = testing::rand_poly(rng, {Var::y, Var::m}, 3, 2);
        CHECK(p.shift(Var::x, delta).shift(Var::x, -delta) == p);
    }
    CHECK_THROWS_AS(X.shift(Var::x, X), std::invalid_argument);
    CHECK_THROWS_AS(X.shift(Var::x, X * Y), std::invalid_argument);
}

TEST_CASE("partial evaluation") {
    MultiPoly b2 = X * X - X + C(1, 6);
    CHECK(b2.eval({{Var::x, Rational(0)}}) == C(1, 6));
    MultiPoly p = X - Rational(1, 2) * (M + L);
    CHECK(p.eval({{Var::m, Rational(1)}, {Var::l, Rational(1)}}) == X - C(1));
    testing::Rng rng(13);
    for (int i = 0; i < 30; ++i) {
        MultiPoly q = testing::rand_poly(rng, {Var::x, Var::m, Var::l});
        CHECK(q.eval({}) == q);
    }
}

TEST_CASE("derivative") {
    MultiPoly b2 = X * X - X + C(1, 6);
    CHECK(b2.derivative(Var::x) == C(2) * X - C(1));
    CHECK(C(5, 3).derivative(Var::x).is_zero());
    CHECK((M * M * X).derivative(Var::m) == C(2) * M * X);
}

TEST_CASE("unit-interval integration") {
    // integral over t in [0,1] of (x + t - 1/2) dt, with t = y
    CHECK((X + Y - C(1, 2)).integrate_unit(Var::y) == X);
    CHECK(C(1).integrate_unit(Var::y) == C(1));
    MultiPoly xy = X + Y;
    MultiPoly b2_shifted = xy * xy - xy + C(1, 6);
    CHECK(b2_shifted.integrate_unit(Var::y) == X * X);
}

TEST_CASE("antiderivative and derivative are inverse") {
    testing::Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        MultiPoly p = testing::rand_poly(rng, {Var::x, Var::y, Var::l});
        CHECK(p.antiderivative(Var::x).derivative(Var::x) == p);
    }
}

TEST_CASE("substitution") {
    CHECK(X.pow(3).subst(Var::x, Rational(1, 2) * X) == C(1, 8) * X.pow(3));
    CHECK((X * X + M).subst(Var::x, Y + C(1)) == Y * Y + C(2) * Y + C(1) + M);
    CHECK(X.subst(Var::x, MultiPoly()) == MultiPoly());
}

TEST_CASE("degrees, leading coefficients, coefficient split") {
    MultiPoly p = X * X * M - X + C(3);
    CHECK(p.degree(Var::x) == 2);
    CHECK(p.degree(Var::m) == 1);
    CHECK(p.degree(Var::y) == 0);
    CHECK(p.total_degree() == 3);
    CHECK(p.leading_coefficient(Var::x) == M);
    auto coeffs = p.coefficients_of(Var::x);
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == C(3));
    CHECK(coeffs[1] == C(-1));
    CHECK(coeffs[2] == M);
    CHECK(MultiPoly().degree(Var::x) == -1);
}

TEST_CASE("canonical rendering") {
    CHECK((X * X - X + C(1, 6)).to_string() == "x^2 - x + 1/6");
    CHECK((X - Rational(1, 2) * M - Rational(1, 2) * L).to_string() == "x - 1/2*m - 1/2*l");
    CHECK(MultiPoly().to_string() == "0");
    CHECK((-X).to_string() == "-x");
    CHECK((X * X * Y - Rational(3, 4) * M).to_string() == "x^2*y - 3/4*m");
    CHECK((X + Y - C(1)).to_string() == "x + y - 1");
    CHECK(C(-1, 2).to_string() == "-1/2");
}

TEST_CASE("rendering order is graded lexicographic") {
    MultiPoly p = L + M + Y + X + X * X;
    CHECK(p.to_string() == "x^2 + x + y + m + l");
}

TEST_CASE("parse") {
    CHECK(MultiPoly::parse("x^2 - x + 1/6") == X * X - X + C(1, 6));
    CHECK(MultiPoly::parse("x - 1/2*m - 1/2*l") == X - Rational(1, 2) * M - Rational(1, 2) * L);
    CHECK(MultiPoly::parse("0") == MultiPoly());
    CHECK(MultiPoly::parse("-x") == -X);
    CHECK(MultiPoly::parse("2*x*y^3") == C(2) * X * Y.pow(3));
    CHECK(MultiPoly::parse("x + x") == C(2) * X);   // non-canonical input folds
    CHECK(MultiPoly::parse(" 1/2 * m ") == Rational(1, 2) * M);
    CHECK_THROWS_AS(MultiPoly::parse("z"), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse("1 +"), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse("2*"), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse(""), std::invalid_argument);
}

TEST_CASE("print/parse round trip is lossless") {
    testing::Rng rng(15);
    for (int i = 0; i < 200; ++i) {
        MultiPoly p = testing::rand_poly(rng, {Var::x, Var::y, Var::m, Var::l}, 8, 5);
        CHECK(MultiPoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("structural equality") {
    CHECK(X + Y == Y + X);
    CHECK(X != Y);
    CHECK(C(2) * X != X);
}

TEST_CASE("parser survives arbitrary input") {
    // random character soup must either parse or throw, never crash;
    // anything that parses must round-trip through the renderer
    const char alphabet[] = "xyml0123456789+-*/^ .()";
    testing::Rng rng(16);
    for (int i = 0; i < 3000; ++i) {
        std::string s;
        std::size_t len = rng.below(24);
        for (std::size_t j = 0; j < len; ++j) s += alphabet[rng.below(sizeof(alphabet) - 1)];
        try {
            MultiPoly p = MultiPoly::parse(s);
            CHECK(MultiPoly::parse(p.to_string()) == p);
        } catch (const std::invalid_argument&) {
        } catch (const std::domain_error&) {
        }
    }
}
