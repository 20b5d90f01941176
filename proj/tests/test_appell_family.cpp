#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "appell/appell_family.hpp"
#include "appell/bigint.hpp"
#include "appell/families.hpp"
#include "testutil.hpp"

using namespace appell;

namespace {
const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly Y = MultiPoly::variable(Var::y);
MultiPoly C(long num, long den = 1) { return MultiPoly::constant(Rational(num, den)); }
}  // namespace

TEST_CASE("family from the uniform reciprocal mgf gives the Bernoulli members") {
    AppellFamily fam(bernoulli_recip_mgf(6), Var::x, "b");
    CHECK(fam.member(0) == C(1));
    CHECK(fam.member(1) == X - C(1, 2));
    CHECK(fam.member(2) == X * X - X + C(1, 6));
}

TEST_CASE("trivial family: reciprocal mgf 1 gives plain powers") {
    AppellFamily fam(PowerSeries::one(6), Var::x, "trivial");
    for (std::size_t n = 0; n <= 6; ++n) CHECK(fam.member(n) == MultiPoly::variable(Var::x, static_cast<unsigned>(n)));
}

TEST_CASE("family from the coin reciprocal mgf gives the Euler members") {
    AppellFamily fam(euler_recip_mgf(6), Var::x, "e");
    CHECK(fam.member(2) == X * X - X);
    // independent route: 3! [u^3] of (2/(e^u+1)) e^{ux}
    PowerSeries egf = series::mul(euler_recip_mgf(3), PowerSeries::exp_arg(Var::x, 3));
    MultiPoly expected = Rational(factorial(3)) * egf.coeff(3);
    CHECK(expected == X.pow(3) - Rational(3, 2) * X * X + C(1, 4));
    CHECK(fam.member(3) == expected);
}

TEST_CASE("constant term must be one") {
    PowerSeries s(3);
    s.coeff(0) = C(2);
    CHECK_THROWS_AS(AppellFamily(s, Var::x, "bad"), std::domain_error);
}

TEST_CASE("members beyond the truncation are out of range") {
    AppellFamily fam(bernoulli_recip_mgf(4), Var::x, "b");
    CHECK(fam.max_degree() == 4);
    CHECK_THROWS_AS(fam.member(5), std::out_of_range);
    CHECK_THROWS_AS(fam.base(5), std::out_of_range);
}

TEST_CASE("uniform-shift expectation sends Bernoulli members to powers") {
    AppellFamily fam(bernoulli_recip_mgf(6), Var::x, "b");
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(expect_uniform_shift(fam.member(n), Var::x) == MultiPoly::variable(Var::x, static_cast<unsigned>(n)));
    CHECK(expect_uniform_shift(C(1), Var::x) == C(1));
}

TEST_CASE("coin-shift expectation sends Euler members to powers") {
    AppellFamily fam(euler_recip_mgf(6), Var::x, "e");
    CHECK(expect_bernoulli_shift(fam.member(1), Var::x) == X);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(expect_bernoulli_shift(fam.member(n), Var::x) == MultiPoly::variable(Var::x, static_cast<unsigned>(n)));
    CHECK(expect_bernoulli_shift(C(1), Var::x) == C(1));
}

TEST_CASE("expectation operators reduce the symbolic order by one") {
    FamilyCatalog cat(4);
    // order-2 members, symbolic m; expectation steps m down to m-1
    MultiPoly b2 = cat.gen_bernoulli(2);
    MultiPoly expected_b = b2.shift(Var::m, Rational(-1));
    CHECK(expect_uniform_shift(b2, Var::x) == expected_b);
    MultiPoly e2 = cat.gen_euler(2);
    MultiPoly expected_e = e2.shift(Var::m, Rational(-1));
    CHECK(expect_bernoulli_shift(e2, Var::x) == expected_e);
}

TEST_CASE("expectation operators are linear") {
    testing::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        MultiPoly p = testing::rand_poly(rng, {Var::x, Var::m});
        MultiPoly q = testing::rand_poly(rng, {Var::x, Var::l});
        Rational a = testing::rand_rational(rng), b = testing::rand_rational(rng);
        MultiPoly combo = a * p + b * q;
        CHECK(expect_uniform_shift(combo, Var::x) ==
              a * expect_uniform_shift(p, Var::x) + b * expect_uniform_shift(q, Var::x));
        CHECK(expect_bernoulli_shift(combo, Var::x) ==
              a * expect_bernoulli_shift(p, Var::x) + b * expect_bernoulli_shift(q, Var::x));
    }
}

TEST_CASE("derivative recursion and monicity for constructed families") {
    testing::Rng rng(32);
    for (int trial = 0; trial < 6; ++trial) {
        PowerSeries s = testing::rand_series(rng, 6, MultiPoly::one(), {Var::m});
        AppellFamily fam(s, Var::x, "random");
        for (std::size_t n = 1; n <= 6; ++n) {
            CHECK(fam.member(n).derivative(Var::x) == Rational(static_cast<long>(n)) * fam.member(n - 1));
            CHECK(fam.member(n).leading_coefficient(Var::x) == MultiPoly::one());
            CHECK(fam.member(n).degree(Var::x) == static_cast<int>(n));
        }
        CHECK(fam.member(0) == MultiPoly::one());
    }
}

TEST_CASE("binomial convolution of two families") {
    FamilyCatalog cat(6);
    const AppellFamily& bx = cat.bernoulli_family(Var::x);
    const AppellFamily& by = cat.bernoulli_family(Var::y);
    const AppellFamily& ey = cat.euler_family(Var::y);

    SUBCASE("convolving with the trivial family shifts the argument") {
        AppellFamily trivial(PowerSeries::one(6), Var::y, "trivial");
        for (std::size_t n = 0; n <= 6; ++n)
            CHECK(convolve(bx, trivial, n) == bx.member(n).shift(Var::x, MultiPoly::variable(Var::y)));
    }

    SUBCASE("same argument variable is rejected") {
        CHECK_THROWS_AS(convolve(bx, cat.euler_family(Var::x), 2), std::invalid_argument);
    }

    SUBCASE("order-one self convolution") {
        CHECK(convolve(bx, by, 1) == X + Y - C(1));
    }

    SUBCASE("mixed family at integer orders matches the convolution") {
        for (std::size_t n = 0; n <= 6; ++n) {
            MultiPoly conv = convolve(bx, ey, n).eval({{Var::y, Rational(0)}});
            MultiPoly mixed = specialize_order(cat.mixed_q(n), {{Var::m, Rational(1)}, {Var::l, Rational(1)}});
            CHECK(conv == mixed);
        }
    }

    SUBCASE("consistency with the product of the reciprocal series") {
        PowerSeries product = series::mul(bernoulli_recip_mgf(6), euler_recip_mgf(6));
        AppellFamily direct(product, Var::x, "product");
        for (std::size_t n = 0; n <= 6; ++n) {
            MultiPoly conv = convolve(bx, ey, n).eval({{Var::y, Rational(0)}});
            CHECK(conv == direct.member(n));
        }
    }
}

TEST_CASE("convolution of random families matches their product series") {
    testing::Rng rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        PowerSeries sf = testing::rand_series(rng, 5, MultiPoly::one(), {Var::m});
        PowerSeries sg = testing::rand_series(rng, 5, MultiPoly::one(), {Var::l});
        AppellFamily f(sf, Var::x, "f");
        AppellFamily g(sg, Var::y, "g");
        AppellFamily product(series::mul(sf, sg), Var::x, "fg");
        for (std::size_t n = 0; n <= 5; ++n) {
            CAPTURE(trial);
            CAPTURE(n);
            CHECK(convolve(f, g, n).eval({{Var::y, Rational(0)}}) == product.member(n));
        }
    }
}

TEST_CASE("concurrent member requests return equal values") {
    FamilyCatalog cat(10);
    const AppellFamily& fam = cat.mixed_family();
    std::vector<MultiPoly> results(8);
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = fam.member(10); });
    for (auto& th : threads) th.join();
    for (const MultiPoly& r : results) CHECK(r == results[0]);
}
