#include "oracle.hpp"

#include <x5/quadnum.hpp>
#include <x5/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace x5;

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_to_string(rat(-3, 6)) == "-1/2");
    CHECK(rat_to_string(Rational(7)) == "7");
    CHECK(rat_from_string("41/150") == rat(41, 150));
    CHECK(rat_from_string("-2") == Rational(-2));
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("x/3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);

    CHECK(rat_floor(rat(7, 2)) == 3);
    CHECK(rat_floor(rat(-7, 2)) == -4);
    CHECK(rat_ceil(rat(-7, 2)) == -3);
}

TEST_CASE("quad_make normalization") {
    // b = 0 collapses the radicand.
    const QuadNum one = quad_make(1, 0, 7);
    CHECK(one.is_rational());
    CHECK(one.a == 1);
    CHECK(one.m == 0);

    // Perfect squares fold into the rational part.
    const QuadNum two = quad_make(0, 1, 4);
    CHECK(two.is_rational());
    CHECK(two.a == 2);

    const QuadNum folded = quad_make(rat(1, 3), rat(-2, 5), rat(9, 16));
    CHECK(folded.is_rational());
    CHECK(folded.a == rat(1, 3) - rat(2, 5) * rat(3, 4));

    // beta_-(3,-2,3/5) in its printed form stays irrational and normalized.
    const QuadNum bm = quad_make(rat(-2, 3), rat(-1, 3), rat(2, 5));
    CHECK_FALSE(bm.is_rational());
    CHECK(bm.m == rat(2, 5));

    // Idempotence.
    const QuadNum again = quad_make(bm.a, bm.b, bm.m);
    CHECK(again.a == bm.a);
    CHECK(again.b == bm.b);
    CHECK(again.m == bm.m);

    CHECK_THROWS_AS(quad_make(0, 1, -1), std::domain_error);
}

TEST_CASE("quad_cmp resolves printed inequalities") {
    CHECK(quad_cmp(quad_from_rat(rat(1, 2)), quad_from_rat(rat(1, 2))) == 0);

    // (-2 - sqrt(2/5))/3 > -1 since sqrt(2/5) < 1.
    const QuadNum bm = quad_make(rat(-2, 3), rat(-1, 3), rat(2, 5));
    CHECK(quad_cmp(bm, Rational(-1)) > 0);

    // -1/2 - sqrt(3/20) < -sqrt(10)/5.
    const QuadNum lhs = quad_make(rat(-1, 2), -1, rat(3, 20));
    const QuadNum rhs = quad_make(0, rat(-1, 5), 10);
    CHECK(quad_cmp(lhs, rhs) < 0);

    // Equal values through different radicand representations: 2 sqrt(2/5) = sqrt(8/5).
    CHECK(quad_eq(quad_make(0, 2, rat(2, 5)), quad_make(0, 1, rat(8, 5))));
    CHECK(quad_make(0, 2, rat(2, 5)) == quad_make(0, 1, rat(8, 5)));
}

TEST_CASE("quad_floor") {
    CHECK(quad_floor(quad_from_rat(rat(7, 2))) == 3);
    CHECK(quad_floor(quad_make(-1, -1, rat(2, 5))) == -2);   // -1 - sqrt(2/5) ~ -1.632
    CHECK(quad_floor(quad_make(0, rat(2, 5), 10)) == 1);     // 2 sqrt(10)/5 ~ 1.265
    CHECK(quad_floor(quad_make(0, 1, 4)) == 2);              // exact integer
    CHECK(quad_floor(quad_make(-5, 0, 0)) == -5);
}

TEST_CASE("quad arithmetic stays exact") {
    const QuadNum bm = quad_make(rat(-1, 2), rat(-1, 10), 15);  // beta_-(2,-1,1/10)
    const QuadNum scaled = bm * Rational(3);
    CHECK(scaled.b == rat(-3, 10));
    const QuadNum shifted = scaled + Rational(2);
    CHECK(shifted.a == rat(1, 2));
    // (a + b sqrt(m))^2 with the same radicand.
    const QuadNum sq = quad_mul(bm, bm);
    CHECK(sq.a == rat(1, 4) + rat(1, 100) * 15);
    CHECK(sq.b == rat(1, 10));
    CHECK_THROWS_AS(quad_mul(quad_make(0, 1, 2), quad_make(0, 1, 3)), std::domain_error);
}

TEST_CASE("total order axioms against the interval oracle") {
    oracle::Rng rng(20240517);
    const int trials = 10000;

    for (int i = 0; i < trials; ++i) {
        const QuadNum x = rng.quad(), y = rng.quad(), z = rng.quad();

        const int xy = quad_cmp(x, y);
        const int yx = quad_cmp(y, x);
        CHECK(xy == -yx);  // antisymmetry

        // Transitivity of <=.
        if (quad_cmp(x, y) <= 0 && quad_cmp(y, z) <= 0) CHECK(quad_cmp(x, z) <= 0);

        // Compatibility with rational translation.
        const Rational t = rng.rational();
        CHECK(quad_cmp(x + t, y + t) == xy);

        // Oracle agreement at 200-bit precision.
        const auto oc = oracle::interval_cmp(x, y, 200);
        if (oc) CHECK(*oc == xy);
        else CHECK(xy == 0);
    }
}

TEST_CASE("oracle agrees on engineered ties") {
    // Same value, three ways.
    const QuadNum a = quad_make(rat(1, 3), 2, rat(2, 5));
    const QuadNum b = quad_make(rat(1, 3), 1, rat(8, 5));
    const QuadNum c = quad_make(rat(1, 3), rat(2, 5), 10);
    CHECK(quad_cmp(a, b) == 0);
    CHECK(quad_cmp(b, c) == 0);
    CHECK(quad_cmp(a, c) == 0);
    CHECK_FALSE(oracle::interval_cmp(a, b, 200).has_value());
}
