#include "oracle.hpp"

#include <x5/chern.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace x5;

TEST_CASE("from_chern_classes") {
    CHECK(from_chern_classes(2, -1, 2, 0) == ChernVector{2, -1, rat(1, 10), rat(1, 30)});
    CHECK(from_chern_classes(1, 0, 0, 0) == ChernVector{1, 0, 0, 0});
    CHECK(from_chern_classes(2, 0, 2, 0) == ChernVector{2, 0, rat(-2, 5), 0});
}

TEST_CASE("checked construction rejects off-lattice characters") {
    CHECK(make_chern_vector(2, -1, rat(1, 10), rat(1, 30)) == ch_U());
    CHECK_THROWS_AS(make_chern_vector(2, -1, rat(1, 7), 0), std::domain_error);
    CHECK_THROWS_AS(make_chern_vector(2, -1, rat(1, 10), rat(1, 7)), std::domain_error);
}

TEST_CASE("to_chern_classes inverts on lattice points") {
    oracle::Rng rng(77001);
    for (int i = 0; i < 400; ++i) {
        const Int r = rng.pick(-4, 4), c1 = rng.pick(-6, 6);
        const Int c2 = rng.pick(-10, 10), c3 = rng.pick(-10, 10);
        const ChernVector v = from_chern_classes(r, c1, c2, c3);
        CHECK(lattice_valid(v));
        const ChernClasses back = to_chern_classes(v);
        CHECK(back.r == r);
        CHECK(back.c1 == c1);
        CHECK(back.c2 == c2);
        CHECK(back.c3 == c3);
    }
    CHECK_THROWS_AS(to_chern_classes(ChernVector{2, 0, rat(1, 3), 0}), std::domain_error);
}

TEST_CASE("twist") {
    CHECK(twist(ChernVector{1, 0, 0, 0}, -1) == ch_line_bundle(-1));
    CHECK(twist(ChernVector{2, -1, rat(-1, 10), rat(7, 30)}, 1) ==
          ChernVector{2, 1, rat(-1, 10), rat(-1, 30)});
    // (3, 1, 1/10, e) twisted down: e-part shifts by -1/10.
    const ChernVector t = twist(ChernVector{3, 1, rat(1, 10), rat(1, 2)}, -1);
    CHECK(t == ChernVector{3, -2, rat(3, 5), rat(1, 2) - rat(1, 10)});

    oracle::Rng rng(77002);
    for (int i = 0; i < 300; ++i) {
        const ChernVector v = from_chern_classes(rng.pick(-3, 3), rng.pick(-5, 5),
                                                 rng.pick(-9, 9), rng.pick(-9, 9));
        const Int n = rng.pick(-10, 10);
        CHECK(twist(twist(v, n), -n) == v);
        CHECK(lattice_valid(twist(v, n)));
    }
}

TEST_CASE("twisted_ch") {
    CHECK(twisted_ch(ch_U(), 0) == ChernR4{2, -1, rat(1, 10), rat(1, 30)});
    CHECK(twisted_ch(ChernVector{2, -1, rat(-1, 10), rat(1, 4)}, -1) ==
          ChernR4{2, 1, rat(-1, 10), rat(1, 4) - rat(4, 15)});
    // Structure sheaf: ch^beta(O) = (1, -beta, beta^2/2, -beta^3/6).
    oracle::Rng rng(77003);
    for (int i = 0; i < 100; ++i) {
        const Rational beta = rng.rational();
        const ChernR4 t = twisted_ch(ChernVector{1, 0, 0, 0}, beta);
        CHECK(t.c == -beta);
        CHECK(t.d == beta * beta / 2);
        CHECK(t.e == -beta * beta * beta / 6);
    }
}

TEST_CASE("dual_shift") {
    CHECK(dual_shift(ch_line_bundle(-1)) == ChernVector{-1, -1, rat(-1, 2), rat(-1, 6)});
    // Dual of the rank -2 quotient class, twisted back, recovers ch(U).
    const ChernVector g{-2, 3, rat(-21, 10), rat(9, 10)};
    CHECK(twist(dual_shift(g), -2) == ch_U());
    const ChernVector v{3, -2, rat(3, 5), rat(-2, 15)};
    CHECK(dual_shift(dual_shift(v)) == v);
}

TEST_CASE("euler characteristic") {
    const Rational e = rat(3, 7);  // arbitrary; chi is affine in e with slope 5
    CHECK(euler_char(ChernVector{3, -2, rat(3, 5), e}) == 5 * e + rat(2, 3));
    CHECK(euler_char(ChernVector{2, -1, rat(1, 10), e}) == 5 * e - rat(1, 6));
    CHECK(euler_char(ChernVector{2, 0, rat(-1, 5), e}) == 5 * e + 1);
    CHECK(euler_char(ChernVector{3, -1, rat(1, 10), e}) == 5 * e + rat(5, 6));
    CHECK(euler_char(twist(ChernVector{2, -1, rat(-1, 10), rat(7, 30)}, 1)) == 4);

    CHECK(euler_char(ch_line_bundle(0)) == 1);
    CHECK(euler_char(ch_line_bundle(1)) == 7);
    CHECK(euler_char(ch_U()) == 0);
    // chi(O_L(m)) = m + 1 forces the O_L normalization.
    CHECK(euler_char(ch_OL(0)) == 1);
    CHECK(euler_char(ch_OL(1)) == 2);
}

TEST_CASE("slope and discriminant") {
    CHECK(slope(ChernVec2{2, -1, 0}) == ExtRat::finite(rat(-1, 2)));
    CHECK(slope(ChernVec2{0, 1, 0}) == ExtRat::inf());
    CHECK(slope(ChernVec2{3, -2, 0}) == ExtRat::finite(rat(-2, 3)));

    CHECK(discriminant(ChernVec2{2, -1, rat(1, 10)}) == 15);
    CHECK(discriminant(ChernVec2{3, -2, rat(3, 5)}) == 10);
    CHECK(discriminant(ChernVec2{2, 0, rat(-2, 5)}) == 40);

    // For rank 2: Delta = 20 c2 - 25 c1^2.
    oracle::Rng rng(77004);
    for (int i = 0; i < 200; ++i) {
        const Int c1 = rng.pick(-5, 5), c2 = rng.pick(-9, 9);
        const ChernVector v = from_chern_classes(2, c1, c2, 0);
        CHECK(discriminant(truncate(v)) == Rational(20 * c2 - 25 * c1 * c1));
    }
}

TEST_CASE("discriminant is twist invariant") {
    oracle::Rng rng(77005);
    for (int i = 0; i < 1000; ++i) {
        const ChernVector v = from_chern_classes(rng.pick(-4, 4), rng.pick(-6, 6),
                                                 rng.pick(-9, 9), rng.pick(-9, 9));
        const Rational beta = rng.rational();
        CHECK(discriminant(twisted_ch(v, beta)) == discriminant(truncate(v)));
    }
}

TEST_CASE("standard objects") {
    CHECK(ch_U() == ChernVector{2, -1, rat(1, 10), rat(1, 30)});
    CHECK(ch_Q_m1() == ChernVector{3, -2, rat(2, 5), rat(1, 15)});
    CHECK(ch_OL(1) == ChernVector{0, 0, rat(1, 5), rat(1, 5)});
    CHECK(ch_OL(0) == ChernVector{0, 0, rat(1, 5), 0});
    CHECK(standard_object("U") == ch_U());
    CHECK(standard_object("O", -2) == ch_line_bundle(-2));
    CHECK_THROWS_AS(standard_object("nope"), std::domain_error);

    // The collection's characters satisfy the tautological sequence
    // 0 -> U -> O^5 -> Q -> 0 after twisting: ch(Q(-1)) + ch(U(-1)) = 5 ch(O(-1)).
    CHECK(ch_Q_m1() + twist(ch_U(), -1) == Int(5) * ch_line_bundle(-1));
}

TEST_CASE("heart decomposition") {
    const HeartDecomposition h1 = heart_decomposition(ChernVector{-2, 0, rat(2, 5), 0});
    CHECK(h1.feasible);
    CHECK(h1.a == 0);
    CHECK(h1.b == 2);
    CHECK(h1.c == 4);
    CHECK(h1.d == 0);

    const HeartDecomposition h2 = heart_decomposition(ch_line_bundle(0));
    CHECK(h2.feasible);
    CHECK(h2.a == 0);
    CHECK(h2.b == 0);
    CHECK(h2.c == 0);
    CHECK(h2.d == 1);

    const HeartDecomposition h3 = heart_decomposition(ChernVector{-3, 2, rat(-3, 5), rat(2, 15)});
    CHECK(h3.feasible);
    CHECK(h3.a == 1);
    CHECK(h3.b == 0);
    CHECK(h3.c == 1);
    CHECK(h3.d == 0);

    // Infeasible: negative or fractional coefficients.
    CHECK_FALSE(heart_decomposition(ch_line_bundle(-1)).feasible);

    // Round trip: random non-negative integer combinations decompose back.
    oracle::Rng rng(77006);
    for (int i = 0; i < 200; ++i) {
        const Int a = rng.pick(0, 5), b = rng.pick(0, 5), c = rng.pick(0, 5), d = rng.pick(0, 5);
        const ChernVector v = Int(-1) * (a * ch_line_bundle(-1)) + b * ch_Q_m1() +
                              Int(-1) * (c * ch_U()) + d * ch_line_bundle(0);
        const HeartDecomposition h = heart_decomposition(v);
        CHECK(h.feasible);
        CHECK(h.a == a);
        CHECK(h.b == b);
        CHECK(h.c == c);
        CHECK(h.d == d);
    }
}
