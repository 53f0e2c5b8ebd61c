#include "oracle.hpp"

#include <x5/chern.hpp>
#include <x5/tilt.hpp>
#include <x5/walls.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace x5;

TEST_CASE("numerical_wall classification") {
    const ChernVec2 v{2, -1, rat(-1, 10)};

    const Wall w1 = numerical_wall(v, truncate(ch_line_bundle(-1)));
    REQUIRE(w1.kind == Wall::Kind::Semicircle);
    CHECK(w1.center == rat(-11, 10));
    CHECK(w1.radius_sq == rat(1, 100));

    // O(-3)[1] has truncated class (-1, 3, -9/2).
    const Wall w2 = numerical_wall(v, ChernVec2{-1, 3, rat(-9, 2)});
    REQUIRE(w2.kind == Wall::Kind::Semicircle);
    CHECK(w2.center == rat(-91, 50));
    CHECK(w2.radius_sq == rat(3481, 2500));

    // Proportional classes degenerate.
    CHECK(numerical_wall(ChernVec2{2, -1, rat(1, 10)}, ChernVec2{4, -2, rat(1, 5)}).kind ==
          Wall::Kind::Degenerate);

    // Same slope, different d: the vertical wall at beta = c/r.
    const Wall wv = numerical_wall(ChernVec2{2, -1, rat(1, 10)}, ChernVec2{2, -1, rat(-1, 10)});
    REQUIRE(wv.kind == Wall::Kind::Vertical);
    CHECK(wv.beta0 == rat(-1, 2));
}

TEST_CASE("wall_crosses_ray") {
    const ChernVec2 v{2, -1, rat(-1, 10)};
    CHECK(wall_crosses_ray(numerical_wall(v, ChernVec2{-1, 3, rat(-9, 2)}), -1));
    CHECK_FALSE(wall_crosses_ray(numerical_wall(v, truncate(ch_line_bundle(-1))), -1));  // tangent
    CHECK(wall_crosses_ray(Wall::vertical(rat(-1, 2)), rat(-1, 2)));
    CHECK_FALSE(wall_crosses_ray(Wall::vertical(rat(-1, 2)), rat(-1, 3)));
    CHECK_FALSE(wall_crosses_ray(Wall::degenerate(), 0));
}

TEST_CASE("semicircular walls peak on the nu = 0 locus") {
    oracle::Rng rng(99001);
    for (int trial = 0; trial < 60; ++trial) {
        const ChernVec2 v = rng.chern2_positive();
        for (int i = 0; i < 50; ++i) {
            const ChernVec2 w{rng.pick(-3, 3), rng.pick(-5, 5), Rational(rng.pick(-40, 40), 10)};
            const Wall wall = numerical_wall(v, w);
            if (wall.kind != Wall::Kind::Semicircle) continue;
            // At (center, radius): d - beta c + (beta^2 - alpha^2) r/2 = 0 with
            // beta = center, alpha^2 = radius_sq.
            const Rational value = v.d - wall.center * v.c +
                                   (wall.center * wall.center - wall.radius_sq) * Rational(v.r, 2);
            CHECK(value == 0);
        }
    }
}

TEST_CASE("walls on a common branch are nested") {
    oracle::Rng rng(99002);
    int pairs_checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const ChernVec2 v = rng.chern2_positive();
        if (v.r == 0) continue;
        const Rational mu(v.c, v.r);
        std::vector<Wall> left, right;
        for (int i = 0; i < 100; ++i) {
            const ChernVec2 w{rng.pick(-3, 3), rng.pick(-5, 5), Rational(rng.pick(-40, 40), 10)};
            const Wall wall = numerical_wall(v, w);
            if (wall.kind != Wall::Kind::Semicircle) continue;
            (wall.center < mu ? left : right).push_back(wall);
        }
        auto check_nested = [&pairs_checked](const std::vector<Wall>& branch) {
            for (size_t i = 0; i < branch.size(); ++i)
                for (size_t j = i + 1; j < branch.size(); ++j) {
                    // Intervals [c - rho, c + rho] must be nested or equal,
                    // with exact endpoints as quadratic numbers.
                    const QuadNum ai = quad_make(branch[i].center, -1, branch[i].radius_sq);
                    const QuadNum bi = quad_make(branch[i].center, 1, branch[i].radius_sq);
                    const QuadNum aj = quad_make(branch[j].center, -1, branch[j].radius_sq);
                    const QuadNum bj = quad_make(branch[j].center, 1, branch[j].radius_sq);
                    const bool i_in_j = quad_cmp(aj, ai) <= 0 && quad_cmp(bi, bj) <= 0;
                    const bool j_in_i = quad_cmp(ai, aj) <= 0 && quad_cmp(bj, bi) <= 0;
                    CHECK((i_in_j || j_in_i));
                    ++pairs_checked;
                }
        };
        check_nested(left);
        check_nested(right);
    }
    CHECK(pairs_checked > 100);
}

TEST_CASE("q_zero_wall bounds the negative semidisk") {
    // At the extremal value e = 7/30 the class satisfies the generalized
    // inequality everywhere, so its negative semidisk is empty.
    CHECK(q_zero_wall(ChernVector{2, -1, rat(-1, 10), rat(7, 30)}).kind ==
          Wall::Kind::Degenerate);

    // One lattice step above the bound the semidisk opens up.
    const ChernVector v{2, -1, rat(-1, 10), rat(1, 3)};
    const Wall w = q_zero_wall(v);
    REQUIRE(w.kind == Wall::Kind::Semicircle);

    // Sampled sign test on a 20 x 20 grid around the wall.
    const Rational c = w.center;
    const Rational span = 1;  // covers inside and outside comfortably
    int inside_checked = 0, outside_checked = 0;
    for (int i = 1; i <= 20; ++i) {
        for (int j = 1; j <= 20; ++j) {
            const Rational beta = c - span + 2 * span * Rational(i, 20);
            const Rational alpha = 2 * span * Rational(j, 20);
            const Rational dist_sq = (beta - c) * (beta - c) + alpha * alpha;
            if (dist_sq == w.radius_sq) continue;
            const Rational q = q_bmt(v, beta, alpha);
            if (dist_sq < w.radius_sq) {
                CHECK(q < 0);
                ++inside_checked;
            } else {
                CHECK(q > 0);
                ++outside_checked;
            }
        }
    }
    CHECK(inside_checked > 20);
    CHECK(outside_checked > 20);

    CHECK_THROWS_AS(q_zero_wall(ch_line_bundle(1)), std::domain_error);  // Delta = 0
}

TEST_CASE("q_zero_wall passes through a boundary zero of the form") {
    // With e solving Q_{0,-1} = 41 - 150 e = 0, the wall meets (-1, 0).
    const ChernVector v{2, -1, rat(-1, 10), rat(41, 150)};
    CHECK(q_bmt(v, -1, 0) == 0);
    const Wall w = q_zero_wall(v);
    REQUIRE(w.kind == Wall::Kind::Semicircle);
    const Rational off = Rational(-1) - w.center;
    CHECK(off * off == w.radius_sq);
}

TEST_CASE("radius_bound_sub") {
    CHECK(radius_bound_sub(ChernVec2{2, 0, rat(-2, 5)}, 4) == rat(1, 20));
    CHECK(radius_bound_sub(ChernVec2{2, 0, rat(-1, 5)}, 4) == rat(1, 40));
    // Monotone decrease in s.
    Rational prev = radius_bound_sub(ChernVec2{2, 0, rat(-2, 5)}, 3);
    for (Int s = 4; s <= 12; ++s) {
        const Rational cur = radius_bound_sub(ChernVec2{2, 0, rat(-2, 5)}, s);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(radius_bound_sub(ChernVec2{2, 0, rat(-2, 5)}, 2), std::domain_error);
    CHECK_THROWS_AS(radius_bound_sub(ChernVec2{2, 0, rat(-2, 5)}, 1), std::domain_error);
}

TEST_CASE("dependence curve of O(-1) and Q(-1)") {
    const Poly2 f = dependence_curve(ch_line_bundle(-1), ch_Q_m1(), rat(1, 6));

    // Rational points of 5a^2 - 5b^2 - 12b - 6 = 0 from the chord
    // parametrization u = 5b + 6, t = 5a, (u - t)(u + t) = 6.
    int on_curve = 0;
    for (int num = 1; num <= 40; ++num) {
        for (const long den : {1L, 2L, 4L, 5L}) {
            const Rational m(num, den);
            for (const Rational mu : {m, -m}) {
                const Rational u = (mu + 6 / mu) / 2;
                const Rational t = (6 / mu - mu) / 2;
                if (t <= 0) continue;
                const Rational beta = (u - 6) / 5, alpha = t / 5;
                if (!(beta > -2 && beta < 0 && alpha > 0 && alpha < rat(6, 5))) continue;
                CHECK(5 * alpha * alpha - 5 * beta * beta - 12 * beta - 6 == 0);
                CHECK(f.eval(beta, alpha) == 0);
                // Perturbed off-curve points are nonzero.
                CHECK(f.eval(beta, alpha + rat(1, 1000)) != 0);
                ++on_curve;
            }
        }
    }
    CHECK(on_curve >= 20);

    // A = B gives the zero polynomial.
    CHECK(dependence_curve(ch_U(), ch_U(), rat(1, 6)).is_zero());
}

TEST_CASE("dependence curve of O and U changes sign across its locus inside D") {
    const Poly2 f = dependence_curve(ch_line_bundle(0), ch_U(), rat(1, 6));
    // At beta = -3/4 the factor 5a^2 - 5b^2 - 2b + 1 vanishes at a = 1/4:
    // 5/16 - 45/16 + 3/2 + 1 = 0.
    const Rational beta = rat(-3, 4);
    CHECK(5 * rat(1, 16) - 5 * rat(9, 16) - 2 * beta + 1 == 0);
    const Rational on = f.eval(beta, rat(1, 4));
    const Rational below = f.eval(beta, rat(1, 5));
    const Rational above = f.eval(beta, rat(3, 10));
    CHECK(on == 0);
    CHECK(below != 0);
    CHECK(above != 0);
    CHECK(((below < 0 && above > 0) || (below > 0 && above < 0)));
}
