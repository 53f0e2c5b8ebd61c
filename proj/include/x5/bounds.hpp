#pragma once

// The ch_3 bounding toolkit: lattice rounding for e, Euler-characteristic
// bounds, bounds from the generalized Bogomolov-Gieseker form at alpha = 0,
// extremal values for (shifted) twisted trivial classes, the rank-one and
// torsion bounds, and the two checks around the large-discriminant wall
// radius estimate.

#include "x5/chern.hpp"
#include "x5/destab.hpp"
#include "x5/rational.hpp"
#include "x5/walls.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace x5 {

enum class BoundRoute { Chi, QForm, Trivial, Dual, Chain };

inline std::string bound_route_name(BoundRoute r) {
    switch (r) {
        case BoundRoute::Chi: return "chi";
        case BoundRoute::QForm: return "q_form";
        case BoundRoute::Trivial: return "trivial";
        case BoundRoute::Dual: return "dual";
        case BoundRoute::Chain: return "chain";
    }
    return "?";
}

struct BoundResult {
    Rational e_max{};
    BoundRoute route = BoundRoute::Chi;
    std::vector<std::string> assumptions;  // steps taken on trust, as prose
};

/// Base point of the e-lattice for fixed (r, c, d): e = c^3/6 - c c2/10 + k/10
/// with c2 = 5(c^2/2 - d); admissible e differ by multiples of 1/10.
inline Rational lattice_e_base(const ChernVec2& v) {
    if (!lattice_valid2(v)) throw std::domain_error("lattice_e_base: c2 is not integral");
    const Rational c2 = second_class(v);
    return Rational(v.c * v.c * v.c, 6) - Rational(v.c) * c2 / 10;
}

/// Largest lattice-admissible e <= e_bound.
inline Rational lattice_e_floor(const ChernVec2& v, const Rational& e_bound) {
    const Rational base = lattice_e_base(v);
    const Int k = rat_floor((e_bound - base) * 10);
    return base + Rational(k, 10);
}

/// From chi(E) = r + (8/3)c + 5d + 5e <= chi_max.
inline BoundResult chi_bound_e(const ChernVec2& v, const Rational& chi_max,
                               std::vector<std::string> assumptions = {}) {
    const Rational raw = (chi_max - Rational(v.r) - Rational(8 * v.c, 3) - 5 * v.d) / 5;
    return {lattice_e_floor(v, raw), BoundRoute::Chi, std::move(assumptions)};
}

/// From Q_{0,beta0}(E) >= 0, legitimate when no wall for v crosses the ray
/// beta = beta0 (minimal twisted degree there). Solving
///   4 (d^b)^2 - 6 c^b (e - A) >= 0,  A = beta0 d - beta0^2 c/2 + beta0^3 r/6,
/// for e and rounding down to the lattice.
inline BoundResult q_bound_e(const ChernVec2& v, const Rational& beta0,
                             std::vector<std::string> assumptions = {}) {
    if (!minimal_ch1_check(v, beta0))
        throw std::domain_error("q_bound_e: twisted degree at beta0 is not minimal positive");
    const Rational c_b = twisted_c1(v, beta0);
    const Rational d_b = twisted_c2(v, beta0);
    const Rational shift =
        beta0 * v.d - beta0 * beta0 * Rational(v.c) / 2 + beta0 * beta0 * beta0 * Rational(v.r) / 6;
    const Rational raw = shift + 2 * d_b * d_b / (3 * c_b);
    assumptions.push_back("no wall for the class crosses beta=" + rat_to_string(beta0) +
                          " (minimal twisted degree), so the Q-form bound applies on that ray");
    return {lattice_e_floor(v, raw), BoundRoute::QForm, std::move(assumptions)};
}

/// Maximal ch_3 coefficient among tilt-semistable objects with the truncated
/// character of O(n)^m: attained by the trivial twist itself.
inline Rational trivial_class_e_bound(const Int& n, const Int& m) {
    if (m < 1) throw std::domain_error("trivial_class_e_bound: m must be positive");
    return Rational(m * n * n * n, 6);
}

/// Same for the shifted classes: ch_3 of O(n)^m[1] is -m n^3/6.
inline Rational dual_class_e_bound(const Int& n, const Int& m) {
    if (m < 1) throw std::domain_error("dual_class_e_bound: m must be positive");
    return -Rational(m * n * n * n, 6);
}

/// For ch = (0, 1, d, e): e <= 1/24 + d^2/2 (raw bound, callers round).
inline Rational torsion_rank0_bound(const Rational& d) {
    return rat(1, 24) + d * d / 2;
}

/// For ch = (1, 0, -d, e), d >= 0 on the lattice (5d integral):
/// small d via the Q-form at beta = -1 with lattice rounding, d >= 1 closed form.
inline Rational rank_one_neg_bound(const Rational& d) {
    if (d < 0 || !is_integer(5 * d)) throw std::domain_error("rank_one_neg_bound: d off the lattice");
    if (d >= 1) return d * (d + 1) / 2;
    if (d == 0 || d == rat(1, 5)) return 0;
    if (d == rat(2, 5)) return rat(1, 5);
    if (d == rat(3, 5)) return rat(2, 5);
    return rat(3, 5);  // d = 4/5
}

/// Exact audit of the large-|k| radius estimate for the extension classes
/// ch = (2, -1, k + 1/10, (15k^2 - 27k + 1)/30), k <= -2:
///  * the published closed-form lower bound L(k) for rho_Q / Delta_H,
///  * the actual Q-wall from q_zero_wall,
///  * exact comparisons of every inequality involved.
/// The lower-bound display turns out not to hold against the actual wall
/// radius (see displayed_bound_holds); the substantive claims - L(k) > 1/300,
/// rho_Q/Delta_H > 1/300 and the stronger rho_Q^2/Delta_H > 1/300 that the
/// rank <= 2 conclusion rests on - are all checked exactly as well.
struct OurBoundReport {
    Int k{};
    Rational expr{};                  // L(k), the displayed lower bound
    bool expr_gt_1_300 = false;       // L(k) > 1/300
    Wall wall{};                      // Q_{alpha,beta} = 0 wall
    Rational delta{};                 // Delta_H of the class
    bool ratio_gt_1_300 = false;      // rho_Q / Delta_H > 1/300
    bool ratio_sq_gt_1_300 = false;   // rho_Q^2 / Delta_H > 1/300
    bool displayed_bound_holds = false;  // rho_Q / Delta_H >= L(k)
    bool pass = false;                   // all of the above
    std::string note;
};

inline ChernVector our_bound_class(const Int& k) {
    return {2, -1, Rational(k) + rat(1, 10), (15 * Rational(k * k) - 27 * k + 1) / 30};
}

inline OurBoundReport our_bound_check(const Int& k) {
    if (k > -2) throw std::domain_error("our_bound_check: requires k <= -2");
    OurBoundReport rep;
    rep.k = k;
    rep.expr = -Rational(9 * k, 800) - rat(11, 2000) - Rational(147) / (8000 - 20000 * Rational(k)) +
               Rational(2401) / (-2000000 * Rational(k * k * k) + 2400000 * Rational(k * k) -
                                 960000 * Rational(k) + 128000);
    rep.expr_gt_1_300 = rep.expr > rat(1, 300);

    const ChernVector v = our_bound_class(k);
    rep.wall = q_zero_wall(v);
    if (rep.wall.kind != Wall::Kind::Semicircle)
        throw std::logic_error("our_bound_check: Q-wall is not a semicircle");
    rep.delta = discriminant(truncate(v));

    const Rational r2 = rep.wall.radius_sq;
    // rho/Delta > 1/300  <=>  90000 r2 > Delta^2  (all positive)
    rep.ratio_gt_1_300 = 90000 * r2 > rep.delta * rep.delta;
    rep.ratio_sq_gt_1_300 = 300 * r2 > rep.delta;
    // rho/Delta >= L  <=>  r2 >= L^2 Delta^2 when L > 0
    rep.displayed_bound_holds =
        rep.expr <= 0 || r2 >= rep.expr * rep.expr * rep.delta * rep.delta;
    rep.pass = rep.expr_gt_1_300 && rep.ratio_gt_1_300 && rep.ratio_sq_gt_1_300 &&
               rep.displayed_bound_holds;
    if (!rep.displayed_bound_holds)
        rep.note = "published closed-form expression exceeds the actual rho_Q/Delta_H; "
                   "the operative inequalities (> 1/300) hold";
    return rep;
}

/// Exact evaluation of the two sides of the rank-one constant identity
///   (1/2)(H.ch_2/H^3)^2 + (H.ch_2/H^3) + 5/24  vs  (15k^2-27k+1)/30 + 2/25
/// at H.ch_2/H^3 = k + 1/10. The sides differ by 2k + 1/5 (degree one in k);
/// this reports, it never asserts equality.
struct SchmidtConstantReport {
    Int k{};
    Rational lhs{};
    Rational rhs{};
    Rational difference{};
};

inline SchmidtConstantReport schmidt_constant_check(const Int& k) {
    const Rational t = Rational(k) + rat(1, 10);
    SchmidtConstantReport rep;
    rep.k = k;
    rep.lhs = t * t / 2 + t + rat(5, 24);
    rep.rhs = (15 * Rational(k * k) - 27 * k + 1) / 30 + rat(2, 25);
    rep.difference = rep.lhs - rep.rhs;
    return rep;
}

} // namespace x5
