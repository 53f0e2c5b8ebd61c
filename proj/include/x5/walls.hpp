#pragma once

// Numerical walls W(v, w) = {nu(v) = nu(w)} in the (beta, alpha) half-plane:
// vertical rays or semicircles centered on the beta-axis. Walls carry the
// squared radius so all crossing and nesting predicates stay rational.

#include "x5/chern.hpp"
#include "x5/poly2.hpp"
#include "x5/quadnum.hpp"
#include "x5/rational.hpp"
#include "x5/tilt.hpp"

#include <stdexcept>

namespace x5 {

struct Wall {
    enum class Kind { Vertical, Semicircle, Degenerate };

    Kind kind = Kind::Degenerate;
    Rational beta0{};      // vertical ray position
    Rational center{};     // semicircle center on the beta-axis
    Rational radius_sq{};  // semicircle squared radius, > 0

    static Wall vertical(Rational b) { return {Kind::Vertical, std::move(b), {}, {}}; }
    static Wall semicircle(Rational c, Rational r2) {
        return {Kind::Semicircle, {}, std::move(c), std::move(r2)};
    }
    static Wall degenerate() { return {}; }
};

inline bool operator==(const Wall& a, const Wall& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Wall::Kind::Vertical: return a.beta0 == b.beta0;
        case Wall::Kind::Semicircle: return a.center == b.center && a.radius_sq == b.radius_sq;
        case Wall::Kind::Degenerate: return true;
    }
    return false;
}

/// W(v, w). Writing K = c_v r_w - c_w r_v, M = d_v r_w - d_w r_v and
/// L = d_v c_w - d_w c_v, the locus nu(v) = nu(w) is
///   K (beta^2 + alpha^2)/2 - M beta + L = 0.
/// K != 0 gives a circle with center M/K and squared radius (M/K)^2 - 2L/K;
/// K = 0, M != 0 a vertical ray at L/M; proportional classes (K = M = L = 0)
/// and empty circles degenerate.
inline Wall numerical_wall(const ChernVec2& v, const ChernVec2& w) {
    const Rational K = Rational(v.c * w.r) - Rational(w.c * v.r);
    const Rational M = v.d * w.r - w.d * v.r;
    const Rational L = v.d * w.c - w.d * v.c;
    if (K == 0) {
        if (M == 0) return Wall::degenerate();  // covers proportional classes
        return Wall::vertical(L / M);
    }
    const Rational center = M / K;
    const Rational r2 = center * center - 2 * L / K;
    if (r2 <= 0) return Wall::degenerate();
    return Wall::semicircle(center, r2);
}

/// True iff the wall meets {beta = beta0, alpha > 0}: strict interior
/// crossing for semicircles, coincidence for verticals.
inline bool wall_crosses_ray(const Wall& wall, const Rational& beta0) {
    switch (wall.kind) {
        case Wall::Kind::Vertical: return wall.beta0 == beta0;
        case Wall::Kind::Semicircle: {
            const Rational off = beta0 - wall.center;
            return off * off < wall.radius_sq;
        }
        case Wall::Kind::Degenerate: return false;
    }
    return false;
}

/// The locus Q_{alpha,beta}(v) = 0: the numerical wall of v_{<=2} against
/// (5 c, 10 d, 15 e), with Q < 0 exactly on the open semidisk it bounds.
inline Wall q_zero_wall(const ChernVector& v) {
    if (discriminant(truncate(v)) <= 0)
        throw std::domain_error("q_zero_wall: non-positive discriminant");
    // 10d is an integer on the Chern lattice; reject otherwise.
    if (!is_integer(10 * v.d)) throw std::domain_error("q_zero_wall: d off the lattice");
    // The partner class is H^3 * (c, 2d, 3e), scaled to land in the lattice.
    const Int h3 = variety().h3;
    return numerical_wall(truncate(v), ChernVec2{h3 * v.c, num(h3 * 2 * v.d), h3 * 3 * v.e});
}

/// Membership in the open semidisk where Q_{alpha,beta}(v) < 0.
inline bool q_negative_inside(const ChernVector& v, const Rational& beta, const Rational& alpha) {
    return q_bmt(v, beta, alpha) < 0;
}

/// Upper bound for the squared radius of a wall given by a subobject of rank
/// s > ch_0(v) >= 0:  Delta_H(v) / (4 * 5s * 5(s - r)).
inline Rational radius_bound_sub(const ChernVec2& v, const Int& s) {
    if (v.r < 0 || s <= v.r) throw std::domain_error("radius_bound_sub: requires s > r >= 0");
    const Int h3 = variety().h3;
    return discriminant(v) / (Rational(4 * h3 * h3) * s * (s - v.r));
}

/// Symbolic second-tilt charge of a fixed class as polynomials in (beta, alpha).
inline std::pair<Poly2, Poly2> z_s_poly(const ChernVector& v, const Rational& s) {
    const Poly2 beta = Poly2::var_beta(), alpha = Poly2::var_alpha();
    const Poly2 beta2 = beta * beta, beta3 = beta2 * beta;
    const Poly2 alpha2 = alpha * alpha, alpha3 = alpha2 * alpha;
    return z_s_charge<Poly2>(v, beta, beta2, beta3, alpha, alpha2, alpha3, s);
}

/// Im(Z_s(A) * conj(Z_s(B))) as an exact polynomial; its zero locus is where
/// the two charges are R-linearly dependent.
inline Poly2 dependence_curve(const ChernVector& A, const ChernVector& B, const Rational& s) {
    auto [reA, imA] = z_s_poly(A, s);
    auto [reB, imB] = z_s_poly(B, s);
    return imA * reB - reA * imB;
}

} // namespace x5
