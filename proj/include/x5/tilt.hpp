#pragma once

// Tilt-stability machinery on the upper half-plane: central charges, the two
// Bogomolov-Gieseker quadratic forms, beta_-/beta_+, the region D and the
// half-plane criterion for the exceptional collection O(-1), Q(-1), U, O.
//
// Normalization: every charge carries the intersection factor H^3 = 5
// uniformly. Ratios (slopes) are unaffected, and the generalized quadratic
// form reproduces the printed rank-2 values exactly (e.g. Q_{0,-1} = 41-150e
// for ch = (2,-1,-1/10,e)).

#include "x5/chern.hpp"
#include "x5/quadnum.hpp"
#include "x5/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

namespace x5 {

/// Point of the upper half-plane H = {(beta, alpha) : alpha > 0}.
struct TiltPoint {
    Rational beta{};
    Rational alpha{};
};

/// Tilt point together with the third stability parameter s (genuine
/// Bridgeland stability conditions need s > 1/6 on X5).
struct BridgelandPoint {
    Rational beta{};
    Rational alpha{};
    Rational s{};
};

/// Exact complex value as a (re, im) pair.
struct Charge {
    Rational re{};
    Rational im{};

    bool is_zero() const { return re == 0 && im == 0; }
};

/// Z^tilt = -H.ch_2^b + (alpha^2/2) H^3 ch_0^b + i H^2.ch_1^b.
inline Charge z_tilt(const ChernVec2& v, const TiltPoint& p) {
    const Int h3 = variety().h3;
    const Rational c_b = twisted_c1(v, p.beta);
    const Rational d_b = twisted_c2(v, p.beta);
    return {-h3 * d_b + p.alpha * p.alpha / 2 * h3 * v.r, h3 * c_b};
}

/// Tilt slope nu = -Re/Im of Z^tilt; +infinity on vanishing imaginary part.
inline ExtRat nu(const ChernVec2& v, const TiltPoint& p) {
    const Charge z = z_tilt(v, p);
    if (z.im == 0) return ExtRat::inf();
    return ExtRat::finite(-z.re / z.im);
}

/// Generic second-tilt charge; T is Rational for numeric evaluation and a
/// polynomial type for the dependence-curve computation. beta2/beta3 and
/// alpha2/alpha3 are the precomputed powers of the two coordinates.
template <class T>
inline std::pair<T, T> z_s_charge(const ChernVector& v, const T& beta, const T& beta2,
                                  const T& beta3, const T& alpha, const T& alpha2,
                                  const T& alpha3, const Rational& s) {
    const Rational h3(variety().h3);
    const T c_b = T(Rational(v.c)) - beta * Rational(v.r);
    const T d_b = T(v.d) - beta * Rational(v.c) + beta2 * Rational(v.r, 2);
    const T e_b = T(v.e) - beta * v.d + beta2 * (Rational(v.c) / 2) - beta3 * Rational(v.r, 6);
    T re = T(-h3) * e_b + alpha2 * (s * h3) * c_b;
    T im = alpha * (T(h3) * d_b) - alpha3 * (h3 * Rational(v.r) / 2);
    return {re, im};
}

/// Z_{alpha,beta,s} = -ch_3^b + s alpha^2 H^2.ch_1^b + i(alpha H.ch_2^b - (alpha^3 H^3/2) ch_0^b).
inline Charge z_bridgeland(const ChernVector& v, const BridgelandPoint& p) {
    const Rational b2 = p.beta * p.beta, b3 = b2 * p.beta;
    const Rational a2 = p.alpha * p.alpha, a3 = a2 * p.alpha;
    auto [re, im] = z_s_charge<Rational>(v, p.beta, b2, b3, p.alpha, a2, a3, p.s);
    return {re, im};
}

/// lambda slope of the second tilt; +infinity on vanishing imaginary part.
inline ExtRat lambda_slope(const ChernVector& v, const BridgelandPoint& p) {
    const Charge z = z_bridgeland(v, p);
    if (z.im == 0) return ExtRat::inf();
    return ExtRat::finite(-z.re / z.im);
}

/// Generalized Bogomolov-Gieseker form
///   Q_{alpha,beta} = alpha^2 Delta_H + 4 (H.ch_2^b)^2 - 6 (H^2.ch_1^b) ch_3^b,
/// evaluated as 25*[alpha^2 (c^2 - 2rd) + 4 (d^b)^2 - 6 c^b e^b].
/// alpha = 0 is allowed (closure of the half-plane).
inline Rational q_bmt(const ChernVector& v, const Rational& beta, const Rational& alpha) {
    const Int h3 = variety().h3;
    const ChernR4 t = twisted_ch(v, beta);
    const Rational qtilt = Rational(v.c * v.c) - 2 * v.r * v.d;
    return Rational(h3 * h3) * (alpha * alpha * qtilt + 4 * t.d * t.d - 6 * t.c * t.e);
}
inline Rational q_bmt(const ChernVector& v, const TiltPoint& p) { return q_bmt(v, p.beta, p.alpha); }

/// The two roots beta_-, beta_+ of nu_{0,beta}(v) = 0:
///   mu -+ sqrt(Delta_H) / (5 |r|).
inline std::pair<QuadNum, QuadNum> beta_pm(const ChernVec2& v) {
    if (v.r == 0) throw std::domain_error("beta_pm: rank zero");
    const Rational delta = discriminant(v);
    if (delta < 0) throw std::domain_error("beta_pm: negative discriminant");
    const Rational mu = Rational(v.c, v.r);
    const Rational inv = Rational(1, variety().h3 * boost::multiprecision::abs(v.r));
    return {quad_make(mu, -inv, delta), quad_make(mu, inv, delta)};
}

/// Region D = {beta < -1/2, 0 < alpha < beta + 1}.
inline bool in_region_D(const Rational& beta, const Rational& alpha) {
    return alpha > 0 && beta < rat(-1, 2) && alpha < beta + 1;
}

/// Which generator's phase bounds the half-plane, per the sign of
/// 5 alpha^2 - 5 beta^2 - 12 beta - 6.
enum class HalfPlaneGenerator { O_m1_shift3, Q_m1_shift2, U_shift1, O };

struct HalfPlaneResult {
    HalfPlaneGenerator generator;
    Charge direction;  // the charge whose argument serves as phi_1
};

namespace detail {

/// True iff every charge lies in {r e^{i pi phi} : r >= 0, phi1-1 < phi <= phi1}
/// where phi1 = arg(w)/pi: equivalently Im(z conj(w)) < 0, or z a non-negative
/// multiple of w.
inline bool charges_in_half_plane(const std::array<Charge, 4>& zs, const Charge& w) {
    if (w.is_zero()) return false;
    for (const Charge& z : zs) {
        if (z.is_zero()) return false;
        const Rational cross = z.im * w.re - z.re * w.im;
        if (cross < 0) continue;
        if (cross == 0 && z.re * w.re + z.im * w.im > 0) continue;
        return false;
    }
    return true;
}

} // namespace detail

/// Charges of the shifted exceptional collection O(-1)[3], Q(-1)[2], U[1], O.
inline std::array<Charge, 4> exceptional_charges(const BridgelandPoint& p) {
    const Charge z1 = z_bridgeland(ch_line_bundle(-1), p);
    const Charge z2 = z_bridgeland(ch_Q_m1(), p);
    const Charge z3 = z_bridgeland(ch_U(), p);
    const Charge z4 = z_bridgeland(ch_line_bundle(0), p);
    return {Charge{-z1.re, -z1.im}, z2, Charge{-z3.re, -z3.im}, z4};
}

/// Seeks phi_1 with all four exceptional charges in the half-open half-plane
/// (phi_1 - 1, phi_1]. The boundary generator is chosen by the sign of
/// 5a^2 - 5b^2 - 12b - 6 (O(-1)[3] when negative, Q(-1)[2] when positive,
/// either on the curve), falling back to the remaining charges; if no charge
/// direction works, no half-plane exists. Requires (beta, alpha) in D.
inline std::optional<HalfPlaneResult> half_plane_phi(const BridgelandPoint& p) {
    if (!in_region_D(p.beta, p.alpha)) throw std::domain_error("half_plane_phi: point outside D");
    const auto zs = exceptional_charges(p);
    const Rational disc = 5 * p.alpha * p.alpha - 5 * p.beta * p.beta - 12 * p.beta - 6;
    std::array<int, 4> order = disc < 0 ? std::array<int, 4>{0, 1, 2, 3}
                                        : std::array<int, 4>{1, 0, 2, 3};
    for (int idx : order) {
        if (detail::charges_in_half_plane(zs, zs[static_cast<size_t>(idx)]))
            return HalfPlaneResult{static_cast<HalfPlaneGenerator>(idx),
                                   zs[static_cast<size_t>(idx)]};
    }
    return std::nullopt;
}

} // namespace x5
