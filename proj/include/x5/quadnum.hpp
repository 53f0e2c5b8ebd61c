#pragma once

// Exact numbers of the form a + b*sqrt(m) with rational a, b and rational
// radicand m >= 0, together with a certified total order. All inequalities
// decided here are exact sign computations; interval arithmetic is never
// consulted (it exists only as a test oracle).

#include "x5/rational.hpp"

#include <cmath>
#include <compare>
#include <stdexcept>

namespace x5 {

struct QuadNum {
    Rational a{};  // rational part
    Rational b{};  // coefficient of sqrt(m)
    Rational m{};  // radicand, >= 0; m == 0 exactly when b == 0

    bool is_rational() const { return b == 0; }
};

namespace detail {

/// Sign of a + b*sqrt(u), u >= 0. At most one squaring.
inline int radical_sign1(const Rational& a, const Rational& b, const Rational& u) {
    if (u == 0 || b == 0) return sign(a);
    if (a == 0) return sign(b);
    if (sign(a) == sign(b)) return sign(a);
    // Opposite signs: compare a^2 against b^2 u.
    const Rational lhs = a * a, rhs = b * b * u;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sign(a) : sign(b);
}

/// Sign of a + b*sqrt(u) + c*sqrt(v), u,v >= 0. At most two squarings:
/// the difference lies in a biquadratic extension, so after isolating the
/// radical pair one more squaring reduces to radical_sign1 on sqrt(u*v).
inline int radical_sign2(Rational a, Rational b, Rational u, Rational c, Rational v) {
    if (u == 0) b = 0;
    if (v == 0) c = 0;
    int st;  // sign of t := b*sqrt(u) + c*sqrt(v)
    if (b == 0 && c == 0) st = 0;
    else if (c == 0) st = sign(b);
    else if (b == 0) st = sign(c);
    else if (sign(b) == sign(c)) st = sign(b);
    else {
        const Rational lhs = b * b * u, rhs = c * c * v;
        if (lhs == rhs) st = 0;
        else st = lhs > rhs ? sign(b) : sign(c);
    }
    if (a == 0) return st;
    if (st == 0) return sign(a);
    if (sign(a) == st) return sign(a);
    // a and t have opposite signs: sign(a + t) = sign(|a| - |t|) * sign(a),
    // and a^2 - t^2 = (a^2 - b^2 u - c^2 v) - 2bc*sqrt(uv).
    const int s2 = radical_sign1(a * a - b * b * u - c * c * v, -2 * b * c, u * v);
    if (s2 == 0) return 0;
    return s2 > 0 ? sign(a) : st;
}

} // namespace detail

/// Normalized constructor. Folds perfect-square radicands into the rational
/// part; b == 0 forces m == 0. Throws on negative radicand.
inline QuadNum quad_make(Rational a, Rational b, Rational m) {
    if (m < 0) throw std::domain_error("quad_make: negative radicand");
    if (b == 0 || m == 0) return QuadNum{std::move(a), Rational(0), Rational(0)};
    Rational root;
    if (rational_square_root(m, root)) return QuadNum{a + b * root, Rational(0), Rational(0)};
    return QuadNum{std::move(a), std::move(b), std::move(m)};
}

inline QuadNum quad_from_rat(Rational a) { return QuadNum{std::move(a), Rational(0), Rational(0)}; }

/// Exact sign of x (never approximate).
inline int quad_sign(const QuadNum& x) { return detail::radical_sign1(x.a, x.b, x.m); }

/// Exact sign of x - y.
inline int quad_cmp(const QuadNum& x, const QuadNum& y) {
    return detail::radical_sign2(x.a - y.a, x.b, x.m, -y.b, y.m);
}

inline int quad_cmp(const QuadNum& x, const Rational& y) {
    return detail::radical_sign1(x.a - y, x.b, x.m);
}

inline bool quad_eq(const QuadNum& x, const QuadNum& y) { return quad_cmp(x, y) == 0; }

inline std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
    const int s = quad_cmp(x, y);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}
inline bool operator==(const QuadNum& x, const QuadNum& y) { return quad_eq(x, y); }

inline QuadNum operator-(const QuadNum& x) { return QuadNum{-x.a, -x.b, x.m}; }

inline QuadNum operator+(const QuadNum& x, const Rational& t) { return QuadNum{x.a + t, x.b, x.m}; }
inline QuadNum operator-(const QuadNum& x, const Rational& t) { return QuadNum{x.a - t, x.b, x.m}; }

inline QuadNum operator*(const QuadNum& x, const Rational& t) {
    if (t == 0) return quad_from_rat(0);
    return QuadNum{x.a * t, x.b * t, x.m};
}
inline QuadNum operator*(const Rational& t, const QuadNum& x) { return x * t; }

/// Sum of two values sharing a radicand (or with one rational).
inline QuadNum quad_add(const QuadNum& x, const QuadNum& y) {
    if (y.is_rational()) return x + y.a;
    if (x.is_rational()) return y + x.a;
    if (x.m != y.m) throw std::domain_error("quad_add: incompatible radicands");
    return quad_make(x.a + y.a, x.b + y.b, x.m);
}

/// Product of two values sharing a radicand (or with one rational).
inline QuadNum quad_mul(const QuadNum& x, const QuadNum& y) {
    if (y.is_rational()) return x * y.a;
    if (x.is_rational()) return y * x.a;
    if (x.m != y.m) throw std::domain_error("quad_mul: incompatible radicands");
    return quad_make(x.a * y.a + x.b * y.b * x.m, x.a * y.b + x.b * y.a, x.m);
}

/// Largest integer <= x, via certified comparisons against integers.
inline Int quad_floor(const QuadNum& x) {
    if (x.is_rational()) return rat_floor(x.a);
    // |b*sqrt(m)| <= |b| * (1 + m), so bracket and bisect.
    const Rational bound = x.b * x.b * x.m;  // (b sqrt m)^2
    Int rad_mag = isqrt_floor(rat_ceil(bound)) + 1;
    Int lo = rat_floor(x.a) - rad_mag - 1;
    Int hi = rat_ceil(x.a) + rad_mag + 1;
    // Invariant: lo <= x < hi.
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;  // floor division safe: lo < hi
        if (quad_cmp(x, Rational(mid)) >= 0) lo = mid;
        else hi = mid;
    }
    return lo;
}

inline std::string quad_to_string(const QuadNum& x) {
    if (x.is_rational()) return rat_to_string(x.a);
    std::string s = rat_to_string(x.a);
    if (x.b > 0) s += " + " + rat_to_string(x.b);
    else s += " - " + rat_to_string(-x.b);
    s += "*sqrt(" + rat_to_string(x.m) + ")";
    return s;
}

/// Decimal approximation for display only.
inline double quad_to_double(const QuadNum& x) {
    double a = static_cast<double>(x.a);
    if (x.is_rational()) return a;
    double b = static_cast<double>(x.b), m = static_cast<double>(x.m);
    return a + b * std::sqrt(m);
}

} // namespace x5
