#pragma once

// Exact arithmetic base types: arbitrary-precision integers and rationals.
// Every quantity in this library is exact; floating point appears only at
// the very last step of plot coordinate emission.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace x5 {

// Expression templates are disabled so arithmetic yields plain values that
// work in aggregate initializers and ternaries.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Int& n) { return n.sign(); }
inline int sign(const Rational& q) { return q.sign(); }

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return Rational(n, d); }

/// Largest integer <= q.
inline Int rat_floor(const Rational& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

/// Smallest integer >= q.
inline Int rat_ceil(const Rational& q) { return -rat_floor(-q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// Canonical "p/q" form; integers print without the denominator.
inline std::string rat_to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) {
        s += '/';
        s += den(q).str();
    }
    return s;
}

/// Parses "p", "-p/q", "+p/q". Throws std::invalid_argument on malformed input.
inline Rational rat_from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        Int n{std::string(text.substr(0, slash))};
        Int d{std::string(text.substr(slash + 1))};
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
}

/// Floor of sqrt for non-negative integers.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt_floor(n);
    return root * root == n;
}

/// If q is the square of a rational, writes that (non-negative) root.
inline bool rational_square_root(const Rational& q, Rational& root) {
    if (q < 0) return false;
    Int rn, rd;
    if (!is_perfect_square(num(q), rn) || !is_perfect_square(den(q), rd)) return false;
    root = Rational(rn, rd);
    return true;
}

/// Rational "q = a + b" style value together with a point at infinity.
/// Slope-like quantities (mu, nu) use this so that division by zero rank
/// uniformly reads as +infinity.
struct ExtRat {
    bool infinite = false;
    Rational value{};

    static ExtRat inf() { return {true, Rational{}}; }
    static ExtRat finite(Rational v) { return {false, std::move(v)}; }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
    /// +infinity compares greater than every finite value.
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
};

} // namespace x5
