#pragma once

// Divisor classes D = a H' + b1 E1 + ... + b4 E4 on the quintic del Pezzo
// surface S (a smooth hyperplane section of X5, the plane blown up in four
// points), the pushforward of ch(O_S(D)) to X5, and the integer optimization
// of ch_3 over classes with fixed total degree C = 3a + sum(b).
//
// The optimum maximizes a^2 - sum(b^2) with 3a + sum(b) = C: for fixed a the
// best b-tuple is the integer point closest to the all-equal point
// (C - 3a)/4, and a stays within one step of 3C/5. The closed form is
// organized by C mod 5; brute_force_divisor is the independent check.

#include "x5/chern.hpp"
#include "x5/rational.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace x5 {

struct DivisorClass {
    Int a{};
    std::array<Int, 4> b{};
};

inline bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.a == y.a && x.b == y.b;
}

/// Canonical representative: b sorted descending (the four exceptional
/// curves are interchangeable).
inline DivisorClass canonical(DivisorClass d) {
    std::sort(d.b.begin(), d.b.end(), [](const Int& p, const Int& q) { return p > q; });
    return d;
}

/// ch(i_* O_S(D)) = (0, 1, C/5 - 1/2, (a^2 - 3a - sum b^2 - sum b)/10 + 1/6)
/// with C = 3a + sum b. Always lands on the Chern lattice.
inline ChernVector pushforward_ch(const DivisorClass& D) {
    Int sum_b = 0, sum_b2 = 0;
    for (const Int& bi : D.b) {
        sum_b += bi;
        sum_b2 += bi * bi;
    }
    const Int C = 3 * D.a + sum_b;
    return {0, 1, Rational(C, 5) - rat(1, 2),
            Rational(D.a * D.a - 3 * D.a - sum_b2 - sum_b, 10) + rat(1, 6)};
}

struct OptResult {
    Int C{};
    Rational max_ch3{};
    std::vector<DivisorClass> argmax;  // canonicalized, deduplicated, sorted
};

namespace detail {

inline void finalize_argmax(std::vector<DivisorClass>& arg) {
    for (auto& d : arg) d = canonical(d);
    std::sort(arg.begin(), arg.end(), [](const DivisorClass& x, const DivisorClass& y) {
        if (x.a != y.a) return x.a < y.a;
        return std::lexicographical_compare(x.b.begin(), x.b.end(), y.b.begin(), y.b.end());
    });
    arg.erase(std::unique(arg.begin(), arg.end()), arg.end());
}

inline DivisorClass make_div(Int a, Int b1, Int b2, Int b3, Int b4) {
    return {std::move(a), {std::move(b1), std::move(b2), std::move(b3), std::move(b4)}};
}

} // namespace detail

/// Closed-form maximum of ch_3(i_* O_S(D)) over integer classes with
/// 3a + sum(b) = C, with the extremal families per residue of C mod 5.
inline OptResult optimize_divisor(const Int& C) {
    // k such that C is 5k, 5k+1, 5k-1, 5k+2 or 5k-2.
    const auto mod5 = [](const Int& n) {
        Int m = n % 5;
        if (m < 0) m += 5;
        return static_cast<int>(m);
    };
    OptResult out;
    out.C = C;
    const int m = mod5(C);
    Int k;
    switch (m) {
        case 0:
            k = C / 5;
            out.max_ch3 = Rational(k * k - k, 2) + rat(1, 6);
            out.argmax = {detail::make_div(3 * k, -k, -k, -k, -k)};
            break;
        case 1:
            k = (C - 1) / 5;
            out.max_ch3 = Rational(5 * k * k - 3 * k - 2, 10) + rat(1, 6);
            out.argmax = {detail::make_div(3 * k, 1 - k, -k, -k, -k),
                          detail::make_div(3 * k + 1, -k, -k, -k - 1, -k - 1)};
            break;
        case 4:  // C = 5k - 1
            k = (C + 1) / 5;
            out.max_ch3 = Rational(5 * k * k - 7 * k, 10) + rat(1, 6);
            out.argmax = {detail::make_div(3 * k, -1 - k, -k, -k, -k),
                          detail::make_div(3 * k - 1, -k, -k, 1 - k, 1 - k)};
            break;
        case 2:
            k = (C - 2) / 5;
            out.max_ch3 = Rational(5 * k * k - k - 2, 10) + rat(1, 6);
            out.argmax = {detail::make_div(3 * k + 1, -1 - k, -k, -k, -k),
                          detail::make_div(3 * k + 2, -1 - k, -1 - k, -1 - k, -1 - k)};
            break;
        default:  // m == 3, C = 5k - 2
            k = (C + 2) / 5;
            out.max_ch3 = Rational(5 * k * k - 9 * k + 2, 10) + rat(1, 6);
            out.argmax = {detail::make_div(3 * k - 1, 1 - k, -k, -k, -k),
                          detail::make_div(3 * k - 2, 1 - k, 1 - k, 1 - k, 1 - k)};
            break;
    }
    detail::finalize_argmax(out.argmax);
    return out;
}

/// Exhaustive maximum over |a - 3C/5| <= radius and b-tuples within radius of
/// their balanced value (C - 3a)/4. Since sum(b) = C - 3a is pinned,
/// maximizing ch_3 is maximizing q = a^2 - sum(b^2), which fits in machine
/// integers for any sane radius; each argmax is re-checked against the exact
/// pushforward at the end. Fails loudly if the optimum touches the search
/// boundary, in which case the caller should enlarge the radius.
inline OptResult brute_force_divisor(const Int& C, int radius) {
    if (radius < 1) throw std::domain_error("brute_force_divisor: radius must be positive");
    const long c_long = static_cast<long>(C);
    if (c_long > 100000 || c_long < -100000)
        throw std::domain_error("brute_force_divisor: |C| too large for the machine-integer scan");

    bool have = false;
    bool boundary = false;
    long best_q = 0;
    std::vector<DivisorClass> argmax;

    const long a_center = static_cast<long>(rat_floor(Rational(3 * C, 5)));
    for (long a = a_center - radius; a <= a_center + radius + 1; ++a) {
        const long T = c_long - 3 * a;
        const long t_center = T >= 0 ? T / 4 : -((-T + 3) / 4);  // floor(T/4)
        const long blo = t_center - radius, bhi = t_center + radius + 1;
        for (long b1 = blo; b1 <= bhi; ++b1)
            for (long b2 = blo; b2 <= bhi; ++b2)
                for (long b3 = blo; b3 <= bhi; ++b3) {
                    const long b4 = T - b1 - b2 - b3;
                    if (b4 < blo || b4 > bhi) continue;
                    const long q = a * a - b1 * b1 - b2 * b2 - b3 * b3 - b4 * b4;
                    if (have && q < best_q) continue;
                    const bool on_edge = a == a_center - radius || a == a_center + radius + 1 ||
                                         b1 == blo || b1 == bhi || b2 == blo || b2 == bhi ||
                                         b3 == blo || b3 == bhi || b4 == blo || b4 == bhi;
                    if (!have || q > best_q) {
                        have = true;
                        best_q = q;
                        argmax = {detail::make_div(a, b1, b2, b3, b4)};
                        boundary = on_edge;
                    } else {
                        argmax.push_back(detail::make_div(a, b1, b2, b3, b4));
                        boundary = boundary || on_edge;
                    }
                }
    }
    if (!have || boundary)
        throw std::runtime_error("brute_force_divisor: optimum on the search boundary; enlarge radius");

    OptResult out;
    out.C = C;
    out.max_ch3 = (Rational(best_q) - C) / 10 + rat(1, 6);
    out.argmax = std::move(argmax);
    detail::finalize_argmax(out.argmax);
    // The integer objective and the exact pushforward must agree.
    for (const auto& d : out.argmax)
        if (pushforward_ch(d).e != out.max_ch3)
            throw std::logic_error("brute_force_divisor: objective mismatch");
    return out;
}

/// Chern characters of the conjectural extremal extensions:
///   c1 = -1:  0 -> O(-1)^2 -> E -> O_S(D) -> 0
///   c1 =  0:  0 -> U       -> E -> O_S(D) -> 0
enum class ExtensionKind { C1NegOne, C1Zero };

inline ChernVector extension_ch(ExtensionKind kind, const DivisorClass& D) {
    const ChernVector g = pushforward_ch(D);
    if (kind == ExtensionKind::C1NegOne) return Int(2) * ch_line_bundle(-1) + g;
    return ch_U() + g;
}

/// Conjectured maximal e for rank-2 classes with c1 in {-1, 0} and large
/// discriminant: the stated constant plus the divisor optimum for C.
inline Rational conjecture_bound(int c1, const Int& C) {
    const Rational best = optimize_divisor(C).max_ch3;
    if (c1 == -1) return rat(-1, 3) + best;
    if (c1 == 0) return rat(1, 30) + best;
    throw std::domain_error("conjecture_bound: c1 must be -1 or 0");
}

/// Divisor-parametrized standard object: ch(i_* O_S(D)).
inline ChernVector standard_object(const std::string& name, const DivisorClass& D) {
    if (name == "O_S" || name == "O_S(D)") return pushforward_ch(D);
    throw std::domain_error("unknown divisor-supported object '" + name + "'");
}

} // namespace x5
