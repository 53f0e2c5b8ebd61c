#pragma once

// Chern characters on the degree-5 Fano threefold X5 (Picard rank 1, index 2,
// H^3 = 5). A character is stored by its H-power coefficients
//     ch(E) = r + c*H + d*H^2 + e*H^3,
// and pairings reinstate H^3 = 5 explicitly inside slope / discriminant / chi.
// Integrality of the Chern classes pins d and e to a lattice:
//     c2 = 5(c^2/2 - d)                      must be an integer,
//     c3 = 10(e - c^3/6 + c*c2/10)           must be an integer.

#include "x5/quadnum.hpp"
#include "x5/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace x5 {

/// Fixed intersection data of the variety, kept in one place: the degree
/// H^3 and the Todd class of the tangent bundle, td = 1 + td1 H + td2 H^2
/// + td3 H^3. Everything downstream (slopes, discriminants, chi, charges)
/// reinstates these explicitly.
struct VarietyData {
    Int h3;
    Rational td1, td2, td3;
};

inline const VarietyData& variety() {
    static const VarietyData k{5, 1, Rational(8, 15), Rational(1, 5)};
    return k;
}

/// Full character (ch_0..ch_3) by H-power coefficients. Fields are public and
/// unchecked so that intermediate arithmetic (differences v - F inside wall
/// searches, twisted characters at rational beta) can leave the lattice;
/// make_chern_vector enforces the lattice when a genuine object is meant.
struct ChernVector {
    Int r{};
    Int c{};
    Rational d{};
    Rational e{};
};

/// Truncation ch_{<=2}; the lattice here is Z^2 + (1/10)Z in d.
struct ChernVec2 {
    Int r{};
    Int c{};
    Rational d{};
};

inline ChernVec2 truncate(const ChernVector& v) { return {v.r, v.c, v.d}; }

inline bool operator==(const ChernVector& a, const ChernVector& b) {
    return a.r == b.r && a.c == b.c && a.d == b.d && a.e == b.e;
}
inline bool operator==(const ChernVec2& a, const ChernVec2& b) {
    return a.r == b.r && a.c == b.c && a.d == b.d;
}

inline ChernVector operator+(const ChernVector& a, const ChernVector& b) {
    return {a.r + b.r, a.c + b.c, a.d + b.d, a.e + b.e};
}
inline ChernVector operator-(const ChernVector& a, const ChernVector& b) {
    return {a.r - b.r, a.c - b.c, a.d - b.d, a.e - b.e};
}
inline ChernVec2 operator-(const ChernVec2& a, const ChernVec2& b) {
    return {a.r - b.r, a.c - b.c, a.d - b.d};
}
inline ChernVector operator*(const Int& n, const ChernVector& v) {
    return {n * v.r, n * v.c, n * v.d, n * v.e};
}

/// Chern classes of a lattice-valid character.
struct ChernClasses {
    Int r{}, c1{}, c2{}, c3{};
};

/// c2 as a rational; integral iff the ch_{<=2} lattice constraint holds.
inline Rational second_class(const ChernVec2& v) {
    return Rational(5) * (Rational(v.c * v.c, 2) - v.d);
}

inline bool lattice_valid2(const ChernVec2& v) { return is_integer(second_class(v)); }

inline Rational third_class(const ChernVector& v) {
    const Rational c2 = second_class(truncate(v));
    return Rational(10) * (v.e - Rational(v.c * v.c * v.c, 6) + Rational(v.c) * c2 / 10);
}

inline bool lattice_valid(const ChernVector& v) {
    return lattice_valid2(truncate(v)) && is_integer(third_class(v));
}

inline ChernClasses to_chern_classes(const ChernVector& v) {
    if (!lattice_valid(v)) throw std::domain_error("character violates the Chern lattice");
    const Rational c2 = second_class(truncate(v));
    return {v.r, v.c, num(c2), num(third_class(v))};
}

/// Checked constructor from H-power coefficients.
inline ChernVector make_chern_vector(Int r, Int c, Rational d, Rational e) {
    ChernVector v{std::move(r), std::move(c), std::move(d), std::move(e)};
    if (!lattice_valid(v)) throw std::domain_error("character violates the Chern lattice");
    return v;
}

/// ch from Chern classes: (r, c1, c1^2/2 - c2/5, c1^3/6 - c1 c2/10 + c3/10).
inline ChernVector from_chern_classes(const Int& r, const Int& c1, const Int& c2, const Int& c3) {
    return {r, c1, Rational(c1 * c1, 2) - Rational(c2, 5),
            Rational(c1 * c1 * c1, 6) - Rational(c1 * c2, 10) + Rational(c3, 10)};
}

/// Multiplication by e^{nH} (tensoring with O(n)). Preserves the lattice.
inline ChernVector twist(const ChernVector& v, const Int& n) {
    return {v.r,
            v.c + n * v.r,
            v.d + Rational(n) * v.c + Rational(n * n) * v.r / 2,
            v.e + Rational(n) * v.d + Rational(n * n) * v.c / 2 + Rational(n * n * n) * v.r / 6};
}

/// Rational 4-tuple for twisted characters, which leave the integer lattice.
struct ChernR4 {
    Rational r{}, c{}, d{}, e{};

    friend bool operator==(const ChernR4& a, const ChernR4& b) {
        return a.r == b.r && a.c == b.c && a.d == b.d && a.e == b.e;
    }
};

inline Rational discriminant(const ChernR4& t) {
    const Int h3 = variety().h3;
    return Rational(h3 * h3) * (t.c * t.c - 2 * t.r * t.d);
}

/// Twisted character ch^beta = e^{-beta H} * ch, componentwise.
inline ChernR4 twisted_ch(const ChernVector& v, const Rational& beta) {
    const Rational b2 = beta * beta, b3 = b2 * beta;
    return {Rational(v.r),
            Rational(v.c) - beta * v.r,
            v.d - beta * v.c + b2 * v.r / 2,
            v.e - beta * v.d + b2 * v.c / 2 - b3 * v.r / 6};
}

/// Twisted ch_1 coefficient c - beta*r.
inline Rational twisted_c1(const ChernVec2& v, const Rational& beta) {
    return Rational(v.c) - beta * v.r;
}
/// Twisted ch_2 coefficient d - beta*c + beta^2 r / 2.
inline Rational twisted_c2(const ChernVec2& v, const Rational& beta) {
    return v.d - beta * v.c + beta * beta * v.r / 2;
}

/// Character of RHom(E, O)[1] at the Chern level (derived dual, shifted).
/// For semistable objects of nonzero tilt slope the honest dual differs by a
/// zero-dimensional correction T >= 0 in ch_3; this returns the T = 0 value,
/// which callers treat as the extremal case.
inline ChernVector dual_shift(const ChernVector& v) { return {-v.r, v.c, -v.d, v.e}; }

/// chi(E) by Riemann-Roch: the H^3 coefficient of ch(E) * td(T_X) times the
/// degree. With the fixed Todd class this is r + (8/3) c + 5 d + 5 e.
inline Rational euler_char(const ChernVector& v) {
    const VarietyData& X = variety();
    return Rational(X.h3) *
           (Rational(v.r) * X.td3 + Rational(v.c) * X.td2 + v.d * X.td1 + v.e);
}

/// Slope mu = c/r with division by zero rank read as +infinity.
inline ExtRat slope(const ChernVec2& v) {
    if (v.r == 0) return ExtRat::inf();
    return ExtRat::finite(Rational(v.c, v.r));
}

/// Discriminant Delta_H = (H^2 ch_1)^2 - 2 (H^3 ch_0)(H ch_2)
/// = (H^3)^2 (c^2 - 2 r d), here 25(c^2 - 2rd).
inline Rational discriminant(const ChernVec2& v) {
    const Int h3 = variety().h3;
    return Rational(h3 * h3) * (Rational(v.c * v.c) - 2 * v.r * v.d);
}

// Characters of the standard objects.

/// ch(O(n)) = (1, n, n^2/2, n^3/6).
inline ChernVector ch_line_bundle(const Int& n) {
    return {1, n, Rational(n * n, 2), Rational(n * n * n, 6)};
}
/// Tautological subbundle restricted from Gr(2,5): ch(U) = (2, -1, 1/10, 1/30).
inline ChernVector ch_U() { return {2, -1, rat(1, 10), rat(1, 30)}; }
/// Twisted quotient bundle: ch(Q(-1)) = (3, -2, 2/5, 1/15).
inline ChernVector ch_Q_m1() { return {3, -2, rat(2, 5), rat(1, 15)}; }
/// Line supported sheaf O_L(m) on a line L in X: ch = (0, 0, 1/5, m/5).
inline ChernVector ch_OL(const Int& m) { return {0, 0, rat(1, 5), Rational(m, 5)}; }

/// Name-based lookup used by the CLI: O(n), U, Q(-1), O_L(m).
/// (O_S(D) classes come from the del Pezzo module's pushforward.)
inline ChernVector standard_object(const std::string& name, const Int& param = 0) {
    if (name == "O" || name == "O(n)") return ch_line_bundle(param);
    if (name == "U") return ch_U();
    if (name == "Q(-1)") return ch_Q_m1();
    if (name == "O_L" || name == "O_L(m)") return ch_OL(param);
    throw std::domain_error("unknown standard object '" + name + "'");
}

/// Coefficients of a class in the basis of shifted exceptional objects,
///   v = a*ch(O(-1)[3]) + b*ch(Q(-1)[2]) + c*ch(U[1]) + d*ch(O)
///     = -a*ch(O(-1)) + b*ch(Q(-1)) - c*ch(U) + d*ch(O).
/// The four characters form a basis (determinant 1/25), so the solution is
/// unique; feasible means all four coefficients are non-negative integers.
struct HeartDecomposition {
    Rational a{}, b{}, c{}, d{};
    bool feasible = false;
};

inline HeartDecomposition heart_decomposition(const ChernVector& v) {
    // Column vectors of the basis.
    const ChernVector colA = Int(-1) * ch_line_bundle(-1);  // O(-1)[3]
    const ChernVector colB = ch_Q_m1();                     // Q(-1)[2]
    const ChernVector colC = Int(-1) * ch_U();              // U[1]
    const ChernVector colD = ch_line_bundle(0);             // O

    // Solve the 4x4 system by Gaussian elimination over Q.
    Rational M[4][5];
    const ChernVector* cols[4] = {&colA, &colB, &colC, &colD};
    for (int j = 0; j < 4; ++j) {
        M[0][j] = Rational(cols[j]->r);
        M[1][j] = Rational(cols[j]->c);
        M[2][j] = cols[j]->d;
        M[3][j] = cols[j]->e;
    }
    M[0][4] = Rational(v.r);
    M[1][4] = Rational(v.c);
    M[2][4] = v.d;
    M[3][4] = v.e;

    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row)
            if (M[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) throw std::logic_error("exceptional characters do not form a basis");
        if (pivot != col)
            for (int j = 0; j <= 4; ++j) std::swap(M[pivot][j], M[col][j]);
        const Rational p = M[col][col];
        for (int j = col; j <= 4; ++j) M[col][j] /= p;
        for (int row = 0; row < 4; ++row) {
            if (row == col || M[row][col] == 0) continue;
            const Rational f = M[row][col];
            for (int j = col; j <= 4; ++j) M[row][j] -= f * M[col][j];
        }
    }

    HeartDecomposition out{M[0][4], M[1][4], M[2][4], M[3][4], false};
    out.feasible = is_integer(out.a) && out.a >= 0 && is_integer(out.b) && out.b >= 0 &&
                   is_integer(out.c) && out.c >= 0 && is_integer(out.d) && out.d >= 0;

    // The solution must reproduce v exactly (zero residual).
    const Rational coeff[4] = {out.a, out.b, out.c, out.d};
    const Rational target[4] = {Rational(v.r), Rational(v.c), v.d, v.e};
    for (int i = 0; i < 4; ++i) {
        Rational acc = 0;
        for (int j = 0; j < 4; ++j) {
            const Rational comp = i == 0   ? Rational(cols[j]->r)
                                  : i == 1 ? Rational(cols[j]->c)
                                  : i == 2 ? cols[j]->d
                                           : cols[j]->e;
            acc += coeff[j] * comp;
        }
        if (acc != target[i]) throw std::logic_error("heart decomposition residual is nonzero");
    }
    return out;
}

} // namespace x5
