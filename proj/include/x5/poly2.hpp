#pragma once

// Small bivariate polynomials over Q in the half-plane coordinates (beta,
// alpha). Only what the dependence curves and implicit plots need: ring
// arithmetic and exact evaluation.

#include "x5/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace x5 {

class Poly2 {
public:
    using Key = std::pair<int, int>;  // (degree in beta, degree in alpha)

    Poly2() = default;
    explicit Poly2(const Rational& constant) {
        if (constant != 0) terms_[{0, 0}] = constant;
    }
    static Poly2 monomial(int i, int j, const Rational& coeff) {
        Poly2 p;
        if (coeff != 0) p.terms_[{i, j}] = coeff;
        return p;
    }
    static Poly2 var_beta() { return monomial(1, 0, 1); }
    static Poly2 var_alpha() { return monomial(0, 1, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    Poly2& operator+=(const Poly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator-(const Poly2& a) {
        Poly2 r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    friend Poly2 operator*(const Poly2& a, const Rational& s) { return a * Poly2(s); }
    friend Poly2 operator*(const Rational& s, const Poly2& a) { return a * Poly2(s); }

    Rational eval(const Rational& beta, const Rational& alpha) const {
        Rational acc = 0;
        for (const auto& [k, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < k.first; ++i) t *= beta;
            for (int j = 0; j < k.second; ++j) t *= alpha;
            acc += t;
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + rat_to_string(c) + ")";
            if (k.first) s += "*b^" + std::to_string(k.first);
            if (k.second) s += "*a^" + std::to_string(k.second);
        }
        return s;
    }

private:
    void add_term(const Key& k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<Key, Rational> terms_;
};

} // namespace x5
