#pragma once

// SVG rendering of the (beta, alpha) half-plane: numerical walls, the nu = 0
// hyperbola with its asymptotes, the Q = 0 wall, and the charge-dependence
// curves of the exceptional collection. Implicit curves are traced by
// marching squares over a grid whose node signs are evaluated exactly;
// coordinates become decimals only when written out (6 places).

#include "x5/chern.hpp"
#include "x5/poly2.hpp"
#include "x5/rational.hpp"
#include "x5/tilt.hpp"
#include "x5/walls.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace x5 {

struct Viewport {
    Rational xmin{}, xmax{};  // beta range
    Rational ymin{}, ymax{};  // alpha range

    bool empty() const { return xmax <= xmin || ymax <= ymin; }
};

namespace svg_detail {

inline std::string coord(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

class Canvas {
public:
    Canvas(const Viewport& vp, int width_px) : vp_(vp) {
        width_ = width_px;
        if (vp.empty()) {
            height_ = width_px;
            sx_ = sy_ = 1.0;
        } else {
            const double w = static_cast<double>(vp.xmax - vp.xmin);
            const double h = static_cast<double>(vp.ymax - vp.ymin);
            height_ = static_cast<int>(std::lround(width_px * h / w));
            if (height_ < 16) height_ = 16;
            sx_ = width_ / w;
            sy_ = height_ / h;
        }
    }

    double px(double beta) const { return (beta - static_cast<double>(vp_.xmin)) * sx_; }
    double py(double alpha) const { return height_ - (alpha - static_cast<double>(vp_.ymin)) * sy_; }
    double px(const Rational& beta) const { return px(static_cast<double>(beta)); }
    double py(const Rational& alpha) const { return py(static_cast<double>(alpha)); }

    void line(double x1, double y1, double x2, double y2, const std::string& style) {
        body_ += "<line x1=\"" + coord(x1) + "\" y1=\"" + coord(y1) + "\" x2=\"" + coord(x2) +
                 "\" y2=\"" + coord(y2) + "\" " + style + "/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
        if (pts.size() < 2) return;
        std::string s = "<polyline points=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) s += ' ';
            s += coord(pts[i].first) + "," + coord(pts[i].second);
        }
        s += "\" " + style + "/>\n";
        body_ += s;
    }

    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
        if (pts.size() < 3) return;
        std::string s = "<polygon points=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) s += ' ';
            s += coord(pts[i].first) + "," + coord(pts[i].second);
        }
        s += "\" " + style + "/>\n";
        body_ += s;
    }

    void text(double x, double y, const std::string& content) {
        body_ += "<text x=\"" + coord(x) + "\" y=\"" + coord(y) +
                 "\" font-size=\"11\" fill=\"#444\">" + content + "</text>\n";
    }

    std::string finish() const {
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               std::to_string(width_) + "\" height=\"" + std::to_string(height_) +
               "\" viewBox=\"0 0 " + std::to_string(width_) + " " + std::to_string(height_) +
               "\">\n";
        out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out += body_;
        out += "</svg>\n";
        return out;
    }

    const Viewport& viewport() const { return vp_; }

private:
    Viewport vp_;
    int width_ = 0, height_ = 0;
    double sx_ = 1.0, sy_ = 1.0;
    std::string body_;
};

/// Marching squares with exact signs at grid nodes (zero counts as negative
/// so curves through nodes still render). Returns segments in plane coords.
inline std::vector<std::array<Rational, 4>> trace_zero_locus(const Poly2& f, const Viewport& vp,
                                                             int grid) {
    std::vector<std::array<Rational, 4>> segments;
    if (vp.empty() || grid < 2) return segments;
    const Rational dx = (vp.xmax - vp.xmin) / grid;
    const Rational dy = (vp.ymax - vp.ymin) / grid;

    std::vector<Rational> vals(static_cast<size_t>((grid + 1) * (grid + 1)));
    auto at = [&](int i, int j) -> Rational& {
        return vals[static_cast<size_t>(j * (grid + 1) + i)];
    };
    for (int j = 0; j <= grid; ++j)
        for (int i = 0; i <= grid; ++i)
            at(i, j) = f.eval(vp.xmin + dx * i, vp.ymin + dy * j);

    auto neg = [](const Rational& v) { return v <= 0; };
    // Interpolated crossing on the segment (x0,y0)-(x1,y1).
    auto cross = [](const Rational& f0, const Rational& f1, const Rational& x0, const Rational& y0,
                    const Rational& x1, const Rational& y1) -> std::pair<Rational, Rational> {
        const Rational t = f0 == f1 ? Rational(1, 2) : f0 / (f0 - f1);
        return {x0 + t * (x1 - x0), y0 + t * (y1 - y0)};
    };

    for (int j = 0; j < grid; ++j) {
        for (int i = 0; i < grid; ++i) {
            const Rational x0 = vp.xmin + dx * i, x1 = x0 + dx;
            const Rational y0 = vp.ymin + dy * j, y1 = y0 + dy;
            const Rational f00 = at(i, j), f10 = at(i + 1, j);
            const Rational f01 = at(i, j + 1), f11 = at(i + 1, j + 1);
            int mask = 0;
            if (neg(f00)) mask |= 1;
            if (neg(f10)) mask |= 2;
            if (neg(f11)) mask |= 4;
            if (neg(f01)) mask |= 8;
            if (mask == 0 || mask == 15) continue;

            std::vector<std::pair<Rational, Rational>> pts;
            if (((mask & 1) != 0) != (((mask & 2) != 0)))  // bottom edge
                pts.push_back(cross(f00, f10, x0, y0, x1, y0));
            if (((mask & 2) != 0) != (((mask & 4) != 0)))  // right edge
                pts.push_back(cross(f10, f11, x1, y0, x1, y1));
            if (((mask & 4) != 0) != (((mask & 8) != 0)))  // top edge
                pts.push_back(cross(f11, f01, x1, y1, x0, y1));
            if (((mask & 8) != 0) != (((mask & 1) != 0)))  // left edge
                pts.push_back(cross(f01, f00, x0, y1, x0, y0));

            // Two crossings: one segment. Four (saddle): pair them in a fixed
            // deterministic order.
            for (size_t p = 0; p + 1 < pts.size(); p += 2)
                segments.push_back({pts[p].first, pts[p].second, pts[p + 1].first,
                                    pts[p + 1].second});
        }
    }
    return segments;
}

inline void draw_zero_locus(Canvas& cv, const Poly2& f, int grid, const std::string& style) {
    for (const auto& seg : trace_zero_locus(f, cv.viewport(), grid))
        cv.line(cv.px(seg[0]), cv.py(seg[1]), cv.px(seg[2]), cv.py(seg[3]), style);
}

inline void draw_axes(Canvas& cv) {
    const Viewport& vp = cv.viewport();
    if (vp.empty()) return;
    if (vp.ymin <= 0 && vp.ymax >= 0)
        cv.line(cv.px(vp.xmin), cv.py(Rational(0)), cv.px(vp.xmax), cv.py(Rational(0)),
                "stroke=\"#222\" stroke-width=\"1\"");
    if (vp.xmin <= 0 && vp.xmax >= 0)
        cv.line(cv.px(Rational(0)), cv.py(vp.ymin), cv.px(Rational(0)), cv.py(vp.ymax),
                "stroke=\"#222\" stroke-width=\"1\"");
}

/// Clips a convex polygon against the viewport (Sutherland-Hodgman, exact).
inline std::vector<std::pair<Rational, Rational>> clip_to_viewport(
    std::vector<std::pair<Rational, Rational>> poly, const Viewport& vp) {
    using Pt = std::pair<Rational, Rational>;
    // Each clip plane: keep(p) true if inside; intersect returns the boundary point.
    auto clip = [&poly](auto keep, auto intersect) {
        std::vector<Pt> out;
        const size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            const Pt& cur = poly[i];
            const Pt& nxt = poly[(i + 1) % n];
            const bool in_cur = keep(cur), in_nxt = keep(nxt);
            if (in_cur) out.push_back(cur);
            if (in_cur != in_nxt) out.push_back(intersect(cur, nxt));
        }
        poly = std::move(out);
    };
    auto lerp_x = [](const Pt& a, const Pt& b, const Rational& x) -> Pt {
        const Rational t = (x - a.first) / (b.first - a.first);
        return {x, a.second + t * (b.second - a.second)};
    };
    auto lerp_y = [](const Pt& a, const Pt& b, const Rational& y) -> Pt {
        const Rational t = (y - a.second) / (b.second - a.second);
        return {a.first + t * (b.first - a.first), y};
    };
    clip([&vp](const Pt& p) { return p.first >= vp.xmin; },
         [&](const Pt& a, const Pt& b) { return lerp_x(a, b, vp.xmin); });
    clip([&vp](const Pt& p) { return p.first <= vp.xmax; },
         [&](const Pt& a, const Pt& b) { return lerp_x(a, b, vp.xmax); });
    clip([&vp](const Pt& p) { return p.second >= vp.ymin; },
         [&](const Pt& a, const Pt& b) { return lerp_y(a, b, vp.ymin); });
    clip([&vp](const Pt& p) { return p.second <= vp.ymax; },
         [&](const Pt& a, const Pt& b) { return lerp_y(a, b, vp.ymax); });
    return poly;
}

} // namespace svg_detail

/// Wall diagram: beta-axis, the nu = 0 hyperbola of v (asymptotes dashed),
/// the selected numerical walls, and the Q = 0 wall of v highlighted.
inline std::string plot_walls(const ChernVector& v, const std::vector<ChernVec2>& partners,
                              const Viewport& vp, bool include_q_wall = true, int grid = 96,
                              int width_px = 720) {
    if (vp.ymin < 0) throw std::domain_error("plot_walls: viewport must have alpha >= 0");
    svg_detail::Canvas cv(vp, width_px);
    if (!vp.empty()) {
        svg_detail::draw_axes(cv);

        // nu = 0 locus: d - beta c + (beta^2 - alpha^2) r / 2 = 0.
        const Poly2 beta = Poly2::var_beta(), alpha = Poly2::var_alpha();
        const Poly2 nu_num = Poly2(v.d) - beta * Rational(v.c) +
                             (beta * beta - alpha * alpha) * Rational(v.r, 2);
        svg_detail::draw_zero_locus(cv, nu_num, grid, "stroke=\"#808\" stroke-width=\"1.2\" fill=\"none\"");

        if (v.r != 0) {
            const Rational mu = Rational(v.c, v.r);
            // Asymptotes beta -+ alpha = mu, dashed.
            const std::string dash = "stroke=\"#999\" stroke-width=\"0.8\" stroke-dasharray=\"5,4\"";
            cv.line(cv.px(mu + vp.ymin), cv.py(vp.ymin), cv.px(mu + vp.ymax), cv.py(vp.ymax), dash);
            cv.line(cv.px(mu - vp.ymin), cv.py(vp.ymin), cv.px(mu - vp.ymax), cv.py(vp.ymax), dash);
        }

        auto draw_wall = [&cv, &vp](const Wall& w, const std::string& style) {
            if (w.kind == Wall::Kind::Vertical) {
                cv.line(cv.px(w.beta0), cv.py(vp.ymin), cv.px(w.beta0), cv.py(vp.ymax), style);
            } else if (w.kind == Wall::Kind::Semicircle) {
                const double c = static_cast<double>(w.center);
                const double rho = std::sqrt(static_cast<double>(w.radius_sq));
                std::vector<std::pair<double, double>> pts;
                const int n = 96;
                for (int i = 0; i <= n; ++i) {
                    const double t = M_PI * i / n;
                    pts.emplace_back(cv.px(c - rho * std::cos(t)), cv.py(rho * std::sin(t)));
                }
                cv.polyline(pts, style + " fill=\"none\"");
            }
        };

        for (const auto& w2 : partners)
            draw_wall(numerical_wall(truncate(v), w2), "stroke=\"#26c\" stroke-width=\"1.2\"");
        if (v.r != 0)
            draw_wall(Wall::vertical(Rational(v.c, v.r)), "stroke=\"#26c\" stroke-width=\"1.2\"");
        if (include_q_wall && discriminant(truncate(v)) > 0)
            draw_wall(q_zero_wall(v), "stroke=\"#c22\" stroke-width=\"2\"");
    }
    return cv.finish();
}

/// Dependence-curve figure for the exceptional collection at parameter s:
/// the six pairwise loci where two charges become R-linearly dependent, with
/// the region D = {beta < -1/2, 0 < alpha < beta + 1} shaded.
inline std::string plot_figure1(const Rational& s, const Viewport& vp, int grid = 96,
                                int width_px = 720) {
    svg_detail::Canvas cv(vp, width_px);
    if (!vp.empty()) {
        svg_detail::draw_axes(cv);

        // Region D (a triangle), clipped exactly to the viewport.
        std::vector<std::pair<Rational, Rational>> tri = {
            {Rational(-1), Rational(0)}, {rat(-1, 2), Rational(0)}, {rat(-1, 2), rat(1, 2)}};
        auto clipped = svg_detail::clip_to_viewport(tri, vp);
        std::vector<std::pair<double, double>> pix;
        pix.reserve(clipped.size());
        for (const auto& p : clipped) pix.emplace_back(cv.px(p.first), cv.py(p.second));
        cv.polygon(pix, "fill=\"#fce8b0\" stroke=\"none\" opacity=\"0.8\"");

        // Boundary lines of D.
        const std::string bstyle = "stroke=\"#b90\" stroke-width=\"1\" stroke-dasharray=\"4,3\"";
        if (vp.xmin <= rat(-1, 2) && rat(-1, 2) <= vp.xmax)
            cv.line(cv.px(rat(-1, 2)), cv.py(vp.ymin), cv.px(rat(-1, 2)), cv.py(vp.ymax), bstyle);
        cv.line(cv.px(vp.ymin - 1), cv.py(vp.ymin), cv.px(vp.ymax - 1), cv.py(vp.ymax), bstyle);

        const std::array<ChernVector, 4> objs = {ch_line_bundle(-1), ch_Q_m1(), ch_U(),
                                                 ch_line_bundle(0)};
        const std::array<std::string, 6> colors = {"#9400d3", "#d32", "#283", "#26c",
                                                   "#e80", "#088"};
        int ci = 0;
        for (size_t i = 0; i < objs.size(); ++i)
            for (size_t j = i + 1; j < objs.size(); ++j) {
                const Poly2 f = dependence_curve(objs[i], objs[j], s);
                svg_detail::draw_zero_locus(
                    cv, f, grid,
                    "stroke=\"" + colors[static_cast<size_t>(ci)] + "\" stroke-width=\"1.2\"");
                ++ci;
            }
    }
    return cv.finish();
}

} // namespace x5
