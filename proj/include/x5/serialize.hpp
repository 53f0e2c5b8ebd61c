#pragma once

// JSON wire formats. Rationals always cross as exact "p/q" strings; integer
// fields as JSON numbers. Keys are emitted in nlohmann's ordered (sorted)
// layout, so parse -> dump round-trips are byte-identical.

#include "x5/bounds.hpp"
#include "x5/chern.hpp"
#include "x5/delpezzo.hpp"
#include "x5/destab.hpp"
#include "x5/quadnum.hpp"
#include "x5/rational.hpp"
#include "x5/replay.hpp"
#include "x5/walls.hpp"

#include <json.hpp>

#include <string>

namespace x5 {

using nlohmann::json;

inline json rat_json(const Rational& q) { return rat_to_string(q); }
inline Rational rat_from_json(const json& j) { return rat_from_string(j.get<std::string>()); }

inline long long int_json(const Int& n) { return static_cast<long long>(n); }

inline json to_json(const ChernVector& v) {
    return {{"r", int_json(v.r)}, {"c", int_json(v.c)}, {"d", rat_json(v.d)}, {"e", rat_json(v.e)}};
}
inline ChernVector chern_vector_from_json(const json& j) {
    return {Int(j.at("r").get<long long>()), Int(j.at("c").get<long long>()),
            rat_from_json(j.at("d")), rat_from_json(j.at("e"))};
}

inline json to_json(const ChernVec2& v) {
    return {{"r", int_json(v.r)}, {"c", int_json(v.c)}, {"d", rat_json(v.d)}};
}
inline ChernVec2 chern_vec2_from_json(const json& j) {
    return {Int(j.at("r").get<long long>()), Int(j.at("c").get<long long>()),
            rat_from_json(j.at("d"))};
}

inline json to_json(const QuadNum& x) {
    return {{"a", rat_json(x.a)}, {"b", rat_json(x.b)}, {"m", rat_json(x.m)}};
}
inline QuadNum quadnum_from_json(const json& j) {
    return quad_make(rat_from_json(j.at("a")), rat_from_json(j.at("b")), rat_from_json(j.at("m")));
}

inline json to_json(const Wall& w) {
    switch (w.kind) {
        case Wall::Kind::Vertical: return {{"kind", "vertical"}, {"beta0", rat_json(w.beta0)}};
        case Wall::Kind::Semicircle:
            return {{"kind", "semicircle"},
                    {"center", rat_json(w.center)},
                    {"radius_sq", rat_json(w.radius_sq)}};
        case Wall::Kind::Degenerate: return {{"kind", "degenerate"}};
    }
    return {{"kind", "degenerate"}};
}
inline Wall wall_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vertical") return Wall::vertical(rat_from_json(j.at("beta0")));
    if (kind == "semicircle")
        return Wall::semicircle(rat_from_json(j.at("center")), rat_from_json(j.at("radius_sq")));
    return Wall::degenerate();
}

inline json to_json(const SearchReport& rep) {
    json cands = json::array();
    for (const auto& cell : rep.candidates) {
        json ys = json::array();
        for (const auto& cy : cell.ys) {
            json y = {{"y", rat_json(cy.y)},
                      {"wall", to_json(cy.wall)},
                      {"status", cy.survivor ? "survivor" : "rejected"}};
            if (cy.reason) y["reason"] = reject_reason_name(*cy.reason);
            ys.push_back(std::move(y));
        }
        json c = {{"s", cell.s},
                  {"x", cell.x},
                  {"ys", std::move(ys)},
                  {"lattice_window_empty", cell.lattice_window_empty}};
        if (cell.pair_reject) c["pair_reject"] = reject_reason_name(*cell.pair_reject);
        cands.push_back(std::move(c));
    }
    json survivors = json::array();
    for (const auto& f : rep.survivors) survivors.push_back(to_json(f));
    return {{"target", to_json(rep.target)},
            {"beta_minus", to_json(rep.beta_minus)},
            {"candidates", std::move(cands)},
            {"survivors", std::move(survivors)},
            {"notes", rep.notes}};
}

inline json to_json(const DivisorClass& d) {
    json b = json::array();
    for (const auto& bi : d.b) b.push_back(int_json(bi));
    return {{"a", int_json(d.a)}, {"b", std::move(b)}};
}
inline DivisorClass divisor_from_json(const json& j) {
    DivisorClass d;
    d.a = Int(j.at("a").get<long long>());
    const auto& b = j.at("b");
    for (int i = 0; i < 4; ++i) d.b[static_cast<size_t>(i)] = Int(b.at(i).get<long long>());
    return d;
}

inline json to_json(const OptResult& r) {
    json arg = json::array();
    for (const auto& d : r.argmax) arg.push_back(to_json(d));
    return {{"C", int_json(r.C)}, {"max_ch3", rat_json(r.max_ch3)}, {"argmax", std::move(arg)}};
}

inline json to_json(const BoundResult& r) {
    return {{"e_max", rat_json(r.e_max)},
            {"route", bound_route_name(r.route)},
            {"assumptions", r.assumptions}};
}

inline json to_json(const ReplayResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            {{"name", c.name}, {"pass", c.pass}, {"assumed", c.assumed}, {"detail", c.detail}});
    json out = {{"case", r.case_id},
                {"target", to_json(r.target)},
                {"checks", std::move(checks)},
                {"notes", r.notes},
                {"pass", r.pass}};
    out["e_bound"] = r.e_bound ? json(rat_json(*r.e_bound)) : json(nullptr);
    return out;
}

inline json to_json(const TableRow& row) {
    return {{"c1", int_json(row.c1)},
            {"c2", int_json(row.c2)},
            {"c3_max", int_json(row.c3_max)},
            {"route", row.route},
            {"witness", row.witness},
            {"assumptions", row.assumptions}};
}

inline json to_json(const OurBoundReport& r) {
    return {{"k", int_json(r.k)},
            {"expr", rat_json(r.expr)},
            {"expr_gt_1_300", r.expr_gt_1_300},
            {"wall", to_json(r.wall)},
            {"delta", rat_json(r.delta)},
            {"ratio_gt_1_300", r.ratio_gt_1_300},
            {"ratio_sq_gt_1_300", r.ratio_sq_gt_1_300},
            {"displayed_bound_holds", r.displayed_bound_holds},
            {"pass", r.pass},
            {"note", r.note}};
}

inline json to_json(const SchmidtConstantReport& r) {
    return {{"k", int_json(r.k)},
            {"lhs", rat_json(r.lhs)},
            {"rhs", rat_json(r.rhs)},
            {"difference", rat_json(r.difference)}};
}

/// Canonical dump used by the CLI: 2-space indent, sorted keys, newline.
inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace x5
