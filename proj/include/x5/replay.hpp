#pragma once

// Machine-checked replays of the rank-2 / rank-3 case analyses that feed the
// main classification table. Each case re-runs the destabilizer scan and the
// relevant ch_3 bound route with exact arithmetic and compares against the
// recorded expected outcome. Steps that rest on categorical input (vanishing
// of Hom spaces, heart membership, reflexivity) are not re-proven here; they
// are recorded as named assumptions so the audit trail shows exactly what is
// verified numerically and what is taken on trust.

#include "x5/bounds.hpp"
#include "x5/chern.hpp"
#include "x5/delpezzo.hpp"
#include "x5/destab.hpp"
#include "x5/rational.hpp"
#include "x5/walls.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace x5 {

struct ReplayCheck {
    std::string name;
    bool pass = false;
    bool assumed = false;  // taken on trust, recorded but not verified
    std::string detail;
};

struct ReplayResult {
    std::string case_id;
    ChernVec2 target{};
    std::vector<ReplayCheck> checks;
    std::optional<Rational> e_bound;
    std::vector<std::string> notes;
    bool pass = true;

    void check(std::string name, bool ok, std::string detail = {}) {
        pass = pass && ok;
        checks.push_back({std::move(name), ok, false, std::move(detail)});
    }
    void assume(std::string name, std::string detail = {}) {
        checks.push_back({std::move(name), true, true, std::move(detail)});
    }
};

inline std::vector<std::string> replay_case_ids() {
    return {"3 -2 3/5", "U", "2 0 -1/5", "2 -1 -1/10", "3 -1 1/10", "3 1 1/10", "no2", "2 0 -2/5"};
}

namespace replay_detail {

inline bool survivors_equal(const SearchReport& rep, const std::vector<ChernVec2>& expect) {
    return rep.survivors == expect;
}

inline std::string survivors_str(const SearchReport& rep) {
    if (rep.survivors.empty()) return "none";
    std::string s;
    for (const auto& f : rep.survivors) {
        if (!s.empty()) s += "; ";
        s += "(" + f.r.str() + "," + f.c.str() + "," + rat_to_string(f.d) + ")";
    }
    return s;
}

// (3, -2, 3/5): no destabilizing candidates below the vertical wall, chi <= 0
// bound, then one lattice step down because the extremal character is realized
// only by a complex outside the tilted category.
inline ReplayResult case_3m2(const std::string& id) {
    ReplayResult r;
    r.case_id = id;
    r.target = {3, -2, rat(3, 5)};

    const SearchReport scan = enumerate_destabilizers(r.target);
    r.check("destabilizer scan is empty", survivors_equal(scan, {}),
            "survivors: " + survivors_str(scan));

    r.assume("h0 = 0", "the class is primitive, so the object is 2-stable; sections would split it");
    r.assume("h2 = 0",
             "a nonzero map to O(-2)[1] would destabilize below W(E, O(-2)[1]), but no wall exists");
    const BoundResult chi = chi_bound_e(r.target, 0);
    r.check("chi route gives -2/15", chi.e_max == rat(-2, 15), rat_to_string(chi.e_max));

    const ChernVector extremal{3, -2, rat(3, 5), rat(-2, 15)};
    const ChernVector shifted = Int(-1) * extremal;
    const HeartDecomposition hd = heart_decomposition(shifted);
    r.check("extremal shifted class decomposes as (1,0,1,0) in the exceptional heart",
            hd.feasible && hd.a == 1 && hd.b == 0 && hd.c == 1 && hd.d == 0);
    r.assume("extremal value excluded",
             "the unique heart complex with that character is O(-1)[2] + U, which does not lie in "
             "the tilted category; step one lattice unit down");
    const Rational final_bound = chi.e_max - rat(1, 10);
    r.check("final bound -7/30", final_bound == rat(-7, 30), rat_to_string(final_bound));
    r.e_bound = final_bound;
    return r;
}

// (2, -1, 1/10): one surviving wall candidate (3, -2, 3/5); chaining the
// sub/quotient bounds shows that branch lies strictly below the value realized
// by the tautological bundle, so the chi bound 1/30 is the answer.
inline ReplayResult case_U(const std::string& id) {
    ReplayResult r;
    r.case_id = id;
    r.target = {2, -1, rat(1, 10)};

    const SearchReport scan = enumerate_destabilizers(r.target);
    r.check("destabilizer scan finds exactly (3,-2,3/5)",
            survivors_equal(scan, {ChernVec2{3, -2, rat(3, 5)}}),
            "survivors: " + survivors_str(scan));

    const Rational sub_bound = rat(-7, 30);  // case "3 -2 3/5" final
    const Rational quot_bound = dual_class_e_bound(-1, 1);
    r.check("quotient class bound is 1/6", quot_bound == rat(1, 6));
    r.assume("quotient bound applies",
             "the wall is semicircular, so the quotient with ch_{<=2} = -ch_{<=2}(O(-1)) obeys the "
             "shifted trivial-class bound");
    const Rational branch = sub_bound + quot_bound;
    r.check("destabilized branch forces e <= -1/15", branch == rat(-1, 15));
    r.check("branch bound is beaten by the tautological bundle", branch < ch_U().e,
            "U has e = 1/30");
    r.assume("h0 = 0 and h2 = 0", "tilt stability left of the vertical wall kills both");
    const BoundResult chi = chi_bound_e(r.target, 0);
    r.check("chi route gives 1/30", chi.e_max == rat(1, 30), rat_to_string(chi.e_max));
    r.e_bound = chi.e_max;
    return r;
}

// (2, 0, -1/5): empty scan (the printed discriminant for this class is 10 but
// the lattice value is 20; rank 4 dies by an empty lattice window), chi bound.
inline ReplayResult case_2_0_m15(const std::string& id) {
    ReplayResult r;
    r.case_id = id;
    r.target = {2, 0, rat(-1, 5)};

    r.notes.push_back(
        "discriminant discrepancy: the published case analysis prints Delta_H = 10 for this class "
        "while the definition gives 25(c^2 - 2rd) = 20; the scan runs with 20, so rank 4 enters "
        "the window and is eliminated only because no lattice y fits");

    const SearchReport scan = enumerate_destabilizers(r.target);
    r.check("destabilizer scan is empty", survivors_equal(scan, {}),
            "survivors: " + survivors_str(scan));
    bool s4_seen = false, s4_empty = false;
    for (const auto& cell : scan.candidates)
        if (cell.s == 4) {
            s4_seen = true;
            s4_empty = cell.lattice_window_empty && !cell.pair_reject;
        }
    r.check("rank 4 candidate present and killed by empty lattice window", s4_seen && s4_empty);

    r.check("discriminant of the class is 20", discriminant(r.target) == 20);
    r.assume("h0 = 0 and h2 = 0", "2-stability and absence of semicircular walls");
    const BoundResult chi = chi_bound_e(r.target, 0);
    r.check("chi route gives -1/5", chi.e_max == rat(-1, 5), rat_to_string(chi.e_max));
    r.e_bound = chi.e_max;
    return r;
}

// (2, -1, -1/10): wall-free ray at beta = -1, Q-form bound 41 - 150e >= 0.
inline ReplayResult case_2m1(const std::string& id) {
    ReplayResult r;
    r.case_id = id;
    r.target = {2, -1, rat(-1, 10)};

    r.check("twisted degree at beta = -1 is minimal positive",
            minimal_ch1_check(r.target, -1));
    const BoundResult q = q_bound_e(r.target, -1);
    r.check("Q-form route gives 7/30", q.e_max == rat(7, 30), rat_to_string(q.e_max));

    // Geometry backing the equality analysis.
    const Wall w3 = numerical_wall(r.target, ChernVec2{-1, 3, rat(-9, 2)});  // O(-3)[1]
    r.check("W(E, O(-3)[1]) crosses beta = -1", wall_crosses_ray(w3, -1));
    const Wall w1 = numerical_wall(r.target, truncate(ch_line_bundle(-1)));
    r.check("W(E, O(-1)) only touches beta = -1", !wall_crosses_ray(w1, -1));
    const ChernVector extremal{2, -1, rat(-1, 10), rat(7, 30)};
    r.check("chi(O(-1), E) = 4 for the extremal character",
            euler_char(twist(extremal, 1)) == 4);
    r.assume("equality case", "four independent maps O(-1) -> E produce the extension witness");
    r.e_bound = q.e_max;
    return r;
}

// (3, -1, 1/10): empty scan, chi bound -1/6.
inline ReplayResult case_3m1(const std::string& id) {
    ReplayResult r;
    r.case_id = id;
    r.target = {3, -1, rat(1, 10)};

    const SearchReport scan = enumerate_destabilizers(r.target);
    r.check("destabilizer scan is empty", survivors_equal(scan, {}),
            "survivors: " + survivors_str(scan));
    r.assume("h0 = 0 and h2 = 0", "2-stability and absence of semicircular walls");
    const BoundResult chi = chi_bound_e(r.target, 0);
    r.check("chi route gives -1/6", chi.e_max == rat(-1, 6), rat_to_string(chi.e_max));
    r.e_bound = chi.e_max;
    return r;
}

// (3, 1, 1/10): twist down to the (3, -2, 3/5) case.
inline ReplayResult case_3p1(const std::string& id) {
    ReplayResult r;
    r.case_id = id;
    r.target = {3, 1, rat(1, 10)};

    const ChernVector twisted = twist(ChernVector{3, 1, rat(1, 10), 0}, -1);
    r.check("twist by O(-1) lands on (3, -2, 3/5) with e shifted by -1/10",
            twisted.r == 3 && twisted.c == -2 && twisted.d == rat(3, 5) &&
                twisted.e == rat(-1, 10));
    const Rational final_bound = rat(-7, 30) + rat(1, 10);
    r.check("final bound -2/15", final_bound == rat(-2, 15), rat_to_string(final_bound));
    r.e_bound = final_bound;
    return r;
}

// Non-existence for ch_{<=2} = (3, -1, 1/10): the reflexive case contradicts
// the two ch_3 bounds, the torsion correction contradicts Bogomolov-Gieseker.
inline ReplayResult case_no2(const std::string& id) {
    ReplayResult r;
    r.case_id = id;
    r.target = {3, -1, rat(1, 10)};

    const Rational bound_E = rat(-1, 6);      // case "3 -1 1/10"
    const Rational bound_dual = rat(-2, 15);  // case "3 1 1/10" applied to the dual
    r.assume("reflexive dual character",
             "for reflexive E the dual has ch_{<=2} = (3, 1, 1/10) and "
             "ch_3(E) + ch_3(dual) >= 0");
    r.check("bound sum is negative", bound_E + bound_dual < 0,
            rat_to_string(bound_E + bound_dual));
    r.assume("double dual correction",
             "a non-reflexive E gives ch_2(E**) = ch_2(E) + t with t >= 1/5");
    const Rational delta_bumped = discriminant(ChernVec2{3, -1, rat(1, 10) + rat(1, 5)});
    r.check("bumped class violates Bogomolov-Gieseker", delta_bumped < 0,
            rat_to_string(delta_bumped));
    r.notes.push_back("no tilt-semistable objects carry this truncated character; the class is "
                      "valid as an exclusion input for other scans");
    return r;
}

// (2, 0, -2/5): scan with and without the excluded class (3, -1, 1/10),
// radius bound for rank >= 4, chi bound 0 and the heart witness.
inline ReplayResult case_2_0_m25(const std::string& id) {
    ReplayResult r;
    r.case_id = id;
    r.target = {2, 0, rat(-2, 5)};

    SearchConfig with_excl;
    with_excl.exclusions = {ChernVec2{3, -1, rat(1, 10)}};
    const SearchReport scan_excl = enumerate_destabilizers(r.target, with_excl);
    r.check("scan with exclusion (3,-1,1/10) is empty", survivors_equal(scan_excl, {}),
            "survivors: " + survivors_str(scan_excl));

    const SearchReport scan_plain = enumerate_destabilizers(r.target);
    r.check("scan without exclusion finds exactly (3,-1,1/10)",
            survivors_equal(scan_plain, {ChernVec2{3, -1, rat(1, 10)}}),
            "survivors: " + survivors_str(scan_plain));

    const Rational rho_sq = radius_bound_sub(r.target, 4);
    r.check("rank >= 4 wall radius bound is 1/20", rho_sq == rat(1, 20));
    r.check("that radius stays below 3/10", rho_sq < rat(9, 100));
    r.assume("rank >= 4 walls harmless",
             "below a wall of radius <= sqrt(5)/10 the class still admits a point of nu = 0 "
             "inside D, so membership in the exceptional heart is unaffected");

    r.assume("h0 = 0 and h2 = 0",
             "tilt stability plus the position of W(E, O(-2)[1]) above W(E, O(-1)[1])");
    const BoundResult chi = chi_bound_e(r.target, 0);
    r.check("chi route gives 0", chi.e_max == 0, rat_to_string(chi.e_max));

    const HeartDecomposition hd = heart_decomposition(ChernVector{-2, 0, rat(2, 5), 0});
    r.check("extremal shifted class decomposes as (0,2,4,0) in the exceptional heart",
            hd.feasible && hd.a == 0 && hd.b == 2 && hd.c == 4 && hd.d == 0);
    r.e_bound = chi.e_max;
    return r;
}

} // namespace replay_detail

inline ReplayResult replay_lemma(const std::string& case_id) {
    if (case_id == "3 -2 3/5") return replay_detail::case_3m2(case_id);
    if (case_id == "U") return replay_detail::case_U(case_id);
    if (case_id == "2 0 -1/5") return replay_detail::case_2_0_m15(case_id);
    if (case_id == "2 -1 -1/10") return replay_detail::case_2m1(case_id);
    if (case_id == "3 -1 1/10") return replay_detail::case_3m1(case_id);
    if (case_id == "3 1 1/10") return replay_detail::case_3p1(case_id);
    if (case_id == "no2") return replay_detail::case_no2(case_id);
    if (case_id == "2 0 -2/5") return replay_detail::case_2_0_m25(case_id);
    throw std::domain_error("unknown replay case '" + case_id + "'");
}

/// One row of the classification table for rank-2 semistable sheaves of
/// small discriminant: maximal c_3 per (c_1, c_2).
struct TableRow {
    Int c1{}, c2{}, c3_max{};
    std::string route;
    std::string witness;
    std::vector<std::string> assumptions;
};

inline std::vector<TableRow> theorem_main_table() {
    std::vector<TableRow> rows;

    auto push = [&rows](const Int& c1, const Int& c2, const ReplayResult* replay,
                        const Rational& e_max, std::string route, std::string witness) {
        // Convert the e bound to c_3 through the lattice; it must be integral.
        const Rational d = Rational(c1 * c1, 2) - Rational(c2, 5);
        TableRow row;
        row.c1 = c1;
        row.c2 = c2;
        row.c3_max = to_chern_classes(ChernVector{2, c1, d, e_max}).c3;
        row.route = std::move(route);
        row.witness = std::move(witness);
        if (replay)
            for (const auto& c : replay->checks)
                if (c.assumed) row.assumptions.push_back(c.name + ": " + c.detail);
        rows.push_back(std::move(row));
    };

    const ReplayResult rU = replay_lemma("U");
    push(-1, 2, &rU, *rU.e_bound, "chi", "tautological subbundle U");

    const ReplayResult r13 = replay_lemma("2 -1 -1/10");
    push(-1, 3, &r13, *r13.e_bound, "q_form", "cokernel of U(-1) -> O(-1)^4");

    push(0, 0, nullptr, trivial_class_e_bound(0, 2), "trivial", "O^2");
    rows.back().assumptions.push_back(
        "extremal character with trivial truncation is the trivial sheaf itself");

    const ReplayResult r01 = replay_lemma("2 0 -1/5");
    push(0, 1, &r01, *r01.e_bound, "chi", "kernel of O^2 ->> O_L(1) for a line L");

    const ReplayResult r02 = replay_lemma("2 0 -2/5");
    push(0, 2, &r02, *r02.e_bound, "chi", "complex Q(-1)^2 -> U^4 (instanton-type sheaf)");

    return rows;
}

} // namespace x5
