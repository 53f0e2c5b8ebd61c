// Command-line front end: exact Chern-character arithmetic, wall geometry,
// destabilizer scans, ch_3 bounds, del Pezzo divisor optimization, SVG plots
// and the recorded-case verification suite. Rationals cross the CLI boundary
// as exact "p/q" strings; identical invocations produce byte-identical output.

#include <x5/serialize.hpp>
#include <x5/svg.hpp>
#include <x5/x5.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace x5;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << text;
}

ChernVector parse_vector(const std::string& r, const std::string& c, const std::string& d,
                         const std::string& e) {
    return {Int(r), Int(c), rat_from_string(d), rat_from_string(e)};
}

ChernVec2 parse_vec2(const std::string& r, const std::string& c, const std::string& d) {
    return {Int(r), Int(c), rat_from_string(d)};
}

/// "r,c,d" with d a rational string.
ChernVec2 parse_vec2_triple(const std::string& text) {
    std::stringstream ss(text);
    std::string r, c, d;
    if (!std::getline(ss, r, ',') || !std::getline(ss, c, ',') || !std::getline(ss, d, ','))
        throw std::invalid_argument("expected \"r,c,d\" but got '" + text + "'");
    return parse_vec2(r, c, d);
}

std::vector<ChernVec2> load_exclusions(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open exclusions file '" + path + "'");
    json j = json::parse(f);
    std::vector<ChernVec2> out;
    for (const auto& item : j) out.push_back(chern_vec2_from_json(item));
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += "\"\"";
        else q += ch;
    }
    return q + "\"";
}

int run(int argc, char** argv) {
    CLI::App app{"exact tilt-stability computations on the degree-5 Fano threefold"};
    app.require_subcommand(1);
    app.fallthrough();  // --out may follow the subcommand

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout")
        ->capture_default_str();

    // ---- chern ----
    auto* chern = app.add_subcommand("chern", "inspect a Chern character");
    std::string ch_r = "0", ch_c = "0", ch_d = "0", ch_e = "0";
    std::string ch_c1, ch_c2, ch_c3;
    std::string ch_format = "json";
    chern->add_option("--r", ch_r, "rank (ch_0)");
    chern->add_option("--c", ch_c, "H-coefficient of ch_1");
    chern->add_option("--d", ch_d, "H^2-coefficient of ch_2 (exact p/q)");
    chern->add_option("--e", ch_e, "H^3-coefficient of ch_3 (exact p/q)");
    chern->add_option("--c1", ch_c1, "first Chern class (switches to class input)");
    chern->add_option("--c2", ch_c2, "second Chern class");
    chern->add_option("--c3", ch_c3, "third Chern class");
    chern->add_option("--format", ch_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    // ---- chi ----
    auto* chi = app.add_subcommand("chi", "Euler characteristic of a character");
    std::string x_r = "0", x_c = "0", x_d = "0", x_e = "0";
    std::string chi_format = "json";
    chi->add_option("--r", x_r, "rank");
    chi->add_option("--c", x_c, "ch_1 coefficient");
    chi->add_option("--d", x_d, "ch_2 coefficient");
    chi->add_option("--e", x_e, "ch_3 coefficient");
    chi->add_option("--format", chi_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    // ---- wall ----
    auto* wall = app.add_subcommand("wall", "numerical wall of two classes, or the Q = 0 wall");
    std::string w_r = "0", w_c = "0", w_d = "0", w_e = "0";
    std::string w_fr, w_fc, w_fd;
    bool w_qwall = false;
    wall->add_option("--r", w_r, "target rank");
    wall->add_option("--c", w_c, "target ch_1");
    wall->add_option("--d", w_d, "target ch_2");
    wall->add_option("--e", w_e, "target ch_3 (for --q-wall)");
    wall->add_option("--fr", w_fr, "partner rank");
    wall->add_option("--fc", w_fc, "partner ch_1");
    wall->add_option("--fd", w_fd, "partner ch_2");
    wall->add_flag("--q-wall", w_qwall, "emit the wall where the generalized quadratic form vanishes");

    // ---- destab ----
    auto* destab = app.add_subcommand("destab", "scan for destabilizing classes");
    std::string s_r = "0", s_c = "0", s_d = "0";
    std::string exclusions_path;
    bool no_rank = false, non_strict = false, no_additivity = false;
    long s_max = 0;
    std::string destab_format = "json";
    destab->add_option("--r", s_r, "target rank");
    destab->add_option("--c", s_c, "target ch_1");
    destab->add_option("--d", s_d, "target ch_2");
    destab->add_option("--exclusions", exclusions_path,
                       "JSON file with classes known to carry no semistable objects");
    destab->add_flag("--no-rank-bound", no_rank, "disable the rank-bound pruning");
    destab->add_flag("--non-strict-window", non_strict, "close the ch_1 window at both ends");
    destab->add_flag("--no-delta-additivity", no_additivity,
                     "disable the discriminant additivity filter");
    destab->add_option("--s-max", s_max, "cap the subobject rank scan");
    destab->add_option("--format", destab_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "ch_3 bounds and related checks");
    std::string b_route = "chi";
    std::string b_r = "0", b_c = "0", b_d = "0";
    std::string b_chi_max = "0", b_beta = "-1", b_bound = "0";
    std::string b_n = "0", b_m = "1", b_k = "-2";
    std::string bounds_format = "json";
    bounds->add_option("--route", b_route,
                       "chi | q | trivial | dual | torsion0 | rank1 | lattice | our-bound | "
                       "schmidt | table")
        ->check(CLI::IsMember(
            {"chi", "q", "trivial", "dual", "torsion0", "rank1", "lattice", "our-bound",
             "schmidt", "table"}));
    bounds->add_option("--r", b_r, "rank");
    bounds->add_option("--c", b_c, "ch_1");
    bounds->add_option("--d", b_d, "ch_2");
    bounds->add_option("--chi-max", b_chi_max, "chi budget for the chi route");
    bounds->add_option("--beta", b_beta, "wall-free ray for the q route");
    bounds->add_option("--bound", b_bound, "raw bound for the lattice route");
    bounds->add_option("--n", b_n, "twist for trivial/dual routes");
    bounds->add_option("--m", b_m, "multiplicity for trivial/dual routes");
    bounds->add_option("--k", b_k, "parameter for our-bound/schmidt routes");
    bounds->add_option("--format", bounds_format, "json, csv (table route) or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // ---- delpezzo ----
    auto* delpezzo = app.add_subcommand("delpezzo", "divisor optimization on the quintic surface");
    std::string dp_C = "0";
    std::string dp_Cmin, dp_Cmax;
    std::string dp_format = "json";
    delpezzo->add_option("--C", dp_C, "total degree 3a + sum(b)");
    delpezzo->add_option("--C-min", dp_Cmin, "range start (emits a table)");
    delpezzo->add_option("--C-max", dp_Cmax, "range end");
    delpezzo->add_option("--format", dp_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- figure1 ----
    auto* fig1 = app.add_subcommand("figure1", "dependence curves of the exceptional collection");
    std::string f_s = "1/6", f_xmin = "-2", f_xmax = "0", f_ymin = "0", f_ymax = "6/5";
    int f_grid = 96, f_width = 720;
    fig1->add_option("--s", f_s, "stability parameter");
    fig1->add_option("--xmin", f_xmin, "viewport beta min");
    fig1->add_option("--xmax", f_xmax, "viewport beta max");
    fig1->add_option("--ymin", f_ymin, "viewport alpha min");
    fig1->add_option("--ymax", f_ymax, "viewport alpha max");
    fig1->add_option("--grid", f_grid, "marching grid resolution");
    fig1->add_option("--width", f_width, "SVG width in pixels");

    // ---- plot-walls ----
    auto* pwalls = app.add_subcommand("plot-walls", "wall diagram for a class");
    std::string p_r = "2", p_c = "-1", p_d = "-1/10", p_e = "7/30";
    std::vector<std::string> p_partners;
    bool p_no_qwall = false;
    std::string p_xmin = "-3", p_xmax = "0", p_ymin = "0", p_ymax = "3/2";
    int p_grid = 96, p_width = 720;
    pwalls->add_option("--r", p_r, "rank");
    pwalls->add_option("--c", p_c, "ch_1");
    pwalls->add_option("--d", p_d, "ch_2");
    pwalls->add_option("--e", p_e, "ch_3");
    pwalls->add_option("--wall", p_partners, "partner class \"r,c,d\" (repeatable)");
    pwalls->add_flag("--no-q-wall", p_no_qwall, "omit the Q = 0 wall");
    pwalls->add_option("--xmin", p_xmin, "viewport beta min");
    pwalls->add_option("--xmax", p_xmax, "viewport beta max");
    pwalls->add_option("--ymin", p_ymin, "viewport alpha min");
    pwalls->add_option("--ymax", p_ymax, "viewport alpha max");
    pwalls->add_option("--grid", p_grid, "marching grid resolution");
    pwalls->add_option("--width", p_width, "SVG width in pixels");

    // ---- verify-paper ----
    auto* verify = app.add_subcommand("verify-paper", "replay the recorded case analyses");
    std::string v_format = "text";
    verify->add_option("--format", v_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
        return 1;
    }

    if (chern->parsed()) {
        ChernVector v = !ch_c1.empty()
                            ? from_chern_classes(Int(ch_r), Int(ch_c1),
                                                 ch_c2.empty() ? Int(0) : Int(ch_c2),
                                                 ch_c3.empty() ? Int(0) : Int(ch_c3))
                            : parse_vector(ch_r, ch_c, ch_d, ch_e);
        json j = to_json(v);
        j["lattice_valid"] = lattice_valid(v);
        if (lattice_valid(v)) {
            const ChernClasses cc = to_chern_classes(v);
            j["classes"] = {{"c1", int_json(cc.c1)}, {"c2", int_json(cc.c2)},
                            {"c3", int_json(cc.c3)}};
        }
        j["chi"] = rat_json(euler_char(v));
        const ChernVec2 t = truncate(v);
        j["discriminant"] = rat_json(discriminant(t));
        const ExtRat mu = slope(t);
        j["mu"] = mu.infinite ? json("inf") : json(rat_to_string(mu.value));
        if (v.r != 0 && discriminant(t) >= 0) {
            const auto [bm, bp] = beta_pm(t);
            j["beta_minus"] = to_json(bm);
            j["beta_plus"] = to_json(bp);
        }
        const HeartDecomposition hd = heart_decomposition(v);
        j["heart_decomposition"] = {{"a", rat_json(hd.a)},
                                    {"b", rat_json(hd.b)},
                                    {"c", rat_json(hd.c)},
                                    {"d", rat_json(hd.d)},
                                    {"feasible", hd.feasible}};
        if (ch_format == "text") {
            std::ostringstream os;
            os << "ch = (" << v.r.str() << ", " << v.c.str() << ", " << rat_to_string(v.d) << ", "
               << rat_to_string(v.e) << ")\n"
               << "chi = " << rat_to_string(euler_char(v))
               << ", Delta_H = " << rat_to_string(discriminant(t)) << "\n";
            write_output(os.str(), out_path);
        } else {
            write_output(dump_json(j), out_path);
        }
        return 0;
    }

    if (chi->parsed()) {
        const ChernVector v = parse_vector(x_r, x_c, x_d, x_e);
        const Rational value = euler_char(v);
        if (chi_format == "text") write_output(rat_to_string(value) + "\n", out_path);
        else write_output(dump_json(json{{"chi", rat_json(value)}}), out_path);
        return 0;
    }

    if (wall->parsed()) {
        Wall w;
        if (w_qwall) {
            w = q_zero_wall(parse_vector(w_r, w_c, w_d, w_e));
        } else {
            if (w_fr.empty() || w_fc.empty() || w_fd.empty())
                throw std::invalid_argument("wall: provide --fr --fc --fd or use --q-wall");
            w = numerical_wall(parse_vec2(w_r, w_c, w_d), parse_vec2(w_fr, w_fc, w_fd));
        }
        write_output(dump_json(to_json(w)), out_path);
        return 0;
    }

    if (destab->parsed()) {
        SearchConfig cfg;
        cfg.use_rank_bound = !no_rank;
        cfg.use_delta_additivity = !no_additivity;
        cfg.strict_window = !non_strict;
        if (s_max > 0) cfg.s_max_override = s_max;
        if (!exclusions_path.empty()) cfg.exclusions = load_exclusions(exclusions_path);
        const SearchReport rep = enumerate_destabilizers(parse_vec2(s_r, s_c, s_d), cfg);
        if (destab_format == "text") {
            std::ostringstream os;
            os << "beta_- = " << quad_to_string(rep.beta_minus) << "\n";
            os << "survivors:" << (rep.survivors.empty() ? " none" : "") << "\n";
            for (const auto& f : rep.survivors)
                os << "  (" << f.r.str() << ", " << f.c.str() << ", " << rat_to_string(f.d)
                   << ")\n";
            write_output(os.str(), out_path);
        } else {
            write_output(dump_json(to_json(rep)), out_path);
        }
        return 0;
    }

    if (bounds->parsed()) {
        if (b_route == "table") {
            const auto rows = theorem_main_table();
            if (bounds_format == "csv") {
                std::ostringstream os;
                os << "c1,c2,c3_max,route,witness,assumptions\n";
                for (const auto& row : rows) {
                    std::string assume;
                    for (const auto& a : row.assumptions) {
                        if (!assume.empty()) assume += " | ";
                        assume += a;
                    }
                    os << row.c1.str() << "," << row.c2.str() << "," << row.c3_max.str() << ","
                       << csv_escape(row.route) << "," << csv_escape(row.witness) << ","
                       << csv_escape(assume) << "\n";
                }
                write_output(os.str(), out_path);
            } else {
                json j = json::array();
                for (const auto& row : rows) j.push_back(to_json(row));
                write_output(dump_json(j), out_path);
            }
            return 0;
        }
        if (b_route == "our-bound") {
            write_output(dump_json(to_json(our_bound_check(Int(b_k)))), out_path);
            return 0;
        }
        if (b_route == "schmidt") {
            write_output(dump_json(to_json(schmidt_constant_check(Int(b_k)))), out_path);
            return 0;
        }
        BoundResult res;
        if (b_route == "chi")
            res = chi_bound_e(parse_vec2(b_r, b_c, b_d), rat_from_string(b_chi_max));
        else if (b_route == "q")
            res = q_bound_e(parse_vec2(b_r, b_c, b_d), rat_from_string(b_beta));
        else if (b_route == "trivial")
            res = {trivial_class_e_bound(Int(b_n), Int(b_m)), BoundRoute::Trivial, {}};
        else if (b_route == "dual")
            res = {dual_class_e_bound(Int(b_n), Int(b_m)), BoundRoute::Dual, {}};
        else if (b_route == "torsion0")
            res = {torsion_rank0_bound(rat_from_string(b_d)), BoundRoute::Chain,
                   {"raw bound, not lattice-rounded"}};
        else if (b_route == "rank1")
            res = {rank_one_neg_bound(rat_from_string(b_d)), BoundRoute::QForm, {}};
        else  // lattice
            res = {lattice_e_floor(parse_vec2(b_r, b_c, b_d), rat_from_string(b_bound)),
                   BoundRoute::Chain,
                   {"largest admissible e on the lattice below the given bound"}};
        write_output(dump_json(to_json(res)), out_path);
        return 0;
    }

    if (delpezzo->parsed()) {
        if (!dp_Cmin.empty() || !dp_Cmax.empty()) {
            if (dp_Cmin.empty() || dp_Cmax.empty())
                throw std::invalid_argument("delpezzo: provide both --C-min and --C-max");
            const long lo = std::stol(dp_Cmin), hi = std::stol(dp_Cmax);
            if (lo > hi) throw std::invalid_argument("delpezzo: empty range");
            if (dp_format == "csv") {
                std::ostringstream os;
                os << "C,max_ch3,argmax\n";
                for (long C = lo; C <= hi; ++C) {
                    const OptResult r = optimize_divisor(C);
                    std::string arg;
                    for (const auto& d : r.argmax) {
                        if (!arg.empty()) arg += " | ";
                        arg += "a=" + d.a.str() + " b=(" + d.b[0].str() + "," + d.b[1].str() +
                               "," + d.b[2].str() + "," + d.b[3].str() + ")";
                    }
                    os << C << "," << rat_to_string(r.max_ch3) << "," << csv_escape(arg) << "\n";
                }
                write_output(os.str(), out_path);
            } else {
                json j = json::array();
                for (long C = lo; C <= hi; ++C) j.push_back(to_json(optimize_divisor(C)));
                write_output(dump_json(j), out_path);
            }
        } else {
            write_output(dump_json(to_json(optimize_divisor(Int(dp_C)))), out_path);
        }
        return 0;
    }

    if (fig1->parsed()) {
        const Viewport vp{rat_from_string(f_xmin), rat_from_string(f_xmax),
                          rat_from_string(f_ymin), rat_from_string(f_ymax)};
        write_output(plot_figure1(rat_from_string(f_s), vp, f_grid, f_width), out_path);
        return 0;
    }

    if (pwalls->parsed()) {
        const Viewport vp{rat_from_string(p_xmin), rat_from_string(p_xmax),
                          rat_from_string(p_ymin), rat_from_string(p_ymax)};
        std::vector<ChernVec2> partners;
        for (const auto& text : p_partners) partners.push_back(parse_vec2_triple(text));
        const ChernVector v = parse_vector(p_r, p_c, p_d, p_e);
        const bool q = !p_no_qwall && discriminant(truncate(v)) > 0;
        write_output(plot_walls(v, partners, vp, q, p_grid, p_width), out_path);
        return 0;
    }

    if (verify->parsed()) {
        bool all_pass = true;
        json cases = json::array();
        std::ostringstream os;
        for (const std::string& id : replay_case_ids()) {
            const ReplayResult r = replay_lemma(id);
            all_pass = all_pass && r.pass;
            cases.push_back(to_json(r));
            os << (r.pass ? "PASS" : "FAIL") << "  " << id;
            if (r.e_bound) os << "  e_max = " << rat_to_string(*r.e_bound);
            os << "\n";
            for (const auto& c : r.checks)
                if (c.assumed) os << "        assumed: " << c.name << "\n";
            for (const auto& n : r.notes) os << "        note: " << n << "\n";
        }
        const auto rows = theorem_main_table();
        os << "classification table:\n";
        for (const auto& row : rows)
            os << "  c1 = " << row.c1.str() << ", c2 = " << row.c2.str()
               << "  ->  c3_max = " << row.c3_max.str() << "  [" << row.route << "]\n";
        os << (all_pass ? "all cases pass\n" : "FAILURES PRESENT\n");

        if (v_format == "json") {
            json j = {{"cases", cases}, {"pass", all_pass}};
            json table = json::array();
            for (const auto& row : rows) table.push_back(to_json(row));
            j["table"] = table;
            write_output(dump_json(j), out_path);
        } else {
            write_output(os.str(), out_path);
        }
        return all_pass ? 0 : 2;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "parse_error"}}.dump() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "domain_error"}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
        return 1;
    }
}
