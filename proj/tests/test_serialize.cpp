#include <x5/serialize.hpp>
#include <x5/svg.hpp>
#include <x5/x5.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cctype>
#include <string>
#include <vector>

using namespace x5;

namespace {

// Minimal XML well-formedness check: single root, matched tags, quoted
// attributes. Enough to catch structural emitter bugs.
bool xml_well_formed(const std::string& text) {
    size_t i = 0;
    if (text.rfind("<?xml", 0) == 0) {
        i = text.find("?>");
        if (i == std::string::npos) return false;
        i += 2;
    }
    std::vector<std::string> stack;
    int roots = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        const size_t close = text.find('>', i);
        if (close == std::string::npos) return false;
        std::string tag = text.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) return false;
        if (tag[0] == '!' || tag[0] == '?') continue;
        const bool closing = tag[0] == '/';
        const bool self_closing = tag.back() == '/';
        if (closing) {
            const std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
            continue;
        }
        // Quotes must balance inside the tag.
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        std::string name;
        for (char ch : tag) {
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '/') break;
            name += ch;
        }
        if (name.empty()) return false;
        if (stack.empty()) {
            ++roots;
            if (roots > 1) return false;
        }
        if (!self_closing) stack.push_back(name);
    }
    return stack.empty() && roots == 1;
}

} // namespace

TEST_CASE("chern vector json round trip") {
    const ChernVector v{2, -1, rat(-1, 10), rat(7, 30)};
    const json j = to_json(v);
    CHECK(chern_vector_from_json(j) == v);
    CHECK(j.at("d").get<std::string>() == "-1/10");

    // Byte-identical reserialization.
    const std::string s = dump_json(j);
    CHECK(dump_json(json::parse(s)) == s);
}

TEST_CASE("wall json round trip") {
    for (const Wall& w : {Wall::vertical(rat(-1, 2)),
                          Wall::semicircle(rat(-11, 10), rat(1, 100)), Wall::degenerate()}) {
        const json j = to_json(w);
        CHECK(wall_from_json(j) == w);
        const std::string s = dump_json(j);
        CHECK(dump_json(json::parse(s)) == s);
    }
}

TEST_CASE("search report json") {
    SearchConfig cfg;
    cfg.exclusions = {ChernVec2{3, -1, rat(1, 10)}};
    const SearchReport rep = enumerate_destabilizers(ChernVec2{2, 0, rat(-2, 5)}, cfg);
    const std::string s = dump_json(to_json(rep));
    CHECK(dump_json(json::parse(s)) == s);
    // Rejection reasons serialize as names.
    CHECK(s.find("delta-additivity") != std::string::npos);
    CHECK(s.find("excluded-class") != std::string::npos);
}

TEST_CASE("opt result and bound result json") {
    const std::string s1 = dump_json(to_json(optimize_divisor(-2)));
    CHECK(dump_json(json::parse(s1)) == s1);
    CHECK(json::parse(s1).at("max_ch3").get<std::string>() == "11/30");

    const std::string s2 = dump_json(to_json(chi_bound_e(ChernVec2{2, -1, rat(1, 10)}, 0)));
    CHECK(dump_json(json::parse(s2)) == s2);
    CHECK(json::parse(s2).at("e_max").get<std::string>() == "1/30");

    const std::string s3 = dump_json(to_json(our_bound_check(-2)));
    CHECK(dump_json(json::parse(s3)) == s3);

    json table = json::array();
    for (const auto& row : theorem_main_table()) table.push_back(to_json(row));
    const std::string s4 = dump_json(table);
    CHECK(dump_json(json::parse(s4)) == s4);
}

TEST_CASE("quadnum json carries the exact representation") {
    const auto [bm, bp] = beta_pm(ChernVec2{2, -1, rat(1, 10)});
    const json j = to_json(bm);
    const QuadNum back = quadnum_from_json(j);
    CHECK(quad_eq(back, bm));
}

TEST_CASE("plot_walls emits well-formed deterministic svg") {
    const ChernVector v{2, -1, rat(-1, 10), rat(1, 3)};
    const Viewport vp{-3, 0, 0, rat(3, 2)};
    const std::vector<ChernVec2> partners = {truncate(ch_line_bundle(-1)),
                                             ChernVec2{-1, 3, rat(-9, 2)}};
    const std::string svg = plot_walls(v, partners, vp, true, 48, 480);
    CHECK(xml_well_formed(svg));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg == plot_walls(v, partners, vp, true, 48, 480));  // deterministic

    CHECK_THROWS_AS(plot_walls(v, partners, Viewport{-3, 0, -1, 1}, true), std::domain_error);
}

TEST_CASE("plot_figure1 emits well-formed svg, even for empty viewports") {
    const Viewport vp{-2, 0, 0, rat(6, 5)};
    const std::string svg = plot_figure1(rat(1, 6), vp, 48, 480);
    CHECK(xml_well_formed(svg));
    // All six pairwise curves drawn with distinct colors.
    CHECK(svg.find("#9400d3") != std::string::npos);

    const std::string empty_svg = plot_figure1(rat(1, 6), Viewport{0, 0, 0, 0}, 48, 480);
    CHECK(xml_well_formed(empty_svg));
}

TEST_CASE("figure1 curves pass through known rational points") {
    // The marching-squares input signs are exact; verify the underlying
    // polynomial vanishes where the purple curve should be.
    const Poly2 purple = dependence_curve(ch_line_bundle(-1), ch_Q_m1(), rat(1, 6));
    CHECK(purple.eval(rat(-7, 10), rat(1, 10)) == 0);
    CHECK(purple.eval(rat(-1, 2), rat(1, 2)) == 0);
}
