#include <catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "citeidx/dataset.hpp"
#include "citeidx/report.hpp"

using namespace citeidx;
using Catch::Matchers::ContainsSubstring;

namespace {

const std::vector<EntryReport>& fixture_reports() {
    static const std::vector<EntryReport> r = [] {
        const Corpus c = load_price_scopus_2023();
        return build_reports(c, is_published_fixture(c));
    }();
    return r;
}

std::vector<std::vector<std::string>> parse_csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::size_t column(const std::vector<std::string>& header, std::string_view name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
}

}  // namespace

TEST_CASE("layout and format names") {
    CHECK(parse_layout("ranking") == Layout::ranking);
    CHECK(parse_format("json") == Format::json);
    REQUIRE_THROWS_AS(parse_layout("grid"), UsageError);
    REQUIRE_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("markdown index table of the fixture") {
    const std::string md = render(fixture_reports(), Layout::indices, Format::md, {});
    CHECK_THAT(md, ContainsSubstring("79.333"));
    CHECK_THAT(md, ContainsSubstring("| Glänzel |"));
    // 14 data rows after the header and rule.
    std::istringstream in(md);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.starts_with("| ") && !line.starts_with("| name") && !line.starts_with("| ---")) ++rows;
    }
    CHECK(rows == 14);
}

TEST_CASE("g_d cells above r + 1 render as a dash") {
    const auto rows = parse_csv_rows(render(fixture_reports(), Layout::indices, Format::csv, {}));
    const auto& header = rows.front();
    auto row_of = [&](std::string_view name) {
        for (const auto& r : rows) {
            if (r.front() == name) return r;
        }
        FAIL("missing row");
        return rows.front();
    };
    CHECK(row_of("Schubert")[column(header, "g_6")] == "46");
    CHECK(row_of("Glänzel")[column(header, "g_5")] == "-");
    CHECK(row_of("Glänzel")[column(header, "g_4")] == "63");
    CHECK(row_of("Glänzel")[column(header, "g_bar")] == "79.333");
}

TEST_CASE("published discrepancies are footnoted with both values") {
    const std::string md = render(fixture_reports(), Layout::indices, Format::md, {});
    CHECK_THAT(md, ContainsSubstring("Leydesdorff g_bar: computed 109.500, published 88.750"));
    CHECK_THAT(md, ContainsSubstring("White r: computed 11, published 10"));
    CHECK_THAT(md, ContainsSubstring("109.500 ["));
}

TEST_CASE("user data carries no footnotes") {
    const Corpus c = parse_csv("name,citations\nA,4\nA,4\nA,1\n");
    const auto reports = build_reports(c, is_published_fixture(c));
    CHECK(reports.front().errata.empty());
    CHECK_THAT(render(reports, Layout::indices, Format::md, {}), !ContainsSubstring("["));
}

TEST_CASE("csv and json agree on every value") {
    const RenderOptions opts;
    const auto rows = parse_csv_rows(render(fixture_reports(), Layout::indices, Format::csv, opts));
    const auto json = nlohmann::json::parse(render(fixture_reports(), Layout::indices, Format::json, opts));
    REQUIRE(json.size() == rows.size() - 1);
    const auto& header = rows.front();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& obj = json[i - 1];
        const auto& idx = obj["indices"];
        CHECK(obj["name"] == rows[i][0]);
        for (const char* key : {"n", "N", "h", "g", "r", "N(h)", "N(g)", "c_h", "l", "delta"}) {
            INFO(key);
            CHECK(std::to_string(idx[key].get<long long>()) == rows[i][column(header, key)]);
        }
        for (const char* key : {"g_bar", "H", "A", "R", "D", "B", "C", "E", "F", "K"}) {
            INFO(key);
            CHECK(idx[key].get<std::string>() == rows[i][column(header, key)]);
        }
        for (const auto& [d, v] : idx["g_d"].items()) {
            const std::size_t col = column(header, "g_" + d);
            if (col < header.size()) CHECK(std::to_string(v.get<long long>()) == rows[i][col]);
        }
    }
}

TEST_CASE("json schema") {
    const auto json = nlohmann::json::parse(render(fixture_reports(), Layout::indices, Format::json, {}));
    REQUIRE(json.is_array());
    const auto& glanzel = json[1];
    CHECK(glanzel["name"] == "Glänzel");
    CHECK(glanzel["indices"]["g_bar_exact"] == "238/3");
    CHECK(glanzel["indices"]["A_exact"] == "8049/61");
    CHECK(glanzel["ratios"]["h/g"] == "0.616");
    CHECK(glanzel.contains("errata"));
    const auto& leydesdorff = json[0];
    bool found = false;
    for (const auto& e : leydesdorff["errata"]) {
        if (e["row"] == "g_bar" && e["table"] == 1) {
            found = true;
            CHECK(e["published"] == "88.750");
            CHECK(e["computed"] == "109.500");
        }
    }
    CHECK(found);
}

TEST_CASE("precision option") {
    RenderOptions opts;
    opts.precision = 1;
    CHECK_THAT(render(fixture_reports(), Layout::indices, Format::csv, opts), ContainsSubstring(",79.3,"));
    opts.precision = 5;
    CHECK_THAT(render(fixture_reports(), Layout::indices, Format::csv, opts), ContainsSubstring(",79.33333,"));
}

TEST_CASE("rendering is byte stable") {
    for (auto layout : {Layout::indices, Layout::ratios, Layout::bounds, Layout::ranking}) {
        for (auto format : {Format::md, Format::csv, Format::json}) {
            CHECK(render(fixture_reports(), layout, format, {}) == render(fixture_reports(), layout, format, {}));
        }
    }
}

TEST_CASE("ranking layout") {
    RenderOptions opts;
    opts.rank_keys = {"h", "H"};
    const auto rows = parse_csv_rows(render(fixture_reports(), Layout::ranking, Format::csv, opts));
    const auto& header = rows.front();
    for (const auto& r : rows) {
        if (r.front() == "Martin" || r.front() == "Narin") CHECK(r[column(header, "rank(h)")] == "7/8");
        if (r.front() == "Garfield") CHECK(r[column(header, "rank(H)")] == "2");
    }
    opts.rank_keys = {"nonsense"};
    REQUIRE_THROWS_AS(render(fixture_reports(), Layout::ranking, Format::csv, opts), UsageError);
}

TEST_CASE("ratio bundles can be selected") {
    RenderOptions opts;
    opts.ratio_table = 7;
    const auto rows = parse_csv_rows(render(fixture_reports(), Layout::ratios, Format::csv, opts));
    CHECK(rows.front() == std::vector<std::string>{"name", "B/h", "C/B", "E/C", "F/E", "K/F"});
    opts.ratio_table = 3;
    const auto t3 = parse_csv_rows(render(fixture_reports(), Layout::ratios, Format::csv, opts));
    CHECK(t3.front().size() == 9);
}

TEST_CASE("bounds layout") {
    const std::string md = render(fixture_reports(), Layout::bounds, Format::md, {});
    CHECK_THAT(md, ContainsSubstring("51 < h <= 62"));
    CHECK_THAT(md, ContainsSubstring("19.039"));
}

TEST_CASE("empty report set is a usage error") {
    REQUIRE_THROWS_AS(render({}, Layout::indices, Format::md, {}), UsageError);
}

TEST_CASE("legacy and breakpoint tables") {
    const std::string legacy = render_legacy(load_price_wos_2006(), Format::csv, 3);
    CHECK_THAT(legacy, ContainsSubstring("Leydesdorff,13,"));
    CHECK_THAT(legacy, ContainsSubstring("18.385"));
    const std::string bp = render_breakpoints(g_breakpoints(normalize({4, 4, 1})), Format::csv, 3);
    CHECK_THAT(bp, ContainsSubstring("8/3"));
    CHECK_THAT(bp, ContainsSubstring("3/2"));
}
