#include <catch_amalgamated.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "citeidx/dataset.hpp"
#include "citeidx/indices.hpp"
#include "citeidx/fixtures/published_tables.hpp"

using namespace citeidx;
using Catch::Matchers::ContainsSubstring;

namespace {

std::vector<Count> counts_of(const Corpus& c, std::string_view name) {
    const auto s = c.at(name).profile.counts();
    return {s.begin(), s.end()};
}

template <class F>
std::size_t parse_error_line(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("csv groups rows by name in first-seen order") {
    const Corpus c = parse_csv("name,citations\nA,4\nB,2\nA,4\nA,1\n");
    REQUIRE(c.entries.size() == 2);
    CHECK(c.entries[0].name == "A");
    CHECK(c.entries[1].name == "B");
    CHECK(counts_of(c, "A") == std::vector<Count>{4, 4, 1});
    CHECK(c.provenance == "csv");
}

TEST_CASE("csv row order within a name does not matter") {
    CHECK(parse_csv("name,citations\nA,1\nA,4\nA,4").entries == parse_csv("name,citations\nA,4\nA,4\nA,1").entries);
}

TEST_CASE("csv accepts CRLF and a byte-order mark") {
    const Corpus c = parse_csv("\xEF\xBB\xBFname,citations\r\nA,3\r\nA,7\r\n");
    CHECK(counts_of(c, "A") == std::vector<Count>{7, 3});
}

TEST_CASE("csv errors carry line numbers") {
    CHECK(parse_error_line([] { (void)parse_csv("name,citations\nA,-1"); }) == 2);
    CHECK(parse_error_line([] { (void)parse_csv("name,citations\nA,1\nA,x"); }) == 3);
    CHECK(parse_error_line([] { (void)parse_csv("name,citations\nA,1.5"); }) == 2);
    CHECK(parse_error_line([] { (void)parse_csv("name,citations\nA,1,2"); }) == 2);
    CHECK(parse_error_line([] { (void)parse_csv("name,citations\n,4"); }) == 2);
    CHECK(parse_error_line([] { (void)parse_csv("author,count\nA,1"); }) == 1);
    CHECK(parse_error_line([] { (void)parse_csv(""); }) == 1);
    REQUIRE_THROWS_WITH(parse_csv("name,citations\nA,-1"), ContainsSubstring("negative"));
}

TEST_CASE("csv positive-only mode") {
    const Corpus c = parse_csv("name,citations\nA,0\nA,2\n", CountingMode::positive_only);
    CHECK(c.mode == CountingMode::positive_only);
    CHECK(counts_of(c, "A") == std::vector<Count>{2});
}

TEST_CASE("json maps names to count arrays") {
    const Corpus c = parse_json(R"({"A": [1, 5, 3], "B": []})");
    CHECK(counts_of(c, "A") == std::vector<Count>{5, 3, 1});
    CHECK(c.at("B").profile.empty());
    CHECK(parse_json("{}").entries.empty());
}

TEST_CASE("json errors name the key") {
    REQUIRE_THROWS_AS(parse_json(R"({"A": [1.5]})"), ParseError);
    REQUIRE_THROWS_WITH(parse_json(R"({"A": [1.5]})"), ContainsSubstring("'A'"));
    REQUIRE_THROWS_WITH(parse_json(R"({"Q": [3, -2]})"), ContainsSubstring("'Q'"));
    REQUIRE_THROWS_WITH(parse_json(R"({"Z": 4})"), ContainsSubstring("'Z'"));
    REQUIRE_THROWS_AS(parse_json("[1, 2]"), ParseError);
    REQUIRE_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("csv and json yield the same corpus from equivalent data") {
    Corpus a = parse_csv("name,citations\nA,4\nA,4\nA,1\nB,9\n");
    Corpus b = parse_json(R"({"A": [4, 1, 4], "B": [9]})");
    CHECK(a.entries == b.entries);
}

TEST_CASE("files are read by extension") {
    const std::string dir = CITEIDX_TEST_TMP_DIR;
    {
        std::ofstream(dir + "/dataset_sample.csv") << "name,citations\nA,2\nA,3\n";
        std::ofstream(dir + "/dataset_sample.json") << R"({"A": [2, 3]})";
    }
    CHECK(read_corpus_file(dir + "/dataset_sample.csv").entries ==
          read_corpus_file(dir + "/dataset_sample.json").entries);
    REQUIRE_THROWS_AS(read_corpus_file(dir + "/missing.csv"), ParseError);
    REQUIRE_THROWS_AS(read_corpus_file(dir + "/dataset_sample.txt"), Error);
}

TEST_CASE("bundled samples parse") {
    const std::string dir = CITEIDX_SAMPLES_DIR;
    CHECK(read_corpus_file(dir + "/authors.csv").entries == read_corpus_file(dir + "/authors.json").entries);
}

TEST_CASE("scopus fixture layout") {
    const Corpus c = load_price_scopus_2023();
    REQUIRE(c.entries.size() == 14);
    const std::vector<std::string> order{"Leydesdorff", "Glänzel",  "Moed",  "Van Raan", "Rousseau",
                                         "Schubert",    "Martin",   "Narin", "Garfield", "Braun",
                                         "Small",       "Egghe",    "Ingwersen", "White"};
    for (std::size_t i = 0; i < order.size(); ++i) CHECK(c.entries[i].name == order[i]);
    CHECK(c.at("Glänzel").profile.citations(1) == 534);
    CHECK(c.at("Leydesdorff").profile.citations(1) == 3964);
    CHECK(c.at("White").profile.n() == 30);
    CHECK(c.at("Leydesdorff").truncated);
    CHECK_FALSE(c.at("Narin").truncated);
    REQUIRE_THROWS_AS(c.at("Nobody"), LookupError);
}

TEST_CASE("scopus fixture transcription correction") {
    const auto raw = scopus_2023_columns(false);
    const auto fixed = scopus_2023_columns(true);
    for (std::size_t j = 0; j < raw.size(); ++j) {
        if (raw[j].first != "Schubert") {
            CHECK(raw[j] == fixed[j]);
            continue;
        }
        CHECK(raw[j].second[41] == 42);
        CHECK(fixed[j].second[41] == 41);
        CHECK_FALSE(std::is_sorted(raw[j].second.begin(), raw[j].second.end(), std::greater<>()));
        CHECK(std::is_sorted(fixed[j].second.begin(), fixed[j].second.end(), std::greater<>()));
    }
}

TEST_CASE("fixture core sums match the published rows") {
    const Corpus c = load_price_scopus_2023();
    const Corpus positive = load_price_scopus_2023(CountingMode::positive_only);
    for (const auto& cell : fixtures::printed_cells) {
        if (cell.table != 1 || (cell.row != "N(h)" && cell.row != "N(g)")) continue;
        const Corpus& src = cell.name == "White" ? positive : c;
        const auto& p = src.at(cell.name).profile;
        const Count k = cell.row == "N(h)" ? h_index(p) : g_index(p);
        INFO(cell.name << ' ' << cell.row);
        if (cell.name == "Garfield" && cell.row == "N(g)") {
            CHECK(p.prefix(k) == 11406);  // printed 11359
        } else {
            CHECK(std::to_string(p.prefix(k)) == std::string(cell.text));
        }
    }
}

TEST_CASE("untruncated fixture totals match the author summary") {
    const Corpus c = load_price_scopus_2023();
    std::size_t checked = 0;
    for (const auto& e : c.entries) {
        if (e.truncated) continue;
        INFO(e.name);
        CHECK(e.profile.total() == author_summary(e.name).citations);
        ++checked;
    }
    CHECK(checked == 2);
    CHECK(c.at("Narin").profile.total() == 7209);
    CHECK(c.at("White").profile.total() == 2399);
    // Listed rows are short of the paper count, yet the column holds every citation.
    CHECK(c.at("Schubert").truncated);
    CHECK(c.at("Schubert").profile.total() == author_summary("Schubert").citations);
    // 57 rows against 62 papers and 7693 citations on record.
    CHECK(c.at("Small").truncated);
    CHECK(c.at("Small").profile.total() == 7690);
}

TEST_CASE("wos fixture") {
    const auto records = load_price_wos_2006();
    REQUIRE(records.size() == 14);
    const auto it = std::find_if(records.begin(), records.end(), [](const auto& r) { return r.name == "Garfield"; });
    REQUIRE(it != records.end());
    CHECK(it->h == 27);
    CHECK(it->g == 59);
    CHECK(it->R == 55.21);
    for (const auto& r : records) {
        CHECK(r.h <= r.g);
        CHECK(static_cast<double>(r.h) <= r.R);
    }
}

TEST_CASE("fixture lookup by id") {
    CHECK(std::holds_alternative<Corpus>(load_fixture("price-scopus-2023")));
    CHECK(std::holds_alternative<std::vector<LegacyRecord>>(load_fixture("price-wos-2006")));
    REQUIRE_THROWS_AS(load_fixture("nope"), LookupError);
    REQUIRE_THROWS_WITH(load_fixture("nope"), ContainsSubstring("price-scopus-2023") &&
                                                  ContainsSubstring("price-wos-2006"));
}
