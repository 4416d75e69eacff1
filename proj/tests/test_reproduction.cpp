#include <catch_amalgamated.hpp>

#include <map>
#include <set>
#include <tuple>

#include "citeidx/reproduction.hpp"

using namespace citeidx;

namespace {

const std::vector<CellComparison>& all_cells() {
    static const std::vector<CellComparison> cells = compare_published_tables();
    return cells;
}

}  // namespace

TEST_CASE("printed cell parsing") {
    CHECK(parse_printed("88.750") == 88.75);
    CHECK(parse_printed("12.") == 12.0);
    CHECK_FALSE(parse_printed("-").has_value());
}

TEST_CASE("every published cell is accounted for") {
    std::map<Verdict, int> tally;
    for (const auto& c : all_cells()) {
        ++tally[c.verdict];
        INFO("table " << c.table << ' ' << c.row << ' ' << c.name << ": printed " << c.printed_text);
        CHECK(c.verdict != Verdict::unexplained);
    }
    CHECK(all_cells().size() == 1085);
    CHECK(tally[Verdict::match] == 918);
    CHECK(tally[Verdict::propagated] == 60);
    CHECK(tally[Verdict::erratum] == 40);
    CHECK(tally[Verdict::unlisted] == 55);
    CHECK(tally[Verdict::skipped] == 12);
    CHECK(tally[Verdict::unexplained] == 0);
}

TEST_CASE("every registered erratum is used exactly once") {
    std::set<std::tuple<int, std::string, std::string>> used;
    for (const auto& c : all_cells()) {
        if (c.verdict == Verdict::erratum) used.emplace(c.table, c.row, c.name);
    }
    for (const auto& e : root_errata) {
        INFO("table " << e.table << ' ' << e.row << ' ' << e.name);
        CHECK(used.count({e.table, std::string(e.row), std::string(e.name)}) == 1);
    }
    CHECK(used.size() == std::size(root_errata));
}

TEST_CASE("primary cells never count as propagated") {
    for (const auto& c : all_cells()) {
        if (is_primary_cell(c.table, c.row)) CHECK(c.verdict != Verdict::propagated);
    }
}

TEST_CASE("reproduction corpus uses positive-only counting where the tables did") {
    const Corpus c = reproduction_corpus();
    CHECK(c.at("White").profile.n() == 28);
    CHECK(c.at("Narin").profile.n() == 68);
    CHECK(c.entries.size() == 14);
}

TEST_CASE("leydesdorff g_bar follows the definition") {
    const Corpus c = reproduction_corpus();
    const IndexReport x = compute_indices(c.at("Leydesdorff").profile);
    CHECK(x.g_bar == Rational(145 + 114 + 96 + 83, 4));
    for (const auto& cell : all_cells()) {
        if (cell.table == 1 && cell.row == "g_bar" && cell.name == "Leydesdorff") {
            CHECK(cell.verdict == Verdict::erratum);
            CHECK(cell.printed == 88.75);
        }
    }
}
