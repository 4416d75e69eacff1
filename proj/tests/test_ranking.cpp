#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "citeidx/dataset.hpp"
#include "citeidx/format.hpp"
#include "citeidx/ranking.hpp"

using namespace citeidx;

TEST_CASE("rank labels") {
    CHECK(rank_label(3, 3) == "3");
    CHECK(rank_label(7, 8) == "7/8");
    CHECK(rank_label(4, 6) == "4-6");
}

TEST_CASE("exact keys order by cross multiplication") {
    CHECK(ExactKey{1, 3} < ExactKey{1, 2});
    CHECK(ExactKey{2, 4} == ExactKey{1, 2});
    CHECK_FALSE(ExactKey{5, 1} < ExactKey{10, 2});
}

TEST_CASE("published ranking ties on h") {
    const Ranking by_h = rank(load_price_scopus_2023(), "h");
    CHECK(by_h.at("Leydesdorff").label() == "1");
    CHECK(by_h.at("Martin").label() == "7/8");
    CHECK(by_h.at("Narin").label() == "7/8");
    CHECK(by_h.at("Garfield").label() == "9/10");
    CHECK(by_h.at("Braun").label() == "9/10");
    // Alphabetical inside a tie.
    const auto pos = [&](std::string_view n) {
        return std::find_if(by_h.entries.begin(), by_h.entries.end(), [&](const auto& e) { return e.name == n; }) -
               by_h.entries.begin();
    };
    CHECK(pos("Martin") < pos("Narin"));
    CHECK(pos("Braun") < pos("Garfield"));
}

TEST_CASE("published ranking on capital H") {
    const Ranking by_H = rank(load_price_scopus_2023(), "H");
    CHECK(by_H.at("Leydesdorff").label() == "1");
    CHECK(by_H.at("Garfield").label() == "2");
    CHECK(by_H.at("Small").label() == "3");
}

TEST_CASE("exact keys separate values that agree in floating point display") {
    // Martin and Narin share h = 38 and r = 8, hence the same H exactly.
    const Ranking by_H = rank(load_price_scopus_2023(), "H");
    CHECK(by_H.at("Martin").label() == by_H.at("Narin").label());
}

TEST_CASE("ranking invariants") {
    const Corpus c = load_price_scopus_2023();
    for (auto key : ranking_keys) {
        const Ranking r = rank(c, key);
        INFO(key);
        REQUIRE(r.entries.size() == c.entries.size());
        std::size_t expected_first = 1;
        for (std::size_t i = 0; i < r.entries.size(); ++i) {
            const auto& e = r.entries[i];
            if (i > 0) CHECK(e.value <= r.entries[i - 1].value);
            if (i == 0 || e.first != r.entries[i - 1].first) {
                CHECK(e.first == expected_first);
                expected_first = e.last + 1;
            }
            CHECK(e.first <= i + 1);
            CHECK(i + 1 <= e.last);
        }
        CHECK(expected_first == c.entries.size() + 1);
    }
}

TEST_CASE("ranking is invariant under input permutation") {
    Corpus c = load_price_scopus_2023();
    std::mt19937 rng(11);
    for (auto key : {"h", "g_bar", "R", "A", "B", "K"}) {
        const Ranking base = rank(c, key);
        for (int round = 0; round < 5; ++round) {
            std::shuffle(c.entries.begin(), c.entries.end(), rng);
            const Ranking again = rank(c, key);
            REQUIRE(again.entries.size() == base.entries.size());
            for (std::size_t i = 0; i < base.entries.size(); ++i) {
                CHECK(again.entries[i].name == base.entries[i].name);
                CHECK(again.entries[i].label() == base.entries[i].label());
            }
        }
    }
}

TEST_CASE("single entry ranks first") {
    Corpus c;
    c.entries.push_back({"Solo", normalize({3, 3, 3}), false});
    CHECK(rank(c, "g").at("Solo").label() == "1");
}

TEST_CASE("unknown key is a usage error listing keys") {
    REQUIRE_THROWS_AS(rank(load_price_scopus_2023(), "zeta"), UsageError);
    REQUIRE_THROWS_WITH(rank(load_price_scopus_2023(), "zeta"), Catch::Matchers::ContainsSubstring("g_bar"));
}

TEST_CASE("fixed-point formatting rounds half away from zero") {
    CHECK(format_fixed(Rational(238, 3), 3) == "79.333");
    CHECK(format_fixed(Rational(1, 8), 2) == "0.13");
    CHECK(format_fixed(Rational(-1, 8), 2) == "-0.13");
    CHECK(format_fixed(Rational(5, 2), 0) == "3");
    CHECK(format_fixed(Rational(-5, 2), 0) == "-3");
    CHECK(format_fixed(Rational(-1, 1000), 2) == "0.00");
    CHECK(format_fixed(Count{42}, 1) == "42.0");
    CHECK(format_fixed(2.0 * std::sqrt(2.0), 3) == "2.828");
    CHECK(format_fixed(105.6551, 3) == "105.655");
    CHECK(format_fixed(0.5, 0) == "1");
    CHECK(format_fixed(-0.5, 0) == "-1");
    REQUIRE_THROWS_AS(format_fixed(1.0, 13), UsageError);
    REQUIRE_THROWS_AS(format_fixed(1.0, -1), UsageError);
}
