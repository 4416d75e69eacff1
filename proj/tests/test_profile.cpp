#include <catch_amalgamated.hpp>

#include <vector>

#include "citeidx/dataset.hpp"
#include "citeidx/profile.hpp"

using namespace citeidx;

namespace {

std::vector<Count> as_vector(std::span<const Count> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("normalize sorts counts non-increasing") {
    const auto p = normalize({3, 10, 1, 0, 5});
    CHECK(as_vector(p.counts()) == std::vector<Count>{10, 5, 3, 1, 0});
    CHECK(as_vector(p.prefix_sums()) == std::vector<Count>{0, 10, 15, 18, 19, 19});
    CHECK(p.n() == 5);
    CHECK(p.top() == 10);
    CHECK(p.total() == 19);
}

TEST_CASE("empty profile has a single zero prefix") {
    const auto p = normalize({});
    CHECK(p.n() == 0);
    CHECK(p.empty());
    CHECK(as_vector(p.prefix_sums()) == std::vector<Count>{0});
    CHECK(p.top() == 0);
}

TEST_CASE("negative counts are rejected with their position") {
    REQUIRE_THROWS_AS(normalize({4, -1, 2}), InputError);
    REQUIRE_THROWS_WITH(normalize({4, 2, -7}), Catch::Matchers::ContainsSubstring("position 3"));
}

TEST_CASE("from_sorted rejects unsorted input") {
    REQUIRE_THROWS_AS(CitationProfile::from_sorted({1, 2}), InputError);
    CHECK(CitationProfile::from_sorted({2, 2, 0}).n() == 3);
}

TEST_CASE("positive-only mode drops zero-cited records") {
    const auto p = normalize({0, 3, 0, 1}, CountingMode::positive_only);
    CHECK(as_vector(p.counts()) == std::vector<Count>{3, 1});
}

TEST_CASE("normalize is idempotent") {
    const auto once = normalize({7, 0, 7, 2, 9, 1});
    const auto twice = normalize(once.counts());
    CHECK(once == twice);
}

TEST_CASE("published column head and core sums") {
    const Corpus c = load_price_scopus_2023();
    const auto& glanzel = c.at("Glänzel").profile;
    CHECK(as_vector(glanzel.counts().first(5)) == std::vector<Count>{534, 449, 417, 364, 273});
    CHECK(prefix_citations(glanzel, 61) == 8049);
    CHECK(prefix_citations(glanzel, 0) == 0);
    CHECK(prefix_citations(c.at("Leydesdorff").profile, 145) == 21225);
    CHECK(core_average(glanzel, 61) == Rational(8049, 61));
    CHECK(core_average(c.at("Moed").profile, 49) == Rational(6351, 49));
}

TEST_CASE("rank and prefix access is range checked") {
    const auto p = normalize({4, 4, 1});
    CHECK(p.citations(1) == 4);
    CHECK(p.citations(3) == 1);
    REQUIRE_THROWS_AS(p.citations(0), RangeError);
    REQUIRE_THROWS_AS(p.citations(4), RangeError);
    REQUIRE_THROWS_AS(p.prefix(4), RangeError);
    REQUIRE_THROWS_AS(core_average(p, 0), RangeError);
    REQUIRE_THROWS_AS(core_average(p, 4), RangeError);
}

TEST_CASE("core average of a constant profile is the constant") {
    const auto p = normalize({6, 6, 6, 6, 6, 6});
    for (Count k = 1; k <= 6; ++k) CHECK(core_average(p, k) == Rational(6));
}

TEST_CASE("core slices expose the top papers") {
    const auto p = normalize({5, 9, 1});
    const CoreSlice s = core_slice(p, CoreKind::h_core, 2);
    CHECK(s.size == 2);
    CHECK(s.total == 14);
    CHECK(as_vector(s.citations) == std::vector<Count>{9, 5});
    REQUIRE_THROWS_AS(core_slice(p, CoreKind::g_core, 4), RangeError);
}
