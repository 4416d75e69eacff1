#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "citeidx/bounds.hpp"
#include "citeidx/random_profiles.hpp"
#include "citeidx/ranking.hpp"
#include "oracle.hpp"

using namespace citeidx;

namespace {

constexpr int profile_count = 10000;

std::vector<oracle::Int> raw(const CitationProfile& p) { return {p.counts().begin(), p.counts().end()}; }

}  // namespace

TEST_CASE("random profiles satisfy every proved relation and match the oracle") {
    ProfileGenerator gen(20240229);
    int violations = 0;
    int mismatches = 0;
    for (int i = 0; i < profile_count; ++i) {
        const CitationProfile p = gen.next();
        const ViolationReport v = validate(p, "random");
        if (!v.ok()) {
            ++violations;
            UNSCOPED_INFO("shape " << gen.last_shape() << ": " << v.violations.front().check);
        }
        const IndexReport x = compute_indices(p);
        const auto o = oracle::compute(raw(p));
        const bool same = x.h == o.h && x.g == o.g &&
                          std::equal(x.g_d.values().begin(), x.g_d.values().end(), o.g_d.begin(), o.g_d.end()) &&
                          x.r == o.r && x.g_bar.numerator() == o.g_bar.numerator() &&
                          x.g_bar.denominator() == o.g_bar.denominator() && x.H == o.H;
        if (!same) ++mismatches;
    }
    CHECK(violations == 0);
    CHECK(mismatches == 0);
}

TEST_CASE("threshold function agrees with a linear scan") {
    ProfileGenerator gen(77, 60, 400);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const CitationProfile p = gen.next();
        if (p.top() < 1) continue;
        for (int j = 0; j < 8; ++j) {
            const Count den = 1 + static_cast<Count>(rng() % 50);
            const Count num = 1 + static_cast<Count>(rng() % static_cast<std::uint64_t>(p.top() * den));
            CHECK(g_function(p, Rational(num, den)) == oracle::G(raw(p), oracle::Q(num, den)));
        }
    }
}

TEST_CASE("normalize is idempotent and core averages do not increase") {
    ProfileGenerator gen(31);
    for (int i = 0; i < 2000; ++i) {
        const CitationProfile p = gen.next();
        CHECK(normalize(p.counts()) == p);
        for (Count k = 2; k <= p.n(); ++k) CHECK(core_average(p, k) <= core_average(p, k - 1));
    }
}

TEST_CASE("scaling all counts never lowers an index") {
    ProfileGenerator gen(8, 120, 2000);
    for (int i = 0; i < 1000; ++i) {
        const CitationProfile p = gen.next();
        const Count m = 2 + i % 4;
        std::vector<Count> scaled(p.counts().begin(), p.counts().end());
        for (auto& c : scaled) c *= m;
        const CitationProfile q = normalize(scaled);
        CHECK(h_index(q) >= h_index(p));
        CHECK(g_index(q) >= g_index(p));
        for (Count d = 2; d <= p.top(); d += 1 + p.top() / 16) CHECK(*g_d_index(q, d) >= *g_d_index(p, d));
    }
}

TEST_CASE("constant square profiles") {
    for (Count c = 2; c <= 50; ++c) {
        const IndexReport x = compute_indices(normalize(std::vector<Count>(static_cast<std::size_t>(c), c)));
        CHECK(x.h == c);
        CHECK(x.g == c);
        CHECK(x.g_bar == Rational(c));
        CHECK(x.H == static_cast<double>(c));
        CHECK(x.r == 1);
    }
}

TEST_CASE("ranking ignores input order on random corpora") {
    ProfileGenerator gen(99, 40, 300);
    std::mt19937 rng(3);
    for (int round = 0; round < 50; ++round) {
        Corpus c;
        for (int i = 0; i < 12; ++i) c.entries.push_back({"a" + std::to_string(i), gen.next(), false});
        for (auto key : {"h", "g", "g_bar", "H", "D", "K"}) {
            const Ranking base = rank(c, key);
            Corpus shuffled = c;
            std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
            const Ranking again = rank(shuffled, key);
            for (std::size_t i = 0; i < base.entries.size(); ++i) {
                CHECK(base.entries[i].name == again.entries[i].name);
                CHECK(base.entries[i].label() == again.entries[i].label());
            }
        }
    }
}

TEST_CASE("generator is deterministic per seed") {
    ProfileGenerator a(123);
    ProfileGenerator b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}
