#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "citeidx/dataset.hpp"
#include "citeidx/indices.hpp"
#include "oracle.hpp"

using namespace citeidx;
using Catch::Matchers::WithinAbs;

namespace {

const Corpus& scopus() {
    static const Corpus c = load_price_scopus_2023();
    return c;
}

const CitationProfile& author(std::string_view name) { return scopus().at(name).profile; }

CitationProfile constant(Count c, Count n) { return normalize(std::vector<Count>(static_cast<std::size_t>(n), c)); }

}  // namespace

TEST_CASE("h index") {
    CHECK(h_index(author("Glänzel")) == 61);
    CHECK(h_index(normalize({4, 4, 1})) == 2);
    CHECK(h_index(normalize({0, 0, 0})) == 0);
    CHECK(h_index(normalize({})) == 0);
    CHECK(h_index(normalize({100})) == 1);
}

TEST_CASE("g index is capped at the number of papers") {
    CHECK(g_index(author("Glänzel")) == 99);
    CHECK(g_index(normalize({5, 5, 2})) == 3);
    CHECK(g_index(normalize({100})) == 1);
    CHECK(g_index(normalize({0, 0})) == 0);
}

TEST_CASE("g index depends on whether zero-cited records count") {
    const Corpus positive = load_price_scopus_2023(CountingMode::positive_only);
    CHECK(g_index(positive.at("White").profile) == 28);
    // 30 records, 2399 citations >= 30^2.
    CHECK(author("White").n() == 30);
    CHECK(g_index(author("White")) == 30);
}

TEST_CASE("threshold function G(x)") {
    const auto p = normalize({4, 4, 1});
    CHECK(g_function(p, Rational(4)) == 1);
    CHECK(g_function(p, Rational(3)) == 1);
    CHECK(g_function(p, Rational(8, 3)) == 2);
    CHECK(g_function(p, Rational(2)) == 2);
    CHECK(g_function(p, Rational(3, 2)) == 3);
    CHECK(g_function(p, Rational(1, 100)) == 3);
    REQUIRE_THROWS_AS(g_function(p, Rational(0)), DomainError);
    REQUIRE_THROWS_AS(g_function(p, Rational(-1)), DomainError);
    REQUIRE_THROWS_AS(g_function(p, Rational(41, 10)), DomainError);
    REQUIRE_THROWS_AS(g_function(normalize({0, 0}), Rational(1, 2)), DomainError);
}

TEST_CASE("G at integer points equals g_d") {
    const auto& p = author("Martin");
    for (Count d = 2; d <= p.top(); d += 7) CHECK(g_function(p, Rational(d)) == *g_d_index(p, d));
    CHECK(g_function(p, Rational(p.top())) == 1);
    const Rational full(2 * p.total(), p.n() * (p.n() + 1));
    CHECK(g_function(p, full) == p.n());
}

TEST_CASE("breakpoints of G") {
    const auto pieces = g_breakpoints(normalize({4, 4, 1}));
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0].k == 1);
    CHECK(pieces[0].upper == Rational(4));
    CHECK(pieces[0].lower == Rational(8, 3));
    CHECK(pieces[1].k == 2);
    CHECK(pieces[1].lower == Rational(3, 2));
    CHECK(pieces[2].k == 3);
    CHECK(pieces[2].lower == Rational(0));

    const auto flat = g_breakpoints(normalize({7, 7}));
    REQUIRE(flat.size() == 2);
    CHECK(flat[0].upper == Rational(7));
    CHECK(flat[0].lower == Rational(14, 3));

    REQUIRE_THROWS_AS(g_breakpoints(normalize({0})), DomainError);
}

TEST_CASE("breakpoints agree with a dense scan") {
    const auto& c = author("Braun").counts();
    const std::vector<oracle::Int> raw(c.begin(), c.end());
    for (const auto& piece : g_breakpoints(author("Braun"))) {
        const Rational mid = (piece.lower + piece.upper) / 2;
        CHECK(oracle::G(raw, oracle::Q(mid.numerator(), mid.denominator())) == piece.k);
        CHECK(oracle::G(raw, oracle::Q(piece.upper.numerator(), piece.upper.denominator())) == piece.k);
    }
}

TEST_CASE("g_d index") {
    const auto& glanzel = author("Glänzel");
    CHECK(*g_d_index(glanzel, 3) == 76);
    CHECK(*g_d_index(glanzel, 4) == 63);
    // Exists (534 >= 5); the published table leaves it blank because 5 > r + 1.
    CHECK(*g_d_index(glanzel, 5) == 54);
    CHECK(*g_d_index(glanzel, 534) == 1);
    CHECK_FALSE(g_d_index(glanzel, 535).has_value());
    CHECK_FALSE(g_d_index(normalize({1, 1, 1}), 2).has_value());
    REQUIRE_THROWS_AS(g_d_index(glanzel, 1), DomainError);
}

TEST_CASE("g_d sequence") {
    const auto martin = g_d_sequence(author("Martin"));
    const std::vector<Count> expected{70, 60, 54, 48, 44, 41, 39};
    for (Count d = 3; d <= 9; ++d) CHECK(martin.at(d) == expected[static_cast<std::size_t>(d - 3)]);
    CHECK(martin.at(martin.last_d()) == 1);

    const auto small = g_d_sequence(normalize({5, 5, 2}));
    CHECK(std::vector<Count>(small.values().begin(), small.values().end()) == std::vector<Count>{3, 2, 1, 1});
    CHECK(g_d_sequence(normalize({1, 1, 1})).empty());
    CHECK_FALSE(small.find(6).has_value());
    REQUIRE_THROWS_AS(small.at(6), RangeError);
}

TEST_CASE("order r") {
    CHECK(order_r(author("Glänzel")) == 3);
    CHECK(order_r(author("Schubert")) == 6);
    CHECK(order_r(author("Martin")) == 8);
    CHECK(order_r(author("White")) == 11);
    CHECK(order_r(normalize({4, 4, 1})) == 1);
    CHECK(order_r(normalize({5, 5, 2})) == 2);
    CHECK(order_r(normalize({})) == 1);
}

TEST_CASE("g bar") {
    CHECK(g_bar(author("Glänzel")) == Rational(238, 3));
    CHECK(g_bar(normalize({5, 5, 2})) == Rational(5, 2));
    CHECK(g_bar(author("Leydesdorff")) == Rational(219, 2));
    for (Count c = 2; c <= 9; ++c) CHECK(g_bar(constant(c, c)) == Rational(c));
}

TEST_CASE("capital H") {
    CHECK(big_h(author("Leydesdorff")) == 158.0);
    CHECK(big_h(normalize({5, 5, 2})) == 2.0 * std::sqrt(2.0));
    CHECK(big_h(normalize({4, 4, 1})) == 2.0);
}

TEST_CASE("derived indices of a published column") {
    const auto d = derived_indices(author("Glänzel"));
    CHECK(d.A == Rational(8049, 61));
    CHECK_THAT(to_double(d.A), WithinAbs(131.95, 0.005));
    CHECK_THAT(d.R, WithinAbs(89.716, 0.0005));
    CHECK_THAT(d.D, WithinAbs(111.252, 0.0005));
    CHECK_THAT(d.B, WithinAbs(69.565, 0.0005));
    CHECK_THAT(d.C, WithinAbs(73.979, 0.01));  // exact value 73.978
    CHECK_THAT(d.E, WithinAbs(77.711, 0.0005));
    CHECK_THAT(d.F, WithinAbs(80.279, 0.01));  // exact value 80.281
    CHECK_THAT(d.K, WithinAbs(82.379, 0.0005));
    CHECK(d.l == 2);
    CHECK(d.delta == 0);
    CHECK(d.c_h == author("Glänzel").citations(61));

    const auto garfield = derived_indices(author("Garfield"));
    CHECK(garfield.l == 1);
    CHECK(garfield.delta == 1);
}

TEST_CASE("derived indices of constant and degenerate profiles") {
    const auto d = derived_indices(constant(9, 9));
    CHECK(d.A == Rational(9));
    CHECK(d.R == 9.0);
    CHECK(d.D == 9.0);
    const auto zero = derived_indices(normalize({0, 0}));
    CHECK(zero.A == Rational(0));
    CHECK(zero.R == 0.0);
    CHECK(zero.D == 0.0);
}

TEST_CASE("closed-form order") {
    CHECK(r_closed_form(8049, 61) == 3);
    CHECK(r_closed_form(7048, 38) == 8);
    CHECK(r_closed_form(7471, 34) == 11);
    CHECK(r_closed_form(2332, 19) == 11);
    for (Count h = 1; h <= 20; ++h) CHECK(r_closed_form(h * h, h) == 0);
    REQUIRE_THROWS_AS(r_closed_form(10, 0), DomainError);
    REQUIRE_THROWS_AS(r_closed_form(3, 2), DomainError);
}

TEST_CASE("order from (h, R) pairs") {
    CHECK(r_from_h_and_R(13, 17.52) == 2);
    CHECK(r_from_h_and_R(13, 14.20) == 1);
    CHECK(r_from_h_and_R(27, 55.21) == 7);
    REQUIRE_THROWS_AS(r_from_h_and_R(0, 3.0), DomainError);
    REQUIRE_THROWS_AS(r_from_h_and_R(5, 4.9), DomainError);
}

TEST_CASE("ratio bundles") {
    const RatioReport q = ratio_report(author("Glänzel"));
    CHECK_THAT(q.h_over_g, WithinAbs(0.616, 0.0005));
    CHECK_THAT(q.g_bar_over_h, WithinAbs(1.301, 0.0005));
    CHECK_THAT(q.D_over_H, WithinAbs(1.053, 0.0005));
    CHECK_THAT(q.two_A_over_r1_h, WithinAbs(1.082, 0.0005));
    CHECK_THAT(q.B_over_h, WithinAbs(1.140, 0.0005));
    CHECK_THAT(q.K_over_F, WithinAbs(1.026, 0.0005));
    CHECK(q.alpha() == q.H_over_g);
    CHECK(q.r_plus_1 == 4);

    const RatioReport flat = ratio_report(constant(12, 12));
    for (double v : {flat.g_bar_over_h, flat.R_over_g_bar, flat.g_over_R, flat.H_over_g, flat.D_over_H,
                     flat.A_over_D, flat.B_over_h, flat.C_over_B, flat.E_over_C, flat.F_over_E, flat.K_over_F}) {
        CHECK_THAT(v, WithinAbs(1.0, 1e-12));
    }

    REQUIRE_THROWS_AS(ratio_report(normalize({0, 0})), DegenerateProfileError);
    REQUIRE_THROWS_AS(ratio_report(normalize({})), DegenerateProfileError);
}

TEST_CASE("full report agrees with the oracle on every published column") {
    for (const auto& e : scopus().entries) {
        INFO(e.name);
        const IndexReport x = compute_indices(e.profile);
        const auto o = oracle::compute(std::vector<oracle::Int>(e.profile.counts().begin(), e.profile.counts().end()));
        CHECK(x.h == o.h);
        CHECK(x.g == o.g);
        CHECK(std::vector<Count>(x.g_d.values().begin(), x.g_d.values().end()) == o.g_d);
        CHECK(x.r == o.r);
        CHECK(x.g_bar.numerator() == o.g_bar.numerator());
        CHECK(x.g_bar.denominator() == o.g_bar.denominator());
        CHECK(x.H == o.H);
    }
}

TEST_CASE("all-zero and empty profiles give an all-zero report") {
    for (const auto& p : {normalize({0}), normalize({})}) {
        const IndexReport x = compute_indices(p);
        CHECK(x.h == 0);
        CHECK(x.g == 0);
        CHECK(x.g_d.empty());
        CHECK(x.r == 1);
        CHECK(x.g_bar == Rational(0));
        CHECK(x.H == 0.0);
    }
}
