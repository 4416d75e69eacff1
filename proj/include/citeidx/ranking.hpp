#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "citeidx/dataset.hpp"
#include "citeidx/errors.hpp"
#include "citeidx/indices.hpp"

namespace citeidx {

/// An exact quantity num/den, den > 0. Ordering is by value.
/// Irrational indices are ranked through a monotone exact transform
/// (H by h^2 r, C by h^2 N(h), ...), so ties are detected without rounding.
struct ExactKey {
    Wide num = 0;
    Wide den = 1;

    friend std::strong_ordering operator<=>(const ExactKey& a, const ExactKey& b) {
        const Wide lhs = a.num * b.den;
        const Wide rhs = b.num * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const ExactKey& a, const ExactKey& b) { return (a <=> b) == 0; }
};

/// Keys accepted by `rank`, in display order.
inline constexpr std::string_view ranking_keys[] = {
    "h", "g", "g_bar", "H", "A", "R", "D", "B", "C", "E", "F", "K",
    "r", "l", "delta", "n", "total", "N(h)", "N(g)", "c_h",
};

namespace detail {

[[nodiscard]] inline ExactKey ratio(Wide num, Wide den = 1) { return ExactKey{num, den}; }

[[nodiscard]] inline std::string key_list() {
    std::string out;
    for (auto k : ranking_keys) out += (out.empty() ? "" : ", ") + std::string(k);
    return out;
}

}  // namespace detail

[[nodiscard]] inline bool is_ranking_key(std::string_view key) {
    return std::find(std::begin(ranking_keys), std::end(ranking_keys), key) != std::end(ranking_keys);
}

/// Exact ordering key for `key` on one report. Throws UsageError for an unknown key.
[[nodiscard]] inline ExactKey exact_key(const IndexReport& x, std::string_view key) {
    using detail::ratio;
    const Wide h = x.h;
    const Wide core = x.core_h;
    const Wide twice_core_minus = 2 * core - h * h;
    if (key == "h") return ratio(h);
    if (key == "g") return ratio(x.g);
    if (key == "g_bar") return ratio(x.g_bar.numerator(), x.g_bar.denominator());
    if (key == "H") return ratio(h * h * x.r);
    if (key == "A") return ratio(x.A.numerator(), x.A.denominator());
    if (key == "R") return ratio(core);
    if (key == "D") return ratio(twice_core_minus);
    if (key == "B") return ratio(h * x.g_bar.numerator(), x.g_bar.denominator());
    if (key == "C") return ratio(h * h * core);
    if (key == "E") return ratio(h * x.g);
    if (key == "F") return ratio(h * h * h * h * x.r);
    if (key == "K") return ratio(h * h * twice_core_minus);
    if (key == "r") return ratio(x.r);
    if (key == "l") return ratio(x.l);
    if (key == "delta") return ratio(x.delta);
    if (key == "n") return ratio(x.n);
    if (key == "total") return ratio(x.total);
    if (key == "N(h)") return ratio(x.core_h);
    if (key == "N(g)") return ratio(x.core_g);
    if (key == "c_h") return ratio(x.c_h);
    throw UsageError("unknown ranking key '" + std::string(key) + "'; valid keys: " + detail::key_list());
}

/// Keys whose values are integers and display without decimals.
[[nodiscard]] inline bool exact_key_is_integer_valued(std::string_view key) {
    return key != "g_bar" && key != "A" && key != "H" && key != "R" && key != "D" && key != "B" && key != "C" &&
           key != "E" && key != "F" && key != "K";
}

/// Display value of `key` on one report.
[[nodiscard]] inline double key_value(const IndexReport& x, std::string_view key) {
    if (key == "g_bar") return to_double(x.g_bar);
    if (key == "H") return x.H;
    if (key == "A") return to_double(x.A);
    if (key == "R") return x.R;
    if (key == "D") return x.D;
    if (key == "B") return x.B;
    if (key == "C") return x.C;
    if (key == "E") return x.E;
    if (key == "F") return x.F;
    if (key == "K") return x.K;
    const ExactKey k = exact_key(x, key);
    return static_cast<double>(k.num);
}

/// "a" for a single position, "a/b" for two tied positions, "a-b" for wider ties.
[[nodiscard]] inline std::string rank_label(std::size_t first, std::size_t last) {
    if (first == last) return std::to_string(first);
    return std::to_string(first) + (last == first + 1 ? "/" : "-") + std::to_string(last);
}

struct RankedEntry {
    std::string name;
    double value = 0;
    std::size_t first = 0;  // 1-based rank range
    std::size_t last = 0;

    [[nodiscard]] std::string label() const { return rank_label(first, last); }
};

struct Ranking {
    std::string key;
    std::vector<RankedEntry> entries;

    [[nodiscard]] const RankedEntry& at(std::string_view name) const {
        for (const auto& e : entries) {
            if (e.name == name) return e;
        }
        throw LookupError("no ranked entry named '" + std::string(name) + "'");
    }
};

/// Sorts (name, key, display value) triples descending by key, ties
/// alphabetical, and assigns shared rank ranges to equal keys.
template <typename Key>
[[nodiscard]] std::vector<RankedEntry> assign_ranks(std::vector<std::tuple<std::string, Key, double>> items) {
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(b) < std::get<1>(a);
        return std::get<0>(a) < std::get<0>(b);
    });
    std::vector<RankedEntry> out;
    out.reserve(items.size());
    for (std::size_t i = 0; i < items.size();) {
        std::size_t j = i;
        while (j + 1 < items.size() && std::get<1>(items[j + 1]) == std::get<1>(items[i])) ++j;
        for (std::size_t k = i; k <= j; ++k) out.push_back({std::get<0>(items[k]), std::get<2>(items[k]), i + 1, j + 1});
        i = j + 1;
    }
    return out;
}

[[nodiscard]] inline Ranking rank(const std::vector<std::pair<std::string, IndexReport>>& reports, std::string_view key) {
    if (!is_ranking_key(key)) {
        throw UsageError("unknown ranking key '" + std::string(key) + "'; valid keys: " + detail::key_list());
    }
    std::vector<std::tuple<std::string, ExactKey, double>> items;
    items.reserve(reports.size());
    for (const auto& [name, rep] : reports) items.emplace_back(name, exact_key(rep, key), key_value(rep, key));
    return Ranking{std::string(key), assign_ranks(std::move(items))};
}

[[nodiscard]] inline Ranking rank(const Corpus& corpus, std::string_view key) {
    std::vector<std::pair<std::string, IndexReport>> reports;
    reports.reserve(corpus.entries.size());
    for (const auto& e : corpus.entries) reports.emplace_back(e.name, compute_indices(e.profile));
    return rank(reports, key);
}

}  // namespace citeidx
