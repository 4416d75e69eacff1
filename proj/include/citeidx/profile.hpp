#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "citeidx/errors.hpp"
#include "citeidx/rational.hpp"

namespace citeidx {

/// Whether zero-cited records count as papers.
enum class CountingMode { all_records, positive_only };

/// Citation counts of one author, sorted non-increasing, with prefix sums.
///
/// Ranks are 1-based throughout the public interface: `citations(1)` is the
/// most cited paper and `prefix(s)` is the total of the top `s` papers.
/// Instances are immutable once built.
class CitationProfile {
public:
    CitationProfile() : prefix_{0} {}

    /// Adopts counts that are already sorted non-increasing. Throws InputError
    /// on a negative entry or an order violation.
    static CitationProfile from_sorted(std::vector<Count> counts) {
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] < 0) {
                throw InputError("negative citation count at position " + std::to_string(i + 1));
            }
            if (i > 0 && counts[i] > counts[i - 1]) {
                throw InputError("counts not sorted non-increasing at position " + std::to_string(i + 1));
            }
        }
        return CitationProfile(std::move(counts));
    }

    [[nodiscard]] Count n() const noexcept { return static_cast<Count>(counts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return counts_.empty(); }
    [[nodiscard]] std::span<const Count> counts() const noexcept { return counts_; }
    [[nodiscard]] std::span<const Count> prefix_sums() const noexcept { return prefix_; }

    /// cit_j for 1 <= j <= n.
    [[nodiscard]] Count citations(Count rank) const {
        if (rank < 1 || rank > n()) {
            throw RangeError("rank " + std::to_string(rank) + " outside 1.." + std::to_string(n()));
        }
        return counts_[static_cast<std::size_t>(rank - 1)];
    }

    /// Most cited paper, 0 for an empty profile.
    [[nodiscard]] Count top() const noexcept { return counts_.empty() ? 0 : counts_.front(); }

    /// Sum of the top `s` counts; 0 <= s <= n.
    [[nodiscard]] Count prefix(Count s) const {
        if (s < 0 || s > n()) {
            throw RangeError("prefix rank " + std::to_string(s) + " outside 0.." + std::to_string(n()));
        }
        return prefix_[static_cast<std::size_t>(s)];
    }

    [[nodiscard]] Count total() const noexcept { return prefix_.back(); }

    friend bool operator==(const CitationProfile&, const CitationProfile&) = default;

private:
    explicit CitationProfile(std::vector<Count> counts) : counts_(std::move(counts)) {
        prefix_.reserve(counts_.size() + 1);
        prefix_.push_back(0);
        for (Count c : counts_) prefix_.push_back(prefix_.back() + c);
    }

    std::vector<Count> counts_;
    std::vector<Count> prefix_;
};

/// Sorts raw counts non-increasing. Rejects negatives, naming the 1-based
/// position. In positive_only mode zero entries are dropped first.
[[nodiscard]] inline CitationProfile normalize(std::span<const Count> raw,
                                               CountingMode mode = CountingMode::all_records) {
    std::vector<Count> counts;
    counts.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0) {
            throw InputError("negative citation count at position " + std::to_string(i + 1));
        }
        if (mode == CountingMode::positive_only && raw[i] == 0) continue;
        counts.push_back(raw[i]);
    }
    std::sort(counts.begin(), counts.end(), std::greater<>());
    return CitationProfile::from_sorted(std::move(counts));
}

[[nodiscard]] inline CitationProfile normalize(std::initializer_list<Count> raw,
                                               CountingMode mode = CountingMode::all_records) {
    return normalize(std::span<const Count>(raw.begin(), raw.size()), mode);
}

[[nodiscard]] inline Count prefix_citations(const CitationProfile& p, Count s) { return p.prefix(s); }

/// Mean citations of the top k papers, exact. Requires 1 <= k <= n.
[[nodiscard]] inline Rational core_average(const CitationProfile& p, Count k) {
    if (k < 1 || k > p.n()) {
        throw RangeError("core size " + std::to_string(k) + " outside 1.." + std::to_string(p.n()));
    }
    return Rational(p.prefix(k), k);
}

enum class CoreKind { h_core, g_core, g_d_core };

struct CoreSlice {
    CoreKind kind;
    Count size = 0;
    std::span<const Count> citations;
    Count total = 0;
};

[[nodiscard]] inline CoreSlice core_slice(const CitationProfile& p, CoreKind kind, Count size) {
    if (size < 0 || size > p.n()) {
        throw RangeError("core size " + std::to_string(size) + " outside 0.." + std::to_string(p.n()));
    }
    return CoreSlice{kind, size, p.counts().first(static_cast<std::size_t>(size)), p.prefix(size)};
}

}  // namespace citeidx
