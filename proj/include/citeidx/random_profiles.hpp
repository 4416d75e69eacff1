#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "citeidx/profile.hpp"

namespace citeidx {

/// Deterministic stream of citation profiles for property checks: random
/// shapes with n <= max_papers and counts <= max_citations, mixed with
/// adversarial shapes (constant, single spike, long zero tail, all zeros,
/// all ones, empty). A seed always yields the same stream on a given
/// toolchain.
class ProfileGenerator {
public:
    explicit ProfileGenerator(std::uint64_t seed, Count max_papers = 200, Count max_citations = 10000)
        : rng_(seed), max_papers_(max_papers), max_citations_(max_citations) {}

    /// Name of the shape drawn by the last `next()`.
    [[nodiscard]] std::string_view last_shape() const noexcept { return shape_; }

    [[nodiscard]] CitationProfile next() {
        std::vector<Count> raw;
        const Count pick = uniform(0, 99);
        if (pick < 55) {
            shape_ = "uniform";
            raw = uniform_counts(uniform(1, max_papers_), log_uniform_top());
        } else if (pick < 70) {
            shape_ = "power law";
            raw = power_law(uniform(1, max_papers_), log_uniform_top());
        } else if (pick < 76) {
            shape_ = "constant";
            raw.assign(static_cast<std::size_t>(uniform(1, max_papers_)), uniform(0, std::min<Count>(max_citations_, 250)));
        } else if (pick < 82) {
            shape_ = "single spike";
            raw.assign(static_cast<std::size_t>(uniform(0, max_papers_ - 1)), uniform(0, 1));
            raw.push_back(log_uniform_top());
        } else if (pick < 90) {
            shape_ = "long zero tail";
            const Count n = uniform(1, max_papers_);
            raw = uniform_counts(uniform(1, std::max<Count>(1, n / 8)), log_uniform_top());
            raw.resize(static_cast<std::size_t>(n), 0);
        } else if (pick < 93) {
            shape_ = "all zeros";
            raw.assign(static_cast<std::size_t>(uniform(1, max_papers_)), 0);
        } else if (pick < 96) {
            shape_ = "all ones";
            raw.assign(static_cast<std::size_t>(uniform(1, max_papers_)), 1);
        } else if (pick < 98) {
            shape_ = "square";  // c papers with c citations each
            const Count c = uniform(1, std::min(max_papers_, max_citations_));
            raw.assign(static_cast<std::size_t>(c), c);
        } else {
            shape_ = "empty";
        }
        return normalize(raw);
    }

private:
    // Uniform integer in [lo, hi]; modulo bias is negligible for these ranges.
    Count uniform(Count lo, Count hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<Count>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    // Top count spread evenly over orders of magnitude.
    Count log_uniform_top() {
        const double span = std::log(static_cast<double>(max_citations_) + 1.0);
        return std::clamp<Count>(static_cast<Count>(std::exp(unit() * span)) - 1, 0, max_citations_);
    }

    std::vector<Count> uniform_counts(Count n, Count top) {
        std::vector<Count> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = uniform(0, top);
        return v;
    }

    std::vector<Count> power_law(Count n, Count top) {
        const double exponent = 0.3 + 1.7 * unit();
        std::vector<Count> v(static_cast<std::size_t>(n));
        for (Count j = 0; j < n; ++j) {
            v[static_cast<std::size_t>(j)] =
                static_cast<Count>(std::floor(static_cast<double>(top) / std::pow(static_cast<double>(j + 1), exponent)));
        }
        return v;
    }

    std::mt19937_64 rng_;
    Count max_papers_;
    Count max_citations_;
    std::string_view shape_ = "none";
};

}  // namespace citeidx
