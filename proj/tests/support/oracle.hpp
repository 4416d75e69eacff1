#pragma once

// Independent brute-force recomputation of the integer indices. Written
// straight from the definitions with full linear scans and no early exits;
// shares nothing with the library beyond the profile container.

#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Int = std::int64_t;
using Q = boost::rational<std::int64_t>;

struct Indices {
    Int h = 0;
    Int g = 0;
    std::vector<Int> g_d;  // g_d[d - 2] for d = 2..cit_1
    Int r = 1;
    Q g_bar{0};
    double H = 0;
};

inline std::vector<Int> prefix_of(const std::vector<Int>& c) {
    std::vector<Int> s(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) s[i + 1] = s[i] + c[i];
    return s;
}

// `c` must be sorted non-increasing.
inline Indices compute(const std::vector<Int>& c) {
    Indices out;
    const Int n = static_cast<Int>(c.size());
    const auto s = prefix_of(c);

    for (Int k = 1; k <= n; ++k) {
        if (c[k - 1] >= k) out.h = k;
        if (s[k] >= k * k) out.g = k;
    }

    // q_k = floor(2 N(k) / (k (k + 1))) is the largest d whose threshold k meets.
    const Int top = n == 0 ? 0 : c[0];
    std::vector<Int> best(static_cast<std::size_t>(top) + 2, 0);
    for (Int k = 1; k <= n; ++k) {
        Int q = (2 * s[k]) / (k * (k + 1));
        if (q > top) q = top;
        if (k > best[q]) best[q] = k;
    }
    for (Int q = top - 1; q >= 0; --q) best[q] = std::max(best[q], best[q + 1]);
    for (Int d = 2; d <= top; ++d) out.g_d.push_back(best[d]);

    if (out.h > 0) {
        for (Int d = 2; d <= top; ++d) {
            if (out.g_d[d - 2] >= out.h && d - 1 > out.r) out.r = d - 1;
        }
    }

    Int sum = out.g;
    for (Int d = 3; d <= out.r + 1; ++d) sum += out.g_d[d - 2];
    out.g_bar = Q(sum, out.r);
    out.H = out.r == 1 ? static_cast<double>(out.h)
                       : static_cast<double>(out.h) * std::sqrt(static_cast<double>(out.r));
    return out;
}

// Largest k with 2 N(k) >= x k (k + 1), for 0 < x <= cit_1.
inline Int G(const std::vector<Int>& c, const Q& x) {
    const auto s = prefix_of(c);
    Int best = 0;
    for (Int k = 1; k <= static_cast<Int>(c.size()); ++k) {
        if (Q(2 * s[k]) >= x * Q(k * (k + 1))) best = k;
    }
    return best;
}

}  // namespace oracle
