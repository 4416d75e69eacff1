#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "citeidx/profile.hpp"
#include "citeidx/rational.hpp"

namespace citeidx {

namespace detail {

// Largest k in [1, hi] with pred(k), where pred holds on a prefix of the
// range. Returns 0 when pred(1) is false or hi < 1.
template <class Pred>
[[nodiscard]] Count last_true(Count hi, Pred&& pred) {
    Count lo = 0;  // pred(lo) is true, or lo == 0
    while (lo < hi) {
        const Count mid = lo + (hi - lo + 1) / 2;
        if (pred(mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

// 2 * N(k) >= x * k * (k + 1) with x = num / den, den > 0.
[[nodiscard]] inline bool meets_threshold(const CitationProfile& p, Count k, Count num, Count den) {
    return Wide{2} * p.prefix(k) * den >= Wide{num} * k * (k + 1);
}

}  // namespace detail

/// Largest k with cit_k >= k.
[[nodiscard]] inline Count h_index(const CitationProfile& p) {
    return detail::last_true(p.n(), [&](Count k) { return p.citations(k) >= k; });
}

/// Largest k <= n whose top-k papers hold at least k^2 citations.
[[nodiscard]] inline Count g_index(const CitationProfile& p) {
    return detail::last_true(p.n(), [&](Count k) { return Wide{p.prefix(k)} >= Wide{k} * k; });
}

/// Real-argument threshold function: the largest k in 1..n with
/// (2/x) * A_k >= k + 1. Defined for 0 < x <= cit_1.
[[nodiscard]] inline Count g_function(const CitationProfile& p, const Rational& x) {
    if (p.top() < 1) throw DomainError("threshold function undefined for a profile without citations");
    if (x <= Rational(0) || x > Rational(p.top())) {
        throw DomainError("x = " + to_string(x) + " outside (0, " + std::to_string(p.top()) + "]");
    }
    return detail::last_true(p.n(), [&](Count k) {
        return detail::meets_threshold(p, k, x.numerator(), x.denominator());
    });
}

/// One constant piece of the threshold function: value k on (lower, upper].
struct GInterval {
    Rational lower;
    Rational upper;
    Count k = 0;

    friend bool operator==(const GInterval&, const GInterval&) = default;
};

/// t_k = 2 N(k) / (k (k + 1)), the largest x at which k still qualifies.
[[nodiscard]] inline Rational g_threshold(const CitationProfile& p, Count k) {
    return Rational(2 * p.prefix(k), k * (k + 1));
}

/// Pieces of the threshold function in decreasing order of x. Ranks whose
/// interval is empty (t_{k+1} == t_k) are skipped.
[[nodiscard]] inline std::vector<GInterval> g_breakpoints(const CitationProfile& p) {
    if (p.top() < 1) throw DomainError("threshold function undefined for a profile without citations");
    std::vector<GInterval> pieces;
    for (Count k = 1; k <= p.n(); ++k) {
        const Rational upper = g_threshold(p, k);
        const Rational lower = k < p.n() ? g_threshold(p, k + 1) : Rational(0);
        if (lower < upper) pieces.push_back({lower, upper, k});
    }
    return pieces;
}

/// g_d for integer d >= 2; empty when d exceeds cit_1.
[[nodiscard]] inline std::optional<Count> g_d_index(const CitationProfile& p, Count d) {
    if (d < 2) throw DomainError("g_d requires d >= 2, got " + std::to_string(d));
    if (d > p.top()) return std::nullopt;
    return detail::last_true(p.n(), [&](Count k) { return detail::meets_threshold(p, k, d, 1); });
}

/// The values g_2, g_3, ..., g_{cit_1}; empty when cit_1 <= 1.
class GdSequence {
public:
    GdSequence() = default;
    explicit GdSequence(std::vector<Count> values) : values_(std::move(values)) {}

    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    /// Largest d present; 1 when empty.
    [[nodiscard]] Count last_d() const noexcept { return static_cast<Count>(values_.size()) + 1; }
    [[nodiscard]] bool contains(Count d) const noexcept { return d >= 2 && d <= last_d(); }

    [[nodiscard]] std::optional<Count> find(Count d) const {
        if (!contains(d)) return std::nullopt;
        return values_[static_cast<std::size_t>(d - 2)];
    }

    [[nodiscard]] Count at(Count d) const {
        if (!contains(d)) throw RangeError("g_" + std::to_string(d) + " does not exist");
        return values_[static_cast<std::size_t>(d - 2)];
    }

    [[nodiscard]] std::span<const Count> values() const noexcept { return values_; }

    friend bool operator==(const GdSequence&, const GdSequence&) = default;

private:
    std::vector<Count> values_;
};

[[nodiscard]] inline GdSequence g_d_sequence(const CitationProfile& p) {
    std::vector<Count> values;
    if (p.top() >= 2) values.reserve(static_cast<std::size_t>(p.top() - 1));
    for (Count d = 2; d <= p.top(); ++d) values.push_back(*g_d_index(p, d));
    return GdSequence(std::move(values));
}

/// Order of g with respect to h: max({1} U {d - 1 : g_d exists, g_d >= h}).
[[nodiscard]] inline Count order_r(const CitationProfile& p) {
    const Count h = h_index(p);
    if (h == 0 || p.top() < 2) return 1;
    // g_d is non-increasing in d, so the qualifying d form a prefix of 2..cit_1.
    const Count qualifying = detail::last_true(p.top() - 1, [&](Count i) { return *g_d_index(p, i + 1) >= h; });
    return std::max<Count>(1, qualifying);
}

namespace detail {

[[nodiscard]] inline Rational g_bar_from(Count g, Count r, const GdSequence& seq) {
    if (r == 1) return Rational(g);
    Count sum = g;
    for (Count d = 3; d <= r + 1; ++d) sum += seq.at(d);
    return Rational(sum, r);
}

}  // namespace detail

/// Average of g, g_3, ..., g_{r+1} over r terms; g itself when r = 1.
[[nodiscard]] inline Rational g_bar(const CitationProfile& p) {
    const Count r = order_r(p);
    if (r == 1) return Rational(g_index(p));
    return detail::g_bar_from(g_index(p), r, g_d_sequence(p));
}

/// h * sqrt(r).
[[nodiscard]] inline double big_h(const CitationProfile& p) {
    const Count r = order_r(p);
    const auto h = static_cast<double>(h_index(p));
    return r == 1 ? h : h * std::sqrt(static_cast<double>(r));
}

struct DerivedIndices {
    Rational A{0};
    double R = 0;
    double D = 0;
    double B = 0;
    double C = 0;
    double E = 0;
    double F = 0;
    double K = 0;
    Count l = 0;
    Count delta = 0;
    Count c_h = 0;
};

namespace detail {

[[nodiscard]] inline DerivedIndices derive(const CitationProfile& p, Count h, Count g, Count r,
                                           const Rational& gbar, double H, const GdSequence& seq) {
    DerivedIndices out;
    if (h == 0) return out;
    const Count core = p.prefix(h);
    const auto hd = static_cast<double>(h);
    out.A = Rational(core, h);
    out.R = std::sqrt(static_cast<double>(core));
    out.D = std::sqrt(static_cast<double>(2 * core - h * h));
    out.E = std::sqrt(hd * static_cast<double>(g));
    out.B = std::sqrt(hd * to_double(gbar));
    out.C = std::sqrt(hd * out.R);
    out.F = std::sqrt(hd * H);
    out.K = std::sqrt(hd * out.D);
    out.l = (r >= 2 ? seq.at(r + 1) : g) - h;
    out.delta = static_cast<Count>(floor_div(Wide{2} * core, Wide{h} * h)) - (r + 1);
    out.c_h = p.citations(h);
    return out;
}

}  // namespace detail

/// A, R, D, B, C, E, F, K plus the auxiliary l, delta and c_h. All zero when h = 0.
[[nodiscard]] inline DerivedIndices derived_indices(const CitationProfile& p) {
    const Count h = h_index(p);
    const Count g = g_index(p);
    const Count r = order_r(p);
    const GdSequence seq = r >= 2 ? g_d_sequence(p) : GdSequence{};
    const Rational gbar = detail::g_bar_from(g, r, seq);
    const double H = r == 1 ? static_cast<double>(h) : static_cast<double>(h) * std::sqrt(static_cast<double>(r));
    return detail::derive(p, h, g, r, gbar, H, seq);
}

/// floor(2 N(h) / (h (h + 1))) - 1, the order recovered from the h-core total.
[[nodiscard]] inline Count r_closed_form(Count core_total, Count h) {
    if (h < 1) throw DomainError("closed-form order needs h >= 1");
    if (Wide{core_total} < Wide{h} * h) throw DomainError("h-core total below h^2");
    return static_cast<Count>(floor_div(Wide{2} * core_total, Wide{h} * (h + 1))) - 1;
}

/// Order recovered from published (h, R) pairs, where R^2 stands in for N(h).
/// Clamped below at 1.
[[nodiscard]] inline Count r_from_h_and_R(Count h, double R) {
    if (h < 1) throw DomainError("order from (h, R) needs h >= 1");
    if (!(R >= static_cast<double>(h))) throw DomainError("order from (h, R) needs R >= h");
    const double hd = static_cast<double>(h);
    const auto r = static_cast<Count>(std::floor(2.0 * R * R / (hd * (hd + 1.0)))) - 1;
    return std::max<Count>(r, 1);
}

/// Every scalar index of one profile.
struct IndexReport {
    Count n = 0;
    Count total = 0;
    Count core_h = 0;  // N(h)
    Count core_g = 0;  // N(g)
    Count h = 0;
    Count g = 0;
    GdSequence g_d;
    Count r = 1;
    Rational g_bar{0};
    double H = 0;
    Rational A{0};
    double R = 0;
    double D = 0;
    double B = 0;
    double C = 0;
    double E = 0;
    double F = 0;
    double K = 0;
    Count l = 0;
    Count delta = 0;
    Count c_h = 0;
};

[[nodiscard]] inline IndexReport compute_indices(const CitationProfile& p) {
    IndexReport rep;
    rep.n = p.n();
    rep.total = p.total();
    rep.h = h_index(p);
    rep.g = g_index(p);
    rep.core_h = p.prefix(rep.h);
    rep.core_g = p.prefix(rep.g);
    rep.g_d = g_d_sequence(p);
    if (rep.h > 0 && !rep.g_d.empty()) {
        const auto vals = rep.g_d.values();
        const Count qualifying = detail::last_true(static_cast<Count>(vals.size()), [&](Count i) {
            return vals[static_cast<std::size_t>(i - 1)] >= rep.h;
        });
        rep.r = std::max<Count>(1, qualifying);
    }
    rep.g_bar = detail::g_bar_from(rep.g, rep.r, rep.g_d);
    rep.H = rep.r == 1 ? static_cast<double>(rep.h)
                       : static_cast<double>(rep.h) * std::sqrt(static_cast<double>(rep.r));
    const DerivedIndices d = detail::derive(p, rep.h, rep.g, rep.r, rep.g_bar, rep.H, rep.g_d);
    rep.A = d.A;
    rep.R = d.R;
    rep.D = d.D;
    rep.B = d.B;
    rep.C = d.C;
    rep.E = d.E;
    rep.F = d.F;
    rep.K = d.K;
    rep.l = d.l;
    rep.delta = d.delta;
    rep.c_h = d.c_h;
    return rep;
}

/// Ratio bundles used to compare the indices against each other.
struct RatioReport {
    // first table block
    double h_over_g = 0;
    double h_sqrt_r_over_g = 0;
    double h_sqrt_r_minus_1_over_g = 0;
    double c_h_minus_h_over_h = 0;
    double l_over_h = 0;
    // g_bar / h ... 2A / ((r + 1) h)
    double g_bar_over_h = 0;
    double R_over_g_bar = 0;
    double g_over_R = 0;
    double H_over_g = 0;  // alpha
    double D_over_H = 0;
    double A_over_D = 0;
    double A_over_h = 0;
    double two_A_over_r1_h = 0;
    // slack quantities
    double beta = 0;  // D / g
    Count r_plus_1 = 0;
    Count delta = 0;
    Count l = 0;
    // geometric-mean family
    double B_over_h = 0;
    double C_over_B = 0;
    double E_over_C = 0;
    double F_over_E = 0;
    double K_over_F = 0;

    [[nodiscard]] double alpha() const noexcept { return H_over_g; }
};

[[nodiscard]] inline RatioReport ratio_report(const IndexReport& x) {
    if (x.h == 0 || x.g == 0) throw DegenerateProfileError("ratios need h >= 1 and g >= 1");
    const auto h = static_cast<double>(x.h);
    const auto g = static_cast<double>(x.g);
    const double A = to_double(x.A);
    const double gbar = to_double(x.g_bar);
    RatioReport q;
    q.h_over_g = h / g;
    q.h_sqrt_r_over_g = x.H / g;
    q.h_sqrt_r_minus_1_over_g = h * std::sqrt(static_cast<double>(x.r - 1)) / g;
    q.c_h_minus_h_over_h = static_cast<double>(x.c_h - x.h) / h;
    q.l_over_h = static_cast<double>(x.l) / h;
    q.g_bar_over_h = gbar / h;
    q.R_over_g_bar = x.R / gbar;
    q.g_over_R = g / x.R;
    q.H_over_g = x.H / g;
    q.D_over_H = x.D / x.H;
    q.A_over_D = A / x.D;
    q.A_over_h = A / h;
    q.two_A_over_r1_h = 2.0 * A / (static_cast<double>(x.r + 1) * h);
    q.beta = x.D / g;
    q.r_plus_1 = x.r + 1;
    q.delta = x.delta;
    q.l = x.l;
    q.B_over_h = x.B / h;
    q.C_over_B = x.C / x.B;
    q.E_over_C = x.E / x.C;
    q.F_over_E = x.F / x.E;
    q.K_over_F = x.K / x.F;
    return q;
}

[[nodiscard]] inline RatioReport ratio_report(const CitationProfile& p) { return ratio_report(compute_indices(p)); }

}  // namespace citeidx
