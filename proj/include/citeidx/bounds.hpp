#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "citeidx/indices.hpp"

namespace citeidx {

/// lower < r <= upper, with lower = 2 N(h) / (h (h + 1)) - 2.
struct OrderBracket {
    Rational lower;
    Count upper = 0;
};

/// lower < h <= upper (order r >= 2).
struct HFloorBracket {
    Count lower = 0;
    Count upper = 0;
};

/// 2 (h + l) <= 2 A_h < 3 (h + 1) (order r = 1).
struct HOrderOneBracket {
    Count lower = 0;
    Rational twice_core_average;
    Count upper = 0;
};

using HBracket = std::variant<HFloorBracket, HOrderOneBracket>;

/// lower < h sqrt(r) <= upper.
struct CapitalHBracket {
    double lower = 0;
    double upper = 0;
};

struct BoundsReport {
    OrderBracket r;
    HBracket h;
    std::optional<double> l_upper;     // empty: not applicable
    std::optional<CapitalHBracket> H;  // empty: not applicable
};

namespace detail {

inline void require_positive_h(const IndexReport& x) {
    if (x.h == 0) throw DegenerateProfileError("bounds need h >= 1");
}

}  // namespace detail

[[nodiscard]] inline OrderBracket r_bounds(const IndexReport& x) {
    detail::require_positive_h(x);
    const Count h = x.h;
    const Count twice_core = 2 * x.core_h;
    const Count width = x.r >= 2 ? h + x.l + 1 : h + x.l;
    return OrderBracket{Rational(twice_core, h * (h + 1)) - 2,
                        static_cast<Count>(floor_div(twice_core, Wide{h} * width)) - 1};
}

[[nodiscard]] inline HBracket h_bounds(const IndexReport& x) {
    detail::require_positive_h(x);
    const Count h = x.h;
    const Rational twice_a = Rational(2 * x.core_h, h);
    if (x.r == 1) return HOrderOneBracket{2 * (h + x.l), twice_a, 3 * (h + 1)};
    return HFloorBracket{floor(twice_a / (x.r + 2)) - 1, floor(twice_a / (x.r + 1)) - (x.l + 1)};
}

/// h (h + 1)^2 / (2 N(h) - h (h + 1)); empty unless r >= 2 and the denominator is positive.
[[nodiscard]] inline std::optional<Rational> l_bound_exact(const IndexReport& x) {
    detail::require_positive_h(x);
    const Count h = x.h;
    const Count denom = 2 * x.core_h - h * (h + 1);
    if (x.r < 2 || denom <= 0) return std::nullopt;
    return Rational(h * (h + 1) * (h + 1), denom);
}

[[nodiscard]] inline std::optional<double> l_bound(const IndexReport& x) {
    auto q = l_bound_exact(x);
    if (!q) return std::nullopt;
    return to_double(*q);
}

[[nodiscard]] inline std::optional<CapitalHBracket> H_bounds(const IndexReport& x) {
    detail::require_positive_h(x);
    if (x.r < 2) return std::nullopt;
    const auto h = static_cast<double>(x.h);
    const double a = to_double(Rational(x.core_h, x.h * (x.h + 1)));  // A_h / (h + 1)
    return CapitalHBracket{std::sqrt(std::max(0.0, 2.0 * h * h * (a - 1.0))),
                           std::sqrt(std::max(0.0, h * h * (2.0 * a - 1.0)))};
}

[[nodiscard]] inline BoundsReport bounds_report(const IndexReport& x) {
    return BoundsReport{r_bounds(x), h_bounds(x), l_bound(x), H_bounds(x)};
}

[[nodiscard]] inline BoundsReport bounds_report(const CitationProfile& p) {
    return bounds_report(compute_indices(p));
}

// Convenience overloads on profiles.
[[nodiscard]] inline OrderBracket r_bounds(const CitationProfile& p) { return r_bounds(compute_indices(p)); }
[[nodiscard]] inline HBracket h_bounds(const CitationProfile& p) { return h_bounds(compute_indices(p)); }
[[nodiscard]] inline std::optional<double> l_bound(const CitationProfile& p) { return l_bound(compute_indices(p)); }
[[nodiscard]] inline std::optional<CapitalHBracket> H_bounds(const CitationProfile& p) {
    return H_bounds(compute_indices(p));
}

struct Violation {
    std::string check;
    std::string relation_id;
    std::string left;
    std::string relation;
    std::string right;
};

struct ViolationReport {
    std::string profile_id;
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

class Checker {
public:
    explicit Checker(ViolationReport& out) : out_(out) {}

    template <class L, class R>
    void expect(bool holds, std::string check, std::string relation_id, const L& left, std::string relation,
                const R& right) {
        if (holds) return;
        out_.violations.push_back(
            {std::move(check), std::move(relation_id), str(left), std::move(relation), str(right)});
    }

private:
    static std::string str(const std::string& s) { return s; }
    static std::string str(const char* s) { return s; }
    static std::string str(const Rational& q) { return to_string(q); }
    static std::string str(Wide v) {
        if (v == 0) return "0";
        const bool neg = v < 0;
        std::string digits;
        while (v != 0) {
            const int d = static_cast<int>(v % 10);
            digits.insert(digits.begin(), static_cast<char>('0' + (neg ? -d : d)));
            v /= 10;
        }
        return neg ? "-" + digits : digits;
    }
    static std::string str(Count v) { return std::to_string(v); }
    static std::string str(double v) { return std::to_string(v); }

    ViolationReport& out_;
};

inline void check_threshold_function(const CitationProfile& p, const IndexReport& x, Checker& c) {
    if (p.top() < 1) return;
    const Count top = p.top();
    const Count n = p.n();

    const Count at_top = g_function(p, Rational(top));
    c.expect(at_top == 1, "G(cit_1) = 1", "threshold-function-top", at_top, "==", Count{1});

    const Rational full = Rational(2 * p.total(), n * (n + 1));
    const Count at_full = g_function(p, full);
    c.expect(at_full == n, "G attains n on (0, 2N/(n(n+1))]", "threshold-function-max", at_full, "==", n);

    const auto pieces = g_breakpoints(p);
    c.expect(!pieces.empty() && pieces.front().upper == Rational(top), "pieces start at cit_1",
             "threshold-function-pieces", pieces.empty() ? Rational(0) : pieces.front().upper, "==", Rational(top));
    c.expect(!pieces.empty() && pieces.back().lower == Rational(0), "pieces end at 0", "threshold-function-pieces",
             pieces.empty() ? Rational(-1) : pieces.back().lower, "==", Rational(0));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const GInterval& piece = pieces[i];
        if (i + 1 < pieces.size()) {
            c.expect(pieces[i + 1].upper == piece.lower, "pieces are contiguous", "threshold-function-pieces",
                     pieces[i + 1].upper, "==", piece.lower);
            c.expect(pieces[i + 1].k > piece.k, "G non-increasing in x", "threshold-function-monotone",
                     pieces[i + 1].k, ">", piece.k);
        }
        const Count at_upper = g_function(p, piece.upper);
        c.expect(at_upper == piece.k, "G at piece upper end", "threshold-function-pieces", at_upper, "==", piece.k);
        const Count at_mid = g_function(p, (piece.lower + piece.upper) / 2);
        c.expect(at_mid == piece.k, "G at piece midpoint", "threshold-function-pieces", at_mid, "==", piece.k);
    }

    for (Count d = 2; d <= top; ++d) {
        const Count at_d = g_function(p, Rational(d));
        c.expect(at_d == x.g_d.at(d), "G(d) = g_d", "threshold-function-integer-points", at_d, "==", x.g_d.at(d));
    }
}

inline void check_g_d_chain(const IndexReport& x, Checker& c) {
    const auto vals = x.g_d.values();
    for (std::size_t i = 1; i < vals.size(); ++i) {
        c.expect(vals[i] <= vals[i - 1], "g_{d+1} <= g_d", "g_d-nonincreasing", vals[i], "<=", vals[i - 1]);
    }
    if (!vals.empty()) {
        c.expect(vals.back() == 1, "g_{cit_1} = 1", "g_d-nonincreasing", vals.back(), "==", Count{1});
        c.expect(x.g - 1 <= vals.front() && vals.front() <= x.g, "g - 1 <= g_2 <= g", "g_2-near-g", vals.front(),
                 "in", "[" + std::to_string(x.g - 1) + ", " + std::to_string(x.g) + "]");
    }
    c.expect(x.h <= x.g, "h <= g", "g-chain-above-h", x.h, "<=", x.g);
    if (x.r >= 2) {
        c.expect(vals.front() <= x.g, "g_2 <= g", "g-chain-above-h", vals.front(), "<=", x.g);
        c.expect(x.g_d.at(x.r + 1) >= x.h, "g_{r+1} >= h", "g-chain-above-h", x.g_d.at(x.r + 1), ">=", x.h);
    }
    if (auto next = x.g_d.find(x.r + 2); next && x.h > 0 && x.r >= 2) {
        c.expect(*next < x.h, "order is maximal", "order-definition", *next, "<", x.h);
    }
    if (x.r == 1 && x.h > 0) {
        if (auto g3 = x.g_d.find(3)) c.expect(*g3 < x.h, "order 1 means g_3 < h", "order-definition", *g3, "<", x.h);
    }
}

inline void check_index_chains(const IndexReport& x, Checker& c) {
    const Wide h = x.h;
    const Wide core = x.core_h;
    const Wide r = x.r;
    const Wide l = x.l;
    const Rational H(x.h);

    c.expect(H <= x.g_bar && x.g_bar <= Rational(x.g), "h <= g_bar <= g", "g_bar-between-h-and-g", x.g_bar, "in",
             "[" + std::to_string(x.h) + ", " + std::to_string(x.g) + "]");
    c.expect(x.delta >= 0, "delta >= 0", "order-slack", x.delta, ">=", Count{0});
    if (x.h == 0) return;

    // Every irrational index is compared through integer powers of both sides.
    c.expect(Wide{x.g} * h <= core, "g <= A", "g-below-A", Wide{x.g} * h, "<=", core);
    c.expect(h * h <= core, "h <= R", "h-below-R", h * h, "<=", core);
    c.expect(core <= 2 * core - h * h, "R <= D", "R-below-D", core, "<=", 2 * core - h * h);
    c.expect((2 * core - h * h) * h * h <= core * core, "D <= A", "D-below-A", (2 * core - h * h) * h * h, "<=",
             core * core);
    c.expect(h * h * r <= 2 * core - h * h, "H <= D", "H-below-D", h * h * r, "<=", 2 * core - h * h);
    c.expect(h * h * (r + 1) <= 2 * core, "h <= 2A/(r+1)", "h-below-2A-over-r1", h * h * (r + 1), "<=", 2 * core);
    if (x.r >= 2) {
        c.expect((r + 1) * h * (h + l + 1) <= 2 * core, "h <= 2A/(r+1) - (l+1)", "h-below-2A-over-r1-minus-l1",
                 (r + 1) * h * (h + l + 1), "<=", 2 * core);
    }
    // C^4 = h^2 N(h), K^4 = h^2 (2 N(h) - h^2), A^4 = N(h)^4 / h^4.
    c.expect(h * h * h * h <= h * h * core, "h <= C", "C-chain", h * h * h * h, "<=", h * h * core);
    c.expect(h * h * core <= h * h * (2 * core - h * h), "C <= K", "C-chain", h * h * core, "<=",
             h * h * (2 * core - h * h));
    const Wide h6 = h * h * h * h * h * h;
    c.expect(h6 * (2 * core - h * h) <= core * core * core * core, "K <= A", "C-chain", h6 * (2 * core - h * h),
             "<=", core * core * core * core);
    // B^2 = h g_bar, E^2 = h g.
    c.expect(H <= x.g_bar, "h <= B", "B-chain", H, "<=", x.g_bar);
    c.expect(x.g_bar <= Rational(x.g), "B <= E", "B-chain", x.g_bar, "<=", Rational(x.g));
    c.expect(x.h <= x.g, "E <= g", "B-chain", x.h, "<=", x.g);
    c.expect(h * h * r <= 2 * core - h * h, "F <= K", "F-chain", h * h * r, "<=", 2 * core - h * h);

    // Floating values must agree with the exact relations they came from.
    const double eps = 1e-9 * std::max(1.0, to_double(x.A));
    c.expect(x.h <= x.R + eps && x.R <= x.D + eps && x.D <= to_double(x.A) + eps, "h <= R <= D <= A (float)",
             "R-chain", x.R, "<=", x.D);
    c.expect(x.H <= x.D + eps && x.F <= x.K + eps && x.K <= to_double(x.A) + eps, "H <= D, F <= K <= A (float)",
             "F-chain", x.F, "<=", x.K);
    c.expect(x.h <= x.B + eps && x.B <= x.E + eps && x.E <= x.g + eps, "h <= B <= E <= g (float)", "B-chain",
             x.B, "<=", x.E);
    c.expect(x.h <= x.C + eps && x.C <= x.K + eps, "h <= C <= K (float)", "C-chain", x.C, "<=", x.K);
}

inline void check_order_bounds(const IndexReport& x, Checker& c) {
    if (x.h == 0) return;
    const Wide h = x.h;
    const Wide core = x.core_h;
    const Wide r = x.r;
    const Wide l = x.l;

    // lower < r <= upper
    c.expect((r + 2) * h * (h + 1) > 2 * core, "2N(h)/(h(h+1)) - 2 < r", "order-bracket", (r + 2) * h * (h + 1),
             ">", 2 * core);
    const OrderBracket rb = r_bounds(x);
    c.expect(rb.lower < Rational(x.r) && x.r <= rb.upper, "order inside bracket", "order-bracket", x.r, "in",
             "(" + to_string(rb.lower) + ", " + std::to_string(rb.upper) + "]");

    const Count closed = r_closed_form(x.core_h, x.h);
    if (x.r >= 2) {
        c.expect(closed == x.r, "closed-form order", "order-closed-form", closed, "==", x.r);
        const double H_closed = static_cast<double>(x.h) * std::sqrt(static_cast<double>(closed));
        c.expect(std::abs(H_closed - x.H) <= 1e-9 * x.H, "closed-form H", "H-closed-form", H_closed, "==", x.H);
        // sqrt(2h^2 (A/(h+1) - 1)) < H <= sqrt(h^2 (2A/(h+1) - 1))
        c.expect(2 * core < (r + 2) * h * (h + 1), "H above lower bracket", "H-bracket", 2 * core, "<",
                 (r + 2) * h * (h + 1));
        c.expect((r + 1) * h * (h + 1) <= 2 * core, "H below upper bracket", "H-bracket", (r + 1) * h * (h + 1),
                 "<=", 2 * core);
        const auto hb = H_bounds(x);
        c.expect(hb.has_value() && hb->lower < x.H * (1 + 1e-12) && x.H <= hb->upper * (1 + 1e-12),
                 "H inside float bracket", "H-bracket", x.H, "in", hb ? std::to_string(hb->upper) : "none");
    } else {
        c.expect(closed <= 1, "closed form at order 1", "order-closed-form", closed, "<=", Count{1});
    }

    const HBracket hbr = h_bounds(x);
    if (const auto* fb = std::get_if<HFloorBracket>(&hbr)) {
        c.expect(fb->lower < x.h && x.h <= fb->upper, "floor bracket on h", "h-bracket", x.h, "in",
                 "(" + std::to_string(fb->lower) + ", " + std::to_string(fb->upper) + "]");
    } else {
        const auto& ob = std::get<HOrderOneBracket>(hbr);
        c.expect(Rational(ob.lower) <= ob.twice_core_average && ob.twice_core_average < Rational(ob.upper),
                 "2(h+l) <= 2A_h < 3(h+1)", "h-bracket", ob.twice_core_average, "in",
                 "[" + std::to_string(ob.lower) + ", " + std::to_string(ob.upper) + ")");
    }

    if (auto lb = l_bound_exact(x)) {
        c.expect(Rational(x.l) < *lb, "l below overshoot bound", "l-bound", x.l, "<", *lb);
        c.expect(l * (2 * core - h * (h + 1)) < h * (h + 1) * (h + 1), "l below overshoot bound (integer)",
                 "l-bound", l * (2 * core - h * (h + 1)), "<", h * (h + 1) * (h + 1));
    }
}

inline void check_flat_core(const CitationProfile& p, const IndexReport& x, Checker& c) {
    // Top h papers all at exactly h citations, h >= 2.
    if (x.h < 2 || p.top() != x.h) return;
    c.expect(x.g == x.h, "flat core: g = h", "flat-core", x.g, "==", x.h);
    c.expect(x.r == 1, "flat core: r = 1", "flat-core", x.r, "==", Count{1});
    c.expect(x.g_bar == Rational(x.h), "flat core: g_bar = h", "flat-core", x.g_bar, "==", Rational(x.h));
    c.expect(x.H == static_cast<double>(x.h), "flat core: H = h", "flat-core", x.H, "==", static_cast<double>(x.h));
}

}  // namespace detail

/// Checks every proved relation among the indices of `p`. An empty report
/// means all of them hold.
[[nodiscard]] inline ViolationReport validate(const CitationProfile& p, std::string profile_id = {}) {
    ViolationReport out{std::move(profile_id), {}};
    detail::Checker c(out);
    const IndexReport x = compute_indices(p);
    detail::check_g_d_chain(x, c);
    detail::check_index_chains(x, c);
    detail::check_order_bounds(x, c);
    detail::check_threshold_function(p, x, c);
    detail::check_flat_core(p, x, c);
    return out;
}

/// Checks a raw count vector without sorting it first; unsorted input is
/// rejected with InputError before any relation is evaluated.
[[nodiscard]] inline ViolationReport validate_raw(std::vector<Count> counts, std::string profile_id = {}) {
    return validate(CitationProfile::from_sorted(std::move(counts)), std::move(profile_id));
}

}  // namespace citeidx
