#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "citeidx/errors.hpp"
#include "citeidx/rational.hpp"

namespace citeidx {

namespace detail {

// Renders the integer `scaled` as a decimal with `precision` fraction digits.
[[nodiscard]] inline std::string place_point(Wide scaled, int precision) {
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits;
    do {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    } while (scaled != 0);
    if (precision > 0) {
        if (static_cast<int>(digits.size()) <= precision) {
            digits.insert(0, static_cast<std::size_t>(precision + 1) - digits.size(), '0');
        }
        digits.insert(digits.end() - precision, '.');
    }
    const bool all_zero = digits.find_first_not_of("0.") == std::string::npos;
    return (negative && !all_zero ? "-" : "") + digits;
}

[[nodiscard]] inline Wide pow10(int p) {
    Wide out = 1;
    for (int i = 0; i < p; ++i) out *= 10;
    return out;
}

inline void check_precision(int precision) {
    if (precision < 0 || precision > 12) throw UsageError("precision must be in 0..12");
}

}  // namespace detail

/// Fixed-point text with `precision` decimals, rounding half away from zero.
[[nodiscard]] inline std::string format_fixed(double value, int precision = 3) {
    detail::check_precision(precision);
    if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    const double scaled = std::round(value * std::pow(10.0, precision));
    if (std::fabs(scaled) >= 1e30) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", precision, value);
        return buf;
    }
    return detail::place_point(static_cast<Wide>(scaled), precision);
}

/// Exact decimal rounding of a rational, half away from zero.
[[nodiscard]] inline std::string format_fixed(const Rational& q, int precision = 3) {
    detail::check_precision(precision);
    const Wide scale = detail::pow10(precision);
    const Wide num = Wide{q.numerator()} * scale;
    const Wide den = q.denominator();
    const Wide mag = num < 0 ? -num : num;
    Wide rounded = (2 * mag + den) / (2 * den);
    if (num < 0) rounded = -rounded;
    return detail::place_point(rounded, precision);
}

[[nodiscard]] inline std::string format_fixed(Count value, int precision) {
    return format_fixed(Rational(value), precision);
}

}  // namespace citeidx
