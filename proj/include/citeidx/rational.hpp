#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace citeidx {

using Count = std::int64_t;
using Rational = boost::rational<Count>;
using Wide = __int128;

[[nodiscard]] inline double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

/// floor(num / den) for den > 0.
[[nodiscard]] constexpr Wide floor_div(Wide num, Wide den) {
    Wide q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return q;
}

[[nodiscard]] inline Count floor(const Rational& q) {
    return static_cast<Count>(floor_div(q.numerator(), q.denominator()));
}

/// "p/q", or "p" when the denominator is 1.
[[nodiscard]] inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace citeidx
