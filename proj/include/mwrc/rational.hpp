#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace mwrc {

/// Exact arithmetic for DoF values. Several regimes produce thirds, so DoF
/// comparisons against integer bounds must not go through floating point.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is 1.
inline std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace mwrc
