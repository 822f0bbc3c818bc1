#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cedga {

using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-2/7", "0.125" or "1e-3" exactly.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);
/// Closest rational with denominator at most max_den (continued fractions).
Rational approximate_rational(double x, std::int64_t max_den = 1000000000);
inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

} // namespace cedga
