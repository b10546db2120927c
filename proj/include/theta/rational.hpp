#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace theta {

using Rational = mpq_class;

/// Parses "7", "-3/4" or " 2/6 " (canonicalized). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Closest rational to `x` whose denominator does not exceed `max_denominator`
/// (continued-fraction best approximation on the exact binary value of x).
Rational limit_denominator(double x, unsigned long max_denominator);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace theta
