#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bidlab {

/// Amount in minor currency units. Solvers never round money.
using Money = std::int64_t;

/// Exact probabilities and expectations.
using Rational = boost::multiprecision::cpp_rational;

/// "891/10", "-1/4", "75".
std::string to_string(const Rational& r);

/// Decimal rendering with `digits` fractional digits (round half away from zero).
std::string to_decimal(const Rational& r, int digits = 4);

double to_double(const Rational& r);

Money floor_money(const Rational& r);

/// Nearest minor unit, ties rounded up (toward +infinity).
Money round_half_up(const Rational& r);

/// Parses "3", "-2", "1/2", "0.9", "1e-1". Throws InvalidArgument.
Rational parse_rational(std::string_view text);

/// Exact value of the shortest decimal that round-trips `x` (0.9 -> 9/10).
Rational rational_from_double(double x);

}  // namespace bidlab
