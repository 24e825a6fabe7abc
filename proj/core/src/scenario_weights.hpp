#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bidlab/money.hpp"
#include "bidlab/price_model.hpp"

namespace bidlab::detail {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

/// Scenario probabilities rescaled to integers over one common denominator, so
/// that exact expectations of integer payoffs reduce to 128-bit sums. `exact`
/// is false when the common denominator does not fit in 62 bits.
struct ScenarioWeights {
  std::vector<std::int64_t> weight;
  std::int64_t denominator = 1;
  bool exact = false;

  static ScenarioWeights from(std::span<const Scenario> scenarios);
};

boost::multiprecision::cpp_int to_cpp_int(Int128 v);

inline Rational weighted_ratio(Int128 numerator, std::int64_t denominator) {
  return Rational(to_cpp_int(numerator), boost::multiprecision::cpp_int(denominator));
}

}  // namespace bidlab::detail
