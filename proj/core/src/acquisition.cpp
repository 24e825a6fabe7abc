#include "bidlab/acquisition.hpp"

#include <string>

#include "bidlab/errors.hpp"

namespace bidlab {

namespace {

void check_prices(std::span<const Money> prices, const Valuation& v) {
  if (static_cast<int>(prices.size()) != v.size()) {
    throw InvalidArgument("price vector has " + std::to_string(prices.size()) + " entries for " +
                          std::to_string(v.size()) + " items");
  }
}

void check_disjoint(GoodSet holdings, GoodSet market, const Valuation& v) {
  if (holdings.intersects(market)) throw OverlapError("holdings and market overlap");
  if (!(holdings | market).subset_of(v.universe())) throw InvalidArgument("goods outside the valuation universe");
}

void check_outside(GoodId x, GoodSet holdings, GoodSet market, const Valuation& v) {
  if (x < 0 || x >= v.size()) throw InvalidArgument("good index out of range");
  if ((holdings | market).contains(x)) throw MembershipError("good " + std::to_string(x) + " is already in X ∪ Y");
}

Money cost_of(GoodSet set, std::span<const Money> prices) {
  Money total = 0;
  for (GoodId i : set) total += prices[static_cast<std::size_t>(i)];
  return total;
}

}  // namespace

AcquisitionResult solve_acquisition(GoodSet holdings, GoodSet market, std::span<const Money> prices,
                                    const Valuation& v) {
  check_prices(prices, v);
  check_disjoint(holdings, market, v);
  AcquisitionResult best{v(GoodSet{}), GoodSet{}};
  for_each_subset(holdings | market, [&](GoodSet z) {
    const Money value = v(z) - cost_of(z & market, prices);
    if (value > best.value) best = {value, z};
  });
  return best;
}

Money acquisition_value(GoodSet holdings, GoodSet market, std::span<const Money> prices, const Valuation& v) {
  check_prices(prices, v);
  check_disjoint(holdings, market, v);
  // Prices are nonnegative, so buying a superset of what gets used never helps;
  // the disposal closure of X ∪ Z covers the choice of which held goods to keep.
  Money best = v.disposal_value(holdings);
  for_each_subset(market, [&](GoodSet z) {
    const Money value = v.disposal_value(holdings | z) - cost_of(z, prices);
    if (value > best) best = value;
  });
  return best;
}

Money marginal_utility(GoodId x, GoodSet holdings, GoodSet market, std::span<const Money> prices,
                       const Valuation& v) {
  check_outside(x, holdings, market, v);
  return acquisition_value(holdings.with(x), market, prices, v) - acquisition_value(holdings, market, prices, v);
}

Rational expected_acquisition(GoodSet holdings, GoodSet market, std::span<const Scenario> scenarios,
                              const Valuation& v) {
  check_disjoint(holdings, market, v);
  Rational total = 0;
  for (const auto& s : scenarios) total += s.prob * acquisition_value(holdings, market, s.prices, v);
  return total;
}

Rational expected_acquisition(GoodSet holdings, GoodSet market, const PriceModel& m, const Valuation& v,
                              std::size_t cap) {
  check_disjoint(holdings, market, v);
  return expected_acquisition(holdings, market, enumerate_scenarios(m, market, cap), v);
}

Rational expected_marginal_utility(GoodId x, GoodSet holdings, GoodSet market,
                                   std::span<const Scenario> scenarios, const Valuation& v) {
  check_outside(x, holdings, market, v);
  Rational total = 0;
  for (const auto& s : scenarios) {
    total += s.prob * (acquisition_value(holdings.with(x), market, s.prices, v) -
                       acquisition_value(holdings, market, s.prices, v));
  }
  return total;
}

Rational expected_marginal_utility(GoodId x, GoodSet holdings, GoodSet market, const PriceModel& m,
                                   const Valuation& v, std::size_t cap) {
  check_outside(x, holdings, market, v);
  return expected_marginal_utility(x, holdings, market, enumerate_scenarios(m, market, cap), v);
}

}  // namespace bidlab
