#pragma once

#include <span>
#include <vector>

#include "bidlab/goods.hpp"
#include "bidlab/money.hpp"
#include "bidlab/price_model.hpp"
#include "bidlab/valuation.hpp"

namespace bidlab {

/// Optimum of the acquisition problem: the best Z ⊆ holdings ∪ market, paying
/// only for the market goods in Z.
struct AcquisitionResult {
  Money value = 0;
  GoodSet chosen;
};

// Prices are item-indexed vectors of length v.size(); only market entries are read.

/// Exhaustive baseline over every Z ⊆ holdings ∪ market. Ties go to the smallest mask.
/// Throws OverlapError if holdings and market intersect.
AcquisitionResult solve_acquisition(GoodSet holdings, GoodSet market, std::span<const Money> prices,
                                    const Valuation& v);

/// Same value as solve_acquisition, enumerating only the market side and
/// reading held goods through the valuation's disposal closure.
Money acquisition_value(GoodSet holdings, GoodSet market, std::span<const Money> prices, const Valuation& v);

/// α(X ∪ {x}, Y, p) − α(X, Y, p). Throws MembershipError if x ∈ X ∪ Y.
Money marginal_utility(GoodId x, GoodSet holdings, GoodSet market, std::span<const Money> prices,
                       const Valuation& v);

/// E[α(X, Y, p)] over the model's scenarios for the market goods.
Rational expected_acquisition(GoodSet holdings, GoodSet market, const PriceModel& m, const Valuation& v,
                              std::size_t cap = kDefaultScenarioCap);

/// Weighted sum over an explicit scenario list (exact or sampled).
Rational expected_acquisition(GoodSet holdings, GoodSet market, std::span<const Scenario> scenarios,
                              const Valuation& v);

/// ᾱ(X ∪ {x}, Y) − ᾱ(X, Y).
Rational expected_marginal_utility(GoodId x, GoodSet holdings, GoodSet market, const PriceModel& m,
                                   const Valuation& v, std::size_t cap = kDefaultScenarioCap);

Rational expected_marginal_utility(GoodId x, GoodSet holdings, GoodSet market,
                                   std::span<const Scenario> scenarios, const Valuation& v);

}  // namespace bidlab
