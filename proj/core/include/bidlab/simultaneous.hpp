#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bidlab/goods.hpp"
#include "bidlab/money.hpp"
#include "bidlab/price_model.hpp"
#include "bidlab/valuation.hpp"

namespace bidlab {

/// One bid per item (good copy). Entries outside the market are ignored.
using BidVector = std::vector<Money>;

/// What the bidder already owns and which items are on offer.
struct BiddingContext {
  GoodSet holdings;
  GoodSet market;

  /// Nothing held, everything for sale.
  static BiddingContext everything(int items) { return {GoodSet{}, GoodSet::universe(items)}; }
};

struct BundleAssignment {
  int bundle = 0;
  GoodSet items;
};

/// Items put to use after the auctions clear. Table valuations report only
/// `used`; bundle valuations also list which copies serve which bundle.
struct Allocation {
  GoodSet used;
  std::vector<BundleAssignment> bundles;
};

struct AllocationResult {
  Money value = 0;
  Allocation allocation;
};

struct PayoffResult {
  Money payoff = 0;
  GoodSet won;
  Money cost = 0;
  Allocation allocation;
};

struct CompletionResult {
  Money value = 0;
  GoodSet buy;
};

struct StochasticSolution {
  BidVector bids;
  Rational value;
  std::vector<std::pair<Scenario, Money>> per_scenario;
};

struct SolverLimits {
  std::size_t scenario_cap = kDefaultScenarioCap;
  std::size_t candidate_cap = 1'000'000;
};

/// Best exclusive assignment of the won copies (plus anything held) to bundles.
AllocationResult solve_allocation(GoodSet won, const Valuation& v);

/// Winners pay the scenario price on every market item with price <= bid.
/// Held items join the allocation for free.
PayoffResult scenario_payoff(std::span<const Money> bids, const Scenario& s, const Valuation& v,
                             const BiddingContext& ctx);
PayoffResult scenario_payoff(std::span<const Money> bids, const Scenario& s, const Valuation& v);

/// Payoff value only (no allocation detail).
Money payoff_value(std::span<const Money> bids, std::span<const Money> prices, const Valuation& v,
                   const BiddingContext& ctx);

/// Deterministic bidding problem: which market items to buy at known prices.
/// Ties prefer fewer items, then the smaller mask.
CompletionResult solve_completion(std::span<const Money> prices, const Valuation& v, const BiddingContext& ctx);
CompletionResult solve_completion(std::span<const Money> prices, const Valuation& v);

Rational expected_utility_of_bids(std::span<const Money> bids, std::span<const Scenario> scenarios,
                                  const Valuation& v, const BiddingContext& ctx);
Rational expected_utility_of_bids(std::span<const Money> bids, const PriceModel& m, const Valuation& v,
                                  const BiddingContext& ctx, std::size_t cap = kDefaultScenarioCap);
Rational expected_utility_of_bids(std::span<const Money> bids, const PriceModel& m, const Valuation& v);

/// Exact here-and-now optimum over the per-item grid {0} ∪ support. Ties go to
/// the lexicographically smallest bid vector. Throws CandidateExplosion when
/// the grid product exceeds the cap.
StochasticSolution solve_stochastic_program(std::span<const Scenario> scenarios, const Valuation& v,
                                            const BiddingContext& ctx, std::size_t candidate_cap = 1'000'000);
StochasticSolution solve_stochastic_program(const PriceModel& m, const Valuation& v, const BiddingContext& ctx,
                                            const SolverLimits& limits = {});
StochasticSolution solve_stochastic_program(const PriceModel& m, const Valuation& v);

/// Stand-in for an unbounded bid: one more than any price the model can produce.
Money max_bid(const PriceModel& m);

/// Expected value method: complete at expected prices, bid max_bid on the
/// chosen items and 0 elsewhere.
BidVector ev_method_bids(const PriceModel& m, const Valuation& v, const BiddingContext& ctx);

/// Stochastic program optimum minus the expected utility of the EV-method bids.
Rational value_of_stochastic_information(const PriceModel& m, const Valuation& v, const BiddingContext& ctx,
                                         const SolverLimits& limits = {});
Rational value_of_stochastic_information(const PriceModel& m, const Valuation& v);

}  // namespace bidlab
