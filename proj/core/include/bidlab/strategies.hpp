#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bidlab/price_model.hpp"
#include "bidlab/sequential_mdp.hpp"
#include "bidlab/simultaneous.hpp"
#include "bidlab/valuation.hpp"

namespace bidlab {

enum class StrategyKind {
  MU,                 ///< marginal utility at expected prices
  ExpectedMU,         ///< expected marginal utility
  EVMethod,           ///< expected value method: all-or-nothing bids
  EVMU,               ///< expected value completion, then marginal utilities
  SAAPolicySearch,    ///< sampled candidate generation plus evaluation
  SAAExact,           ///< stochastic program on a sampled scenario subset
  SequentialOptimal,  ///< backward-induction bids (sequential auctions only)
};

/// How candidate policies and expectations are scored.
enum class Scoring {
  Auto,     ///< exact when the scenario count is within `exact_cap`, sampled otherwise
  Exact,
  Sampled,
};

struct StrategySpec {
  StrategyKind kind = StrategyKind::MU;
  int n_gen = 50;
  int n_eval = 50;
  std::uint64_t seed = 0;
  Scoring scoring = Scoring::Auto;
  std::size_t exact_cap = 4096;
};

/// Config names: mu, xmu, ev, evmu, saa-ps, saa-exact, seq-opt.
std::string_view strategy_name(StrategyKind kind);
std::optional<StrategyKind> parse_strategy_kind(std::string_view name);
void validate(const StrategySpec& spec);

/// For each x in the market: μ(x, X, market ∖ {x}, p).
BidVector bid_mu(std::span<const Money> prices, const Valuation& v, const BiddingContext& ctx);

/// For each x in the market: μ̄(x, X, market ∖ {x}), floored to whole minor units.
BidVector bid_expected_mu(std::span<const Scenario> scenarios, const Valuation& v, const BiddingContext& ctx);
BidVector bid_expected_mu(const PriceModel& m, const Valuation& v, const BiddingContext& ctx,
                          std::size_t cap = kDefaultScenarioCap);

BidVector bid_ev_method(const PriceModel& m, const Valuation& v, const BiddingContext& ctx);

/// Completion at expected prices picks A*; bid μ(x, X, A* ∖ {x}, p̄) on A*, 0 elsewhere.
BidVector bid_evmu(const PriceModel& m, const Valuation& v, const BiddingContext& ctx);

/// Completion at `prices` picks A*; marginal utilities on A* at those prices.
BidVector completion_mu_bids(std::span<const Money> prices, const Valuation& v, const BiddingContext& ctx);

struct PolicySearchResult {
  BidVector bids;
  double score = 0;              ///< estimated (or exact) expected utility of `bids`
  std::optional<Rational> exact; ///< set when candidates were scored exactly
  std::size_t candidates = 0;    ///< distinct candidates evaluated
};

/// Generate-and-test: n_gen sampled candidates (sample prices, complete, bid
/// marginal utilities), plus the MU, expected-MU, EV and EVMU vectors. Each
/// candidate is scored exactly or on n_eval shared samples; the first best wins.
PolicySearchResult saa_policy_search(const PriceModel& m, const Valuation& v, const BiddingContext& ctx,
                                     const StrategySpec& spec);
BidVector bid_saa_policy_search(const PriceModel& m, const Valuation& v, const BiddingContext& ctx, int n_gen,
                                int n_eval, std::uint64_t seed, Scoring scoring = Scoring::Auto);

/// Sample n_eval scenarios and solve the stochastic program on that subset.
BidVector bid_saa_exact(const PriceModel& m, const Valuation& v, const BiddingContext& ctx, int n_eval,
                        std::uint64_t seed);

Money bid_sequential_optimal(MdpState state, const ValueTable& values);

/// Dispatches a simultaneous-bidding strategy. SequentialOptimal is rejected here;
/// sequential games drive it through the value table.
BidVector compute_bids(const StrategySpec& spec, const PriceModel& m, const Valuation& v, const BiddingContext& ctx);

}  // namespace bidlab
