#include "bidlab/strategies.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "bidlab/acquisition.hpp"
#include "bidlab/errors.hpp"
#include "scenario_weights.hpp"

namespace bidlab {

namespace {

constexpr std::array<std::pair<StrategyKind, std::string_view>, 7> kNames{{
    {StrategyKind::MU, "mu"},
    {StrategyKind::ExpectedMU, "xmu"},
    {StrategyKind::EVMethod, "ev"},
    {StrategyKind::EVMU, "evmu"},
    {StrategyKind::SAAPolicySearch, "saa-ps"},
    {StrategyKind::SAAExact, "saa-exact"},
    {StrategyKind::SequentialOptimal, "seq-opt"},
}};

bool use_exact(const PriceModel& m, const BiddingContext& ctx, Scoring scoring, std::size_t cap) {
  switch (scoring) {
    case Scoring::Exact: return true;
    case Scoring::Sampled: return false;
    case Scoring::Auto: return m.scenario_count(ctx.market) <= cap;
  }
  return false;
}

/// Scenarios used for expectations: the exact enumeration, or n_eval samples.
std::vector<Scenario> expectation_scenarios(const PriceModel& m, const BiddingContext& ctx,
                                            const StrategySpec& spec, Rng& rng) {
  if (use_exact(m, ctx, spec.scoring, spec.exact_cap)) return enumerate_scenarios(m, ctx.market);
  return sample_scenarios(m, rng, spec.n_eval);
}

}  // namespace

std::string_view strategy_name(StrategyKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<StrategyKind> parse_strategy_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

void validate(const StrategySpec& spec) {
  if (spec.n_gen < 1) throw InvalidArgument("n_gen must be >= 1");
  if (spec.n_eval < 1) throw InvalidArgument("n_eval must be >= 1");
}

BidVector bid_mu(std::span<const Money> prices, const Valuation& v, const BiddingContext& ctx) {
  BidVector bids(static_cast<std::size_t>(v.size()), 0);
  for (GoodId x : ctx.market) {
    bids[static_cast<std::size_t>(x)] = marginal_utility(x, ctx.holdings, ctx.market.without(x), prices, v);
  }
  return bids;
}

BidVector bid_expected_mu(std::span<const Scenario> scenarios, const Valuation& v, const BiddingContext& ctx) {
  BidVector bids(static_cast<std::size_t>(v.size()), 0);
  const auto w = detail::ScenarioWeights::from(scenarios);
  for (GoodId x : ctx.market) {
    const GoodSet rest = ctx.market.without(x);
    Rational mu;
    if (w.exact) {
      detail::Int128 total = 0;
      for (std::size_t k = 0; k < scenarios.size(); ++k) {
        total += static_cast<detail::Int128>(w.weight[k]) *
                 marginal_utility(x, ctx.holdings, rest, scenarios[k].prices, v);
      }
      mu = detail::weighted_ratio(total, w.denominator);
    } else {
      mu = expected_marginal_utility(x, ctx.holdings, rest, scenarios, v);
    }
    bids[static_cast<std::size_t>(x)] = std::max<Money>(0, floor_money(mu));
  }
  return bids;
}

BidVector bid_expected_mu(const PriceModel& m, const Valuation& v, const BiddingContext& ctx, std::size_t cap) {
  return bid_expected_mu(enumerate_scenarios(m, ctx.market, cap), v, ctx);
}

BidVector bid_ev_method(const PriceModel& m, const Valuation& v, const BiddingContext& ctx) {
  return ev_method_bids(m, v, ctx);
}

BidVector completion_mu_bids(std::span<const Money> prices, const Valuation& v, const BiddingContext& ctx) {
  const CompletionResult completion = solve_completion(prices, v, ctx);
  return bid_mu(prices, v, {ctx.holdings, completion.buy});
}

BidVector bid_evmu(const PriceModel& m, const Valuation& v, const BiddingContext& ctx) {
  return completion_mu_bids(expected_prices(m), v, ctx);
}

PolicySearchResult saa_policy_search(const PriceModel& m, const Valuation& v, const BiddingContext& ctx,
                                     const StrategySpec& spec) {
  validate(spec);
  Rng generate(derive_seed(spec.seed, 0));
  Rng evaluate(derive_seed(spec.seed, 1));

  std::vector<BidVector> candidates;
  auto add = [&](BidVector b) {
    if (std::find(candidates.begin(), candidates.end(), b) == candidates.end()) candidates.push_back(std::move(b));
  };
  for (int k = 0; k < spec.n_gen; ++k) {
    const Scenario s = sample_scenario(m, generate);
    add(completion_mu_bids(s.prices, v, ctx));
  }

  const bool exact = use_exact(m, ctx, spec.scoring, spec.exact_cap);
  const std::vector<Scenario> scoring =
      exact ? enumerate_scenarios(m, ctx.market) : sample_scenarios(m, evaluate, spec.n_eval);

  add(bid_mu(expected_prices(m), v, ctx));
  add(bid_expected_mu(exact ? scoring : expectation_scenarios(m, ctx, spec, evaluate), v, ctx));
  add(bid_ev_method(m, v, ctx));
  add(bid_evmu(m, v, ctx));

  const auto w = detail::ScenarioWeights::from(scoring);
  PolicySearchResult out;
  out.candidates = candidates.size();
  std::size_t best = 0;
  Rational best_value;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Rational value;
    if (w.exact) {
      detail::Int128 total = 0;
      for (std::size_t k = 0; k < scoring.size(); ++k) {
        total += static_cast<detail::Int128>(w.weight[k]) * payoff_value(candidates[c], scoring[k].prices, v, ctx);
      }
      value = detail::weighted_ratio(total, w.denominator);
    } else {
      value = expected_utility_of_bids(candidates[c], scoring, v, ctx);
    }
    if (c == 0 || value > best_value) {
      best = c;
      best_value = std::move(value);
    }
  }
  out.bids = candidates[best];
  out.score = to_double(best_value);
  if (exact) out.exact = best_value;
  return out;
}

BidVector bid_saa_policy_search(const PriceModel& m, const Valuation& v, const BiddingContext& ctx, int n_gen,
                                int n_eval, std::uint64_t seed, Scoring scoring) {
  StrategySpec spec;
  spec.kind = StrategyKind::SAAPolicySearch;
  spec.n_gen = n_gen;
  spec.n_eval = n_eval;
  spec.seed = seed;
  spec.scoring = scoring;
  return saa_policy_search(m, v, ctx, spec).bids;
}

BidVector bid_saa_exact(const PriceModel& m, const Valuation& v, const BiddingContext& ctx, int n_eval,
                        std::uint64_t seed) {
  if (n_eval < 1) throw InvalidArgument("n_eval must be >= 1");
  Rng rng(derive_seed(seed, 2));
  const auto sampled = sample_scenarios(m, rng, n_eval);
  // Merge identical draws so the grid search sees each scenario once.
  std::vector<Scenario> merged;
  for (const auto& s : sampled) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Scenario& t) { return t.prices == s.prices; });
    if (it == merged.end()) {
      merged.push_back(s);
    } else {
      it->prob += s.prob;
    }
  }
  return solve_stochastic_program(merged, v, ctx).bids;
}

Money bid_sequential_optimal(MdpState state, const ValueTable& values) { return optimal_bid(state, values); }

BidVector compute_bids(const StrategySpec& spec, const PriceModel& m, const Valuation& v, const BiddingContext& ctx) {
  validate(spec);
  switch (spec.kind) {
    case StrategyKind::MU: return bid_mu(expected_prices(m), v, ctx);
    case StrategyKind::ExpectedMU: {
      Rng rng(derive_seed(spec.seed, 3));
      return bid_expected_mu(expectation_scenarios(m, ctx, spec, rng), v, ctx);
    }
    case StrategyKind::EVMethod: return bid_ev_method(m, v, ctx);
    case StrategyKind::EVMU: return bid_evmu(m, v, ctx);
    case StrategyKind::SAAPolicySearch: return saa_policy_search(m, v, ctx, spec).bids;
    case StrategyKind::SAAExact: return bid_saa_exact(m, v, ctx, spec.n_eval, spec.seed);
    case StrategyKind::SequentialOptimal:
      throw InvalidArgument("seq-opt bids through a sequential value table, not a simultaneous bid vector");
  }
  throw InvalidArgument("unknown strategy");
}

}  // namespace bidlab
