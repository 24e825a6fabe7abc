#include "bidlab/simultaneous.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bidlab/errors.hpp"
#include "scenario_weights.hpp"

namespace bidlab {

namespace detail {

boost::multiprecision::cpp_int to_cpp_int(Int128 v) {
  const bool negative = v < 0;
  detail::UInt128 u = negative ? static_cast<detail::UInt128>(-(v + 1)) + 1 : static_cast<detail::UInt128>(v);
  boost::multiprecision::cpp_int out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return negative ? boost::multiprecision::cpp_int(-out) : out;
}

ScenarioWeights ScenarioWeights::from(std::span<const Scenario> scenarios) {
  using boost::multiprecision::cpp_int;
  ScenarioWeights w;
  cpp_int common = 1;
  const cpp_int limit = cpp_int(1) << 62;
  for (const auto& s : scenarios) {
    const cpp_int& d = boost::multiprecision::denominator(s.prob);
    common = common / gcd(common, d) * d;
    if (common > limit) return w;
  }
  w.denominator = common.convert_to<std::int64_t>();
  w.weight.reserve(scenarios.size());
  for (const auto& s : scenarios) {
    const cpp_int scaled = boost::multiprecision::numerator(s.prob) * (common / boost::multiprecision::denominator(s.prob));
    if (scaled > limit) return ScenarioWeights{};
    w.weight.push_back(scaled.convert_to<std::int64_t>());
  }
  w.exact = true;
  return w;
}

}  // namespace detail

namespace {

void check_context(const Valuation& v, const BiddingContext& ctx) {
  if (ctx.holdings.intersects(ctx.market)) throw OverlapError("holdings and market overlap");
  if (!(ctx.holdings | ctx.market).subset_of(v.universe())) {
    throw InvalidArgument("bidding context names items outside the valuation universe");
  }
}

void check_length(std::size_t got, const Valuation& v, const char* what) {
  if (static_cast<int>(got) != v.size()) {
    throw InvalidArgument(std::string(what) + " has " + std::to_string(got) + " entries for " +
                          std::to_string(v.size()) + " items");
  }
}

GoodSet winners(std::span<const Money> bids, std::span<const Money> prices, GoodSet market) {
  GoodSet won;
  for (GoodId i : market) {
    if (prices[static_cast<std::size_t>(i)] <= bids[static_cast<std::size_t>(i)]) won = won.with(i);
  }
  return won;
}

Money cost_of(GoodSet set, std::span<const Money> prices) {
  Money total = 0;
  for (GoodId i : set) total += prices[static_cast<std::size_t>(i)];
  return total;
}

}  // namespace

AllocationResult solve_allocation(GoodSet won, const Valuation& v) {
  if (!won.subset_of(v.universe())) throw InvalidArgument("winnings outside the valuation universe");
  AllocationResult out;
  if (!v.has_bundles()) {
    out.value = v.disposal_value(won);
    out.allocation.used = v.disposal_choice(won);
    return out;
  }
  const auto& item_goods = v.item_goods();
  const int goods = item_goods.empty() ? 0 : *std::max_element(item_goods.begin(), item_goods.end()) + 1;
  std::vector<int> counts(static_cast<std::size_t>(goods), 0);
  for (GoodId i : won) ++counts[static_cast<std::size_t>(item_goods[static_cast<std::size_t>(i)])];
  const BundleSelection selection = select_bundles(counts, v.bundles());
  out.value = selection.value;
  GoodSet free = won;
  for (int b : selection.bundles) {
    BundleAssignment assignment{b, GoodSet{}};
    for (const auto& req : v.bundles()[static_cast<std::size_t>(b)].requirements) {
      int need = req.copies;
      for (GoodId i : free) {
        if (need == 0) break;
        if (item_goods[static_cast<std::size_t>(i)] == req.good) {
          assignment.items = assignment.items.with(i);
          --need;
        }
      }
      free = free - assignment.items;
    }
    out.allocation.used = out.allocation.used | assignment.items;
    out.allocation.bundles.push_back(assignment);
  }
  return out;
}

PayoffResult scenario_payoff(std::span<const Money> bids, const Scenario& s, const Valuation& v,
                             const BiddingContext& ctx) {
  check_length(bids.size(), v, "bid vector");
  check_length(s.prices.size(), v, "scenario");
  check_context(v, ctx);
  PayoffResult out;
  out.won = winners(bids, s.prices, ctx.market);
  out.cost = cost_of(out.won, s.prices);
  AllocationResult alloc = solve_allocation(ctx.holdings | out.won, v);
  out.payoff = alloc.value - out.cost;
  out.allocation = std::move(alloc.allocation);
  return out;
}

PayoffResult scenario_payoff(std::span<const Money> bids, const Scenario& s, const Valuation& v) {
  return scenario_payoff(bids, s, v, BiddingContext::everything(v.size()));
}

Money payoff_value(std::span<const Money> bids, std::span<const Money> prices, const Valuation& v,
                   const BiddingContext& ctx) {
  const GoodSet won = winners(bids, prices, ctx.market);
  return v.disposal_value(ctx.holdings | won) - cost_of(won, prices);
}

CompletionResult solve_completion(std::span<const Money> prices, const Valuation& v, const BiddingContext& ctx) {
  check_length(prices.size(), v, "price vector");
  check_context(v, ctx);
  CompletionResult best{v.disposal_value(ctx.holdings), GoodSet{}};
  for_each_subset(ctx.market, [&](GoodSet buy) {
    const Money value = v.disposal_value(ctx.holdings | buy) - cost_of(buy, prices);
    if (value > best.value || (value == best.value && buy.size() < best.buy.size())) best = {value, buy};
  });
  return best;
}

CompletionResult solve_completion(std::span<const Money> prices, const Valuation& v) {
  return solve_completion(prices, v, BiddingContext::everything(v.size()));
}

Rational expected_utility_of_bids(std::span<const Money> bids, std::span<const Scenario> scenarios,
                                  const Valuation& v, const BiddingContext& ctx) {
  check_length(bids.size(), v, "bid vector");
  check_context(v, ctx);
  const auto w = detail::ScenarioWeights::from(scenarios);
  if (w.exact) {
    detail::Int128 total = 0;
    for (std::size_t k = 0; k < scenarios.size(); ++k) {
      check_length(scenarios[k].prices.size(), v, "scenario");
      total += static_cast<detail::Int128>(w.weight[k]) * payoff_value(bids, scenarios[k].prices, v, ctx);
    }
    return detail::weighted_ratio(total, w.denominator);
  }
  Rational total = 0;
  for (const auto& s : scenarios) {
    check_length(s.prices.size(), v, "scenario");
    total += s.prob * payoff_value(bids, s.prices, v, ctx);
  }
  return total;
}

Rational expected_utility_of_bids(std::span<const Money> bids, const PriceModel& m, const Valuation& v,
                                  const BiddingContext& ctx, std::size_t cap) {
  return expected_utility_of_bids(bids, enumerate_scenarios(m, ctx.market, cap), v, ctx);
}

Rational expected_utility_of_bids(std::span<const Money> bids, const PriceModel& m, const Valuation& v) {
  return expected_utility_of_bids(bids, m, v, BiddingContext::everything(v.size()));
}

StochasticSolution solve_stochastic_program(std::span<const Scenario> scenarios, const Valuation& v,
                                            const BiddingContext& ctx, std::size_t candidate_cap) {
  check_context(v, ctx);
  if (scenarios.empty()) throw InvalidArgument("stochastic program over no scenarios");
  for (const auto& s : scenarios) check_length(s.prices.size(), v, "scenario");

  // Per-item candidate grid: {0} ∪ every price the item takes.
  std::vector<GoodId> items(ctx.market.begin(), ctx.market.end());
  std::vector<std::vector<Money>> grid;
  std::size_t product = 1;
  for (GoodId i : items) {
    std::vector<Money> g{0};
    for (const auto& s : scenarios) g.push_back(s.prices[static_cast<std::size_t>(i)]);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (product > candidate_cap / g.size()) {
      throw CandidateExplosion("bid grid exceeds the candidate cap of " + std::to_string(candidate_cap));
    }
    product *= g.size();
    grid.push_back(std::move(g));
  }

  const auto w = detail::ScenarioWeights::from(scenarios);
  BidVector bids(static_cast<std::size_t>(v.size()), 0);
  auto score = [&](const BidVector& b) -> Rational {
    if (!w.exact) {
      Rational total = 0;
      for (const auto& s : scenarios) total += s.prob * payoff_value(b, s.prices, v, ctx);
      return total;
    }
    detail::Int128 total = 0;
    for (std::size_t k = 0; k < scenarios.size(); ++k) {
      total += static_cast<detail::Int128>(w.weight[k]) * payoff_value(b, scenarios[k].prices, v, ctx);
    }
    return detail::weighted_ratio(total, w.denominator);
  };
  auto score_numerator = [&](const BidVector& b) -> detail::Int128 {
    detail::Int128 total = 0;
    for (std::size_t k = 0; k < scenarios.size(); ++k) {
      total += static_cast<detail::Int128>(w.weight[k]) * payoff_value(b, scenarios[k].prices, v, ctx);
    }
    return total;
  };

  // Odometer with the last market item fastest: lexicographic order over bid vectors.
  std::vector<std::size_t> digit(items.size(), 0);
  BidVector best_bids = bids;
  Rational best_value;
  detail::Int128 best_numerator = std::numeric_limits<detail::Int128>::min();
  bool first = true;
  while (true) {
    for (std::size_t k = 0; k < items.size(); ++k) bids[static_cast<std::size_t>(items[k])] = grid[k][digit[k]];
    if (w.exact) {
      const detail::Int128 value = score_numerator(bids);
      if (first || value > best_numerator) {
        best_numerator = value;
        best_bids = bids;
      }
    } else {
      Rational value = score(bids);
      if (first || value > best_value) {
        best_value = std::move(value);
        best_bids = bids;
      }
    }
    first = false;
    std::size_t k = items.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++digit[k] < grid[k].size()) {
        done = false;
        break;
      }
      digit[k] = 0;
    }
    if (done) break;
  }

  StochasticSolution out;
  out.bids = best_bids;
  out.value = w.exact ? detail::weighted_ratio(best_numerator, w.denominator) : best_value;
  out.per_scenario.reserve(scenarios.size());
  for (const auto& s : scenarios) out.per_scenario.emplace_back(s, payoff_value(best_bids, s.prices, v, ctx));
  return out;
}

StochasticSolution solve_stochastic_program(const PriceModel& m, const Valuation& v, const BiddingContext& ctx,
                                            const SolverLimits& limits) {
  return solve_stochastic_program(enumerate_scenarios(m, ctx.market, limits.scenario_cap), v, ctx,
                                  limits.candidate_cap);
}

StochasticSolution solve_stochastic_program(const PriceModel& m, const Valuation& v) {
  return solve_stochastic_program(m, v, BiddingContext::everything(v.size()));
}

Money max_bid(const PriceModel& m) { return m.max_price() + 1; }

BidVector ev_method_bids(const PriceModel& m, const Valuation& v, const BiddingContext& ctx) {
  const auto prices = expected_prices(m);
  const CompletionResult completion = solve_completion(prices, v, ctx);
  BidVector bids(static_cast<std::size_t>(v.size()), 0);
  const Money top = max_bid(m);
  for (GoodId i : completion.buy) bids[static_cast<std::size_t>(i)] = top;
  return bids;
}

Rational value_of_stochastic_information(const PriceModel& m, const Valuation& v, const BiddingContext& ctx,
                                         const SolverLimits& limits) {
  const auto scenarios = enumerate_scenarios(m, ctx.market, limits.scenario_cap);
  const StochasticSolution sp = solve_stochastic_program(scenarios, v, ctx, limits.candidate_cap);
  return sp.value - expected_utility_of_bids(ev_method_bids(m, v, ctx), scenarios, v, ctx);
}

Rational value_of_stochastic_information(const PriceModel& m, const Valuation& v) {
  return value_of_stochastic_information(m, v, BiddingContext::everything(v.size()));
}

}  // namespace bidlab
