#include "bidlab/sequential_mdp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bidlab/errors.hpp"

namespace bidlab {

template <typename T>
std::size_t StageTable<T>::local(MdpState s) const {
  if (s.stage < 0 || s.stage > stages()) throw InvalidArgument("stage out of range");
  std::size_t idx = 0;
  GoodSet seen;
  for (int k = 0; k < s.stage; ++k) {
    const GoodId g = order_[static_cast<std::size_t>(k)];
    seen = seen.with(g);
    if (s.holdings.contains(g)) idx |= std::size_t{1} << k;
  }
  if (!s.holdings.subset_of(seen)) throw InvalidArgument("holdings contain goods not yet auctioned");
  return idx;
}

template class StageTable<Rational>;
template class StageTable<Money>;

namespace {

std::vector<PriceDistribution> ordered_marginals(const PriceModel& m, const std::vector<GoodId>& order, int n) {
  auto marginals = m.independent_marginals();
  if (!marginals) throw InvalidArgument("sequential auctions need independent item prices");
  if (m.item_count() != n) throw InvalidArgument("price model and valuation disagree on the number of items");
  std::vector<GoodId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != natural_order(n)) throw InvalidArgument("auction order must be a permutation of the goods");
  std::vector<PriceDistribution> out;
  for (GoodId g : order) out.push_back((*marginals)[static_cast<std::size_t>(g)]);
  return out;
}

}  // namespace

std::vector<GoodId> natural_order(int n) {
  std::vector<GoodId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

Money stage_reward(MdpState, Money bid, Money price) { return price <= bid ? -price : 0; }

Rational q_value(MdpState state, Money bid, const ValueTable& values, const PriceDistribution& next_prices) {
  if (state.stage >= values.stages()) throw InvalidArgument("terminal states take no bids");
  const GoodId next = values.order()[static_cast<std::size_t>(state.stage)];
  const Rational win = next_prices.cdf(bid);
  const Rational& with = values.at({state.holdings.with(next), state.stage + 1});
  const Rational& without = values.at({state.holdings, state.stage + 1});
  return -next_prices.expected_payment(bid) + win * with + (1 - win) * without;
}

ValueTable backward_induction(const Valuation& v, const PriceModel& m, std::vector<GoodId> order) {
  const int n = v.size();
  const auto dists = ordered_marginals(m, order, n);
  ValueTable values(std::move(order));
  for (const MdpState& s : values.states(n)) values.at(s) = v(s.holdings);
  for (int j = n - 1; j >= 0; --j) {
    const PriceDistribution& d = dists[static_cast<std::size_t>(j)];
    std::vector<Money> grid{0};
    for (const auto& pt : d.support()) grid.push_back(pt.price);
    for (const MdpState& s : values.states(j)) {
      Rational best = q_value(s, grid.front(), values, d);
      for (std::size_t k = 1; k < grid.size(); ++k) best = std::max(best, q_value(s, grid[k], values, d));
      values.at(s) = best;
    }
  }
  return values;
}

Rational optimal_bid_exact(MdpState state, const ValueTable& values) {
  if (state.stage >= values.stages()) throw InvalidArgument("terminal states take no bids");
  const GoodId next = values.order()[static_cast<std::size_t>(state.stage)];
  Rational diff = values.at({state.holdings.with(next), state.stage + 1}) - values.at({state.holdings, state.stage + 1});
  return diff < 0 ? Rational(0) : diff;
}

Money optimal_bid(MdpState state, const ValueTable& values) {
  return floor_money(optimal_bid_exact(state, values));
}

SequentialPolicy optimal_policy(const ValueTable& values) {
  SequentialPolicy policy(values.order(), 0);
  for (int j = 0; j < values.stages(); ++j) {
    for (const MdpState& s : values.states(j)) policy.at(s) = optimal_bid(s, values);
  }
  return policy;
}

Rational evaluate_sequential_policy(const SequentialPolicy& policy, const Valuation& v, const PriceModel& m) {
  const int n = v.size();
  const auto dists = ordered_marginals(m, policy.order(), n);
  ValueTable score(policy.order());
  for (const MdpState& s : score.states(n)) score.at(s) = v(s.holdings);
  for (int j = n - 1; j >= 0; --j) {
    const GoodId next = policy.order()[static_cast<std::size_t>(j)];
    const PriceDistribution& d = dists[static_cast<std::size_t>(j)];
    for (const MdpState& s : score.states(j)) {
      const Money bid = policy.at(s);
      if (bid < 0) throw InvalidArgument("policy bids must be nonnegative");
      Rational total = 0;
      for (const auto& pt : d.support()) {
        total += pt.prob * (pt.price <= bid ? score.at({s.holdings.with(next), j + 1}) - pt.price
                                            : score.at({s.holdings, j + 1}));
      }
      score.at(s) = total;
    }
  }
  return score.at({GoodSet{}, 0});
}

}  // namespace bidlab
