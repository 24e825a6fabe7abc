#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bidlab/goods.hpp"
#include "bidlab/money.hpp"
#include "bidlab/price_model.hpp"
#include "bidlab/valuation.hpp"

namespace bidlab {

/// (holdings, stage): `stage` goods of the auction order have been sold and
/// order[stage] is up next. Holdings only contain goods already sold.
struct MdpState {
  GoodSet holdings;
  int stage = 0;

  bool operator==(const MdpState&) const = default;
};

/// Auction order plus per-stage dense storage: stage j has 2^j slots, one per
/// subset of the first j goods in the order.
template <typename T>
class StageTable {
 public:
  StageTable() = default;
  explicit StageTable(std::vector<GoodId> order, T fill = T{}) : order_(std::move(order)) {
    slots_.reserve(order_.size() + 1);
    for (std::size_t j = 0; j <= order_.size(); ++j) slots_.emplace_back(std::size_t{1} << j, fill);
  }

  const std::vector<GoodId>& order() const { return order_; }
  int stages() const { return static_cast<int>(order_.size()); }

  const T& at(MdpState s) const { return slots_.at(static_cast<std::size_t>(s.stage))[local(s)]; }
  T& at(MdpState s) { return slots_.at(static_cast<std::size_t>(s.stage))[local(s)]; }

  /// Every valid state of stage j, in local-index order.
  std::vector<MdpState> states(int stage) const {
    std::vector<MdpState> out;
    const std::size_t count = std::size_t{1} << stage;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      GoodSet x;
      for (int k = 0; k < stage; ++k) {
        if (idx & (std::size_t{1} << k)) x = x.with(order_[static_cast<std::size_t>(k)]);
      }
      out.push_back({x, stage});
    }
    return out;
  }

 private:
  std::size_t local(MdpState s) const;

  std::vector<GoodId> order_;
  std::vector<std::vector<T>> slots_;
};

extern template class StageTable<Rational>;
extern template class StageTable<Money>;

/// V((X, j)) for every state.
using ValueTable = StageTable<Rational>;

/// A bid for every non-terminal state.
using SequentialPolicy = StageTable<Money>;

/// −price if price <= bid, else 0. Requires a stage that sells a good (stage >= 1 in
/// the state-before-sale convention is handled by the caller).
Money stage_reward(MdpState state, Money bid, Money price);

/// R((X,j),b) + F(b)·V((X ∪ {next}, j+1)) + (1 − F(b))·V((X, j+1)), with
/// `next_prices` the distribution of the good order[j].
Rational q_value(MdpState state, Money bid, const ValueTable& values, const PriceDistribution& next_prices);

/// Exact backward induction. Candidate bids per stage are {0} ∪ support of that
/// stage's good, which reaches the supremum of the step function Q(·).
/// Requires independent item prices (throws InvalidArgument otherwise).
ValueTable backward_induction(const Valuation& v, const PriceModel& m, std::vector<GoodId> order);

/// V((X ∪ {next}, j+1)) − V((X, j+1)), clamped at 0.
Rational optimal_bid_exact(MdpState state, const ValueTable& values);

/// Largest integer bid not above optimal_bid_exact; wins the same integer prices.
Money optimal_bid(MdpState state, const ValueTable& values);

SequentialPolicy optimal_policy(const ValueTable& values);

/// Expected v(final holdings) − payments when following `policy`.
Rational evaluate_sequential_policy(const SequentialPolicy& policy, const Valuation& v, const PriceModel& m);

/// The identity order 0, 1, …, n−1.
std::vector<GoodId> natural_order(int n);

}  // namespace bidlab
