#pragma once

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "bidlab/money.hpp"
#include "bidlab/price_model.hpp"

namespace bidlab::sim {

/// 5, 15, …, 95.
std::vector<double> default_percentile_levels();

/// Per-good clearing-price predictions at fixed percentile levels.
struct PercentilePriceTable {
  std::vector<double> levels;              ///< strictly increasing, inside (0, 100)
  std::vector<std::vector<Money>> prices;  ///< prices[good][level], nondecreasing in level

  static PercentilePriceTable flat(int goods, std::vector<double> levels, Money price);

  int goods() const { return static_cast<int>(prices.size()); }

  /// Throws InvalidArgument on malformed levels or non-monotone prices.
  void validate() const;

  /// Each level becomes an atom of weight 1/#levels; atoms below `floor` are
  /// raised to it.
  PriceDistribution distribution(int good, Money floor = 0) const;

  /// Per-good model for a bidder whose items map to goods via `item_goods`.
  PriceModel model(std::vector<int> item_goods, std::span<const Money> floors = {}) const;

  nlohmann::json to_json() const;
  static PercentilePriceTable from_json(const nlohmann::json& j);
};

/// Nearest-rank percentile of a sample: the value at rank ceil(level/100 · n).
Money nearest_rank_percentile(std::vector<Money> sample, double level);

/// Empirical percentiles of the observed clearing prices, one row per good.
/// Goods without observations get a flat row at `prior`.
PercentilePriceTable train_price_table(const std::vector<std::vector<Money>>& observed,
                                       std::vector<double> levels, Money prior);

}  // namespace bidlab::sim
