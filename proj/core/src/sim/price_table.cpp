#include "bidlab/sim/price_table.hpp"

#include <algorithm>
#include <cmath>

#include "bidlab/errors.hpp"

namespace bidlab::sim {

std::vector<double> default_percentile_levels() {
  std::vector<double> levels;
  for (int p = 5; p < 100; p += 10) levels.push_back(p);
  return levels;
}

PercentilePriceTable PercentilePriceTable::flat(int goods, std::vector<double> levels, Money price) {
  PercentilePriceTable t;
  t.prices.assign(static_cast<std::size_t>(goods), std::vector<Money>(levels.size(), price));
  t.levels = std::move(levels);
  t.validate();
  return t;
}

void PercentilePriceTable::validate() const {
  if (levels.empty()) throw InvalidArgument("percentile table needs at least one level");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (!(levels[k] > 0 && levels[k] < 100)) throw InvalidArgument("percentile levels must lie in (0, 100)");
    if (k > 0 && levels[k] <= levels[k - 1]) throw InvalidArgument("percentile levels must be strictly increasing");
  }
  for (const auto& row : prices) {
    if (row.size() != levels.size()) throw InvalidArgument("percentile row length differs from the level count");
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 0) throw InvalidArgument("percentile prices must be nonnegative");
      if (k > 0 && row[k] < row[k - 1]) throw InvalidArgument("percentile prices must be nondecreasing");
    }
  }
}

PriceDistribution PercentilePriceTable::distribution(int good, Money floor) const {
  std::vector<Money> atoms = prices.at(static_cast<std::size_t>(good));
  for (Money& p : atoms) p = std::max(p, floor);
  return PriceDistribution::uniform(std::move(atoms));
}

PriceModel PercentilePriceTable::model(std::vector<int> item_goods, std::span<const Money> floors) const {
  std::vector<PriceDistribution> dists;
  for (int g = 0; g < goods(); ++g) {
    dists.push_back(distribution(g, floors.empty() ? 0 : floors[static_cast<std::size_t>(g)]));
  }
  return PriceModel::per_good(std::move(item_goods), std::move(dists));
}

nlohmann::json PercentilePriceTable::to_json() const {
  return nlohmann::json{{"levels", levels}, {"prices", prices}};
}

PercentilePriceTable PercentilePriceTable::from_json(const nlohmann::json& j) {
  PercentilePriceTable t;
  t.levels = j.at("levels").get<std::vector<double>>();
  t.prices = j.at("prices").get<std::vector<std::vector<Money>>>();
  t.validate();
  return t;
}

Money nearest_rank_percentile(std::vector<Money> sample, double level) {
  if (sample.empty()) throw InvalidArgument("percentile of an empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  auto rank = static_cast<long long>(std::ceil(level / 100.0 * n - 1e-9));
  rank = std::clamp<long long>(rank, 1, static_cast<long long>(sample.size()));
  return sample[static_cast<std::size_t>(rank - 1)];
}

PercentilePriceTable train_price_table(const std::vector<std::vector<Money>>& observed, std::vector<double> levels,
                                       Money prior) {
  PercentilePriceTable t;
  t.levels = std::move(levels);
  for (const auto& sample : observed) {
    std::vector<Money> row;
    for (double level : t.levels) row.push_back(sample.empty() ? prior : nearest_rank_percentile(sample, level));
    t.prices.push_back(std::move(row));
  }
  t.validate();
  return t;
}

}  // namespace bidlab::sim
