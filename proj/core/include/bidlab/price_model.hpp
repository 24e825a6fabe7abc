#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "bidlab/goods.hpp"
#include "bidlab/money.hpp"

namespace bidlab {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from 53 random bits.
double uniform01(Rng& rng);

/// Derives an independent stream seed from a master seed and a stream index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

struct PricePoint {
  Money price = 0;
  Rational prob;
};

/// Discrete price distribution of one item: strictly increasing nonnegative
/// prices with positive probabilities summing to exactly 1.
class PriceDistribution {
 public:
  PriceDistribution() : PriceDistribution(deterministic(0)) {}
  explicit PriceDistribution(std::vector<PricePoint> support);

  static PriceDistribution deterministic(Money price);
  /// Equal weights; duplicate prices are merged.
  static PriceDistribution uniform(std::vector<Money> prices);

  const std::vector<PricePoint>& support() const { return support_; }
  Money min_price() const { return support_.front().price; }
  Money max_price() const { return support_.back().price; }

  /// Pr[p <= b].
  Rational cdf(Money b) const;
  /// Σ_{p <= b} prob(p)·p, the expected payment of bid b.
  Rational expected_payment(Money b) const;
  Rational mean() const;

  Money sample(Rng& rng) const;

 private:
  struct Private {};
  PriceDistribution(Private, std::vector<PricePoint> support) : support_(std::move(support)) {}

  std::vector<PricePoint> support_;
  std::vector<double> cumulative_;
};

/// One joint price vector, indexed by item.
struct Scenario {
  std::vector<Money> prices;
  Rational prob;
};

/// Joint distribution of item prices.
///
/// Three shapes:
///  - independent: one distribution per item;
///  - per-good: one distribution per good, and all copies of a good share the
///    single drawn price (uniform-price multi-unit auctions);
///  - correlated: an explicit scenario list.
class PriceModel {
 public:
  struct Independent {
    std::vector<PriceDistribution> items;
  };
  struct PerGood {
    std::vector<int> item_goods;
    std::vector<PriceDistribution> goods;
  };
  struct Correlated {
    std::vector<Scenario> scenarios;
  };

  PriceModel() = default;

  static PriceModel independent(std::vector<PriceDistribution> items);
  static PriceModel per_good(std::vector<int> item_goods, std::vector<PriceDistribution> goods);
  /// Validates probabilities (positive, sum to 1) and vector lengths.
  static PriceModel correlated(std::vector<Scenario> scenarios);

  int item_count() const { return items_; }

  bool is_independent() const { return std::holds_alternative<Independent>(shape_); }
  bool is_per_good() const { return std::holds_alternative<PerGood>(shape_); }
  bool is_correlated() const { return std::holds_alternative<Correlated>(shape_); }
  const Independent* as_independent() const { return std::get_if<Independent>(&shape_); }
  const PerGood* as_per_good() const { return std::get_if<PerGood>(&shape_); }
  const Correlated* as_correlated() const { return std::get_if<Correlated>(&shape_); }

  /// Per-item marginals when item prices are mutually independent.
  std::optional<std::vector<PriceDistribution>> independent_marginals() const;

  /// Sorted distinct prices the item can take.
  std::vector<Money> support_of(GoodId item) const;
  Money max_price() const;

  /// Number of joint scenarios relevant to `items` (saturates at SIZE_MAX).
  std::size_t scenario_count(GoodSet items) const;
  std::size_t scenario_count() const { return scenario_count(GoodSet::universe(items_)); }

 private:
  int items_ = 0;
  std::variant<Independent, PerGood, Correlated> shape_;
};

inline constexpr std::size_t kDefaultScenarioCap = 1'000'000;

/// Exact enumeration. Independent/per-good models expand to the cartesian
/// product; correlated models come back as-is. With `relevant` given, only
/// those items vary: other entries are 0 and scenarios that agree on the
/// relevant items are merged. Throws ScenarioExplosion above `cap`.
std::vector<Scenario> enumerate_scenarios(const PriceModel& m, std::size_t cap = kDefaultScenarioCap);
std::vector<Scenario> enumerate_scenarios(const PriceModel& m, GoodSet relevant,
                                          std::size_t cap = kDefaultScenarioCap);

/// Exact per-item means.
std::vector<Rational> mean_prices(const PriceModel& m);

/// Per-item means rounded to the nearest minor unit, ties up.
std::vector<Money> expected_prices(const PriceModel& m);

/// One scenario drawn with its model probability (prob field set to that probability).
Scenario sample_scenario(const PriceModel& m, Rng& rng);

/// `count` i.i.d. draws, each weighted 1/count.
std::vector<Scenario> sample_scenarios(const PriceModel& m, Rng& rng, int count);

/// Sum of scenario probabilities.
Rational total_probability(std::span<const Scenario> scenarios);

}  // namespace bidlab
