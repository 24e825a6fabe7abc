#include "bidlab/price_model.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "bidlab/errors.hpp"

namespace bidlab {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t pick(const std::vector<double>& cumulative, double u) {
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) return cumulative.size() - 1;
  return static_cast<std::size_t>(it - cumulative.begin());
}

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap) {
    throw ScenarioExplosion("scenario enumeration needs " +
                            (count == std::numeric_limits<std::size_t>::max() ? std::string("more than 2^64")
                                                                               : std::to_string(count)) +
                            " scenarios; the cap is " + std::to_string(cap));
  }
}

/// Cartesian product over `dists`, each writing its drawn price into `targets[d]`.
std::vector<Scenario> product_scenarios(int items, const std::vector<const PriceDistribution*>& dists,
                                        const std::vector<GoodSet>& targets) {
  std::vector<Scenario> out;
  std::vector<std::size_t> digit(dists.size(), 0);
  while (true) {
    Scenario s{std::vector<Money>(static_cast<std::size_t>(items), 0), Rational(1)};
    for (std::size_t d = 0; d < dists.size(); ++d) {
      const PricePoint& pt = dists[d]->support()[digit[d]];
      for (GoodId i : targets[d]) s.prices[static_cast<std::size_t>(i)] = pt.price;
      s.prob *= pt.prob;
    }
    out.push_back(std::move(s));
    // Odometer: the last distribution varies fastest.
    std::size_t d = dists.size();
    while (d > 0) {
      --d;
      if (++digit[d] < dists[d]->support().size()) break;
      digit[d] = 0;
      if (d == 0) return out;
    }
    if (dists.empty()) return out;
  }
}

}  // namespace

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

PriceDistribution::PriceDistribution(std::vector<PricePoint> support) : support_(std::move(support)) {
  if (support_.empty()) throw InvalidArgument("price distribution needs at least one support point");
  Rational total = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i].price < 0) throw InvalidArgument("prices must be nonnegative");
    if (i > 0 && support_[i].price <= support_[i - 1].price) {
      throw InvalidArgument("support prices must be strictly increasing");
    }
    if (support_[i].prob <= 0) throw InvalidArgument("support probabilities must be positive");
    total += support_[i].prob;
  }
  if (total != 1) throw InvalidArgument("support probabilities sum to " + to_string(total) + ", not 1");
  cumulative_.reserve(support_.size());
  Rational running = 0;
  for (const auto& pt : support_) {
    running += pt.prob;
    cumulative_.push_back(to_double(running));
  }
  cumulative_.back() = 1.0;
}

PriceDistribution PriceDistribution::deterministic(Money price) {
  return PriceDistribution(std::vector<PricePoint>{{price, Rational(1)}});
}

PriceDistribution PriceDistribution::uniform(std::vector<Money> prices) {
  if (prices.empty()) throw InvalidArgument("uniform distribution over no prices");
  std::map<Money, int> counts;
  for (Money p : prices) ++counts[p];
  std::vector<PricePoint> support;
  for (const auto& [price, count] : counts) {
    support.push_back({price, Rational(count, static_cast<long long>(prices.size()))});
  }
  return PriceDistribution(std::move(support));
}

Rational PriceDistribution::cdf(Money b) const {
  Rational total = 0;
  for (const auto& pt : support_) {
    if (pt.price > b) break;
    total += pt.prob;
  }
  return total;
}

Rational PriceDistribution::expected_payment(Money b) const {
  Rational total = 0;
  for (const auto& pt : support_) {
    if (pt.price > b) break;
    total += pt.prob * pt.price;
  }
  return total;
}

Rational PriceDistribution::mean() const { return expected_payment(std::numeric_limits<Money>::max()); }

Money PriceDistribution::sample(Rng& rng) const { return support_[pick(cumulative_, uniform01(rng))].price; }

PriceModel PriceModel::independent(std::vector<PriceDistribution> items) {
  PriceModel m;
  m.items_ = static_cast<int>(items.size());
  if (m.items_ > kMaxGoods) throw InvalidArgument("price model over too many items");
  m.shape_ = Independent{std::move(items)};
  return m;
}

PriceModel PriceModel::per_good(std::vector<int> item_goods, std::vector<PriceDistribution> goods) {
  for (int g : item_goods) {
    if (g < 0 || g >= static_cast<int>(goods.size())) throw InvalidArgument("item maps to an unknown good");
  }
  PriceModel m;
  m.items_ = static_cast<int>(item_goods.size());
  if (m.items_ > kMaxGoods) throw InvalidArgument("price model over too many items");
  m.shape_ = PerGood{std::move(item_goods), std::move(goods)};
  return m;
}

PriceModel PriceModel::correlated(std::vector<Scenario> scenarios) {
  if (scenarios.empty()) throw InvalidArgument("correlated model needs at least one scenario");
  const std::size_t items = scenarios.front().prices.size();
  Rational total = 0;
  for (const auto& s : scenarios) {
    if (s.prices.size() != items) throw InvalidArgument("scenario price vectors differ in length");
    if (s.prob <= 0) throw InvalidArgument("scenario probabilities must be positive");
    for (Money p : s.prices) {
      if (p < 0) throw InvalidArgument("prices must be nonnegative");
    }
    total += s.prob;
  }
  if (total != 1) throw InvalidArgument("scenario probabilities sum to " + to_string(total) + ", not 1");
  PriceModel m;
  m.items_ = static_cast<int>(items);
  if (m.items_ > kMaxGoods) throw InvalidArgument("price model over too many items");
  m.shape_ = Correlated{std::move(scenarios)};
  return m;
}

std::optional<std::vector<PriceDistribution>> PriceModel::independent_marginals() const {
  if (const auto* ind = as_independent()) return ind->items;
  if (const auto* pg = as_per_good()) {
    std::vector<int> uses(pg->goods.size(), 0);
    for (int g : pg->item_goods) ++uses[static_cast<std::size_t>(g)];
    std::vector<PriceDistribution> out;
    for (int g : pg->item_goods) {
      const auto& d = pg->goods[static_cast<std::size_t>(g)];
      if (uses[static_cast<std::size_t>(g)] > 1 && d.support().size() > 1) return std::nullopt;
      out.push_back(d);
    }
    return out;
  }
  const auto& sc = as_correlated()->scenarios;
  if (sc.size() != 1) return std::nullopt;
  std::vector<PriceDistribution> out;
  for (Money p : sc.front().prices) out.push_back(PriceDistribution::deterministic(p));
  return out;
}

std::vector<Money> PriceModel::support_of(GoodId item) const {
  if (item < 0 || item >= items_) throw InvalidArgument("item index out of range");
  std::vector<Money> out;
  if (const auto* ind = as_independent()) {
    for (const auto& pt : ind->items[static_cast<std::size_t>(item)].support()) out.push_back(pt.price);
  } else if (const auto* pg = as_per_good()) {
    for (const auto& pt : pg->goods[static_cast<std::size_t>(pg->item_goods[static_cast<std::size_t>(item)])].support()) {
      out.push_back(pt.price);
    }
  } else {
    for (const auto& s : as_correlated()->scenarios) out.push_back(s.prices[static_cast<std::size_t>(item)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

Money PriceModel::max_price() const {
  Money best = 0;
  for (GoodId i = 0; i < items_; ++i) best = std::max(best, support_of(i).back());
  return best;
}

std::size_t PriceModel::scenario_count(GoodSet items) const {
  std::size_t count = 1;
  if (const auto* ind = as_independent()) {
    for (GoodId i : items) {
      if (i < items_) count = saturating_mul(count, ind->items[static_cast<std::size_t>(i)].support().size());
    }
  } else if (const auto* pg = as_per_good()) {
    std::vector<bool> seen(pg->goods.size(), false);
    for (GoodId i : items) {
      if (i >= items_) continue;
      const auto g = static_cast<std::size_t>(pg->item_goods[static_cast<std::size_t>(i)]);
      if (!seen[g]) count = saturating_mul(count, pg->goods[g].support().size());
      seen[g] = true;
    }
  } else {
    count = as_correlated()->scenarios.size();
  }
  return count;
}

std::vector<Scenario> enumerate_scenarios(const PriceModel& m, std::size_t cap) {
  return enumerate_scenarios(m, GoodSet::universe(m.item_count()), cap);
}

std::vector<Scenario> enumerate_scenarios(const PriceModel& m, GoodSet relevant, std::size_t cap) {
  relevant = relevant & GoodSet::universe(m.item_count());
  check_cap(m.scenario_count(relevant), cap);
  if (const auto* ind = m.as_independent()) {
    std::vector<const PriceDistribution*> dists;
    std::vector<GoodSet> targets;
    for (GoodId i : relevant) {
      dists.push_back(&ind->items[static_cast<std::size_t>(i)]);
      targets.push_back(GoodSet::single(i));
    }
    return product_scenarios(m.item_count(), dists, targets);
  }
  if (const auto* pg = m.as_per_good()) {
    std::vector<GoodSet> by_good(pg->goods.size());
    for (GoodId i : relevant) {
      const auto g = static_cast<std::size_t>(pg->item_goods[static_cast<std::size_t>(i)]);
      by_good[g] = by_good[g].with(i);
    }
    std::vector<const PriceDistribution*> dists;
    std::vector<GoodSet> targets;
    for (std::size_t g = 0; g < by_good.size(); ++g) {
      if (by_good[g].empty()) continue;
      dists.push_back(&pg->goods[g]);
      targets.push_back(by_good[g]);
    }
    return product_scenarios(m.item_count(), dists, targets);
  }
  const auto& scenarios = m.as_correlated()->scenarios;
  if (relevant == GoodSet::universe(m.item_count())) return scenarios;
  std::vector<Scenario> out;
  std::map<std::vector<Money>, std::size_t> index;
  for (const auto& s : scenarios) {
    std::vector<Money> projected(s.prices.size(), 0);
    for (GoodId i : relevant) projected[static_cast<std::size_t>(i)] = s.prices[static_cast<std::size_t>(i)];
    auto [it, inserted] = index.emplace(projected, out.size());
    if (inserted) {
      out.push_back({std::move(projected), s.prob});
    } else {
      out[it->second].prob += s.prob;
    }
  }
  return out;
}

std::vector<Rational> mean_prices(const PriceModel& m) {
  std::vector<Rational> out(static_cast<std::size_t>(m.item_count()));
  if (const auto* ind = m.as_independent()) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ind->items[i].mean();
  } else if (const auto* pg = m.as_per_good()) {
    std::vector<Rational> good_mean;
    for (const auto& d : pg->goods) good_mean.push_back(d.mean());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = good_mean[static_cast<std::size_t>(pg->item_goods[i])];
  } else {
    for (const auto& s : m.as_correlated()->scenarios) {
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += s.prob * s.prices[i];
    }
  }
  return out;
}

std::vector<Money> expected_prices(const PriceModel& m) {
  std::vector<Money> out;
  for (const auto& r : mean_prices(m)) out.push_back(round_half_up(r));
  return out;
}

Scenario sample_scenario(const PriceModel& m, Rng& rng) {
  Scenario s{std::vector<Money>(static_cast<std::size_t>(m.item_count()), 0), Rational(1)};
  auto draw = [&](const PriceDistribution& d) -> const PricePoint& {
    const Money p = d.sample(rng);
    return *std::find_if(d.support().begin(), d.support().end(), [p](const PricePoint& pt) { return pt.price == p; });
  };
  if (const auto* ind = m.as_independent()) {
    for (std::size_t i = 0; i < s.prices.size(); ++i) {
      const PricePoint& pt = draw(ind->items[i]);
      s.prices[i] = pt.price;
      s.prob *= pt.prob;
    }
  } else if (const auto* pg = m.as_per_good()) {
    std::vector<Money> good_price(pg->goods.size());
    for (std::size_t g = 0; g < pg->goods.size(); ++g) {
      const PricePoint& pt = draw(pg->goods[g]);
      good_price[g] = pt.price;
      s.prob *= pt.prob;
    }
    for (std::size_t i = 0; i < s.prices.size(); ++i) s.prices[i] = good_price[static_cast<std::size_t>(pg->item_goods[i])];
  } else {
    const auto& scenarios = m.as_correlated()->scenarios;
    const double u = uniform01(rng);
    double running = 0;
    std::size_t chosen = scenarios.size() - 1;
    for (std::size_t k = 0; k < scenarios.size(); ++k) {
      running += to_double(scenarios[k].prob);
      if (u < running) {
        chosen = k;
        break;
      }
    }
    s = scenarios[chosen];
  }
  return s;
}

std::vector<Scenario> sample_scenarios(const PriceModel& m, Rng& rng, int count) {
  if (count < 1) throw InvalidArgument("sample count must be >= 1");
  std::vector<Scenario> out;
  out.reserve(static_cast<std::size_t>(count));
  const Rational weight(1, count);
  for (int k = 0; k < count; ++k) {
    Scenario s = sample_scenario(m, rng);
    s.prob = weight;
    out.push_back(std::move(s));
  }
  return out;
}

Rational total_probability(std::span<const Scenario> scenarios) {
  Rational total = 0;
  for (const auto& s : scenarios) total += s.prob;
  return total;
}

}  // namespace bidlab
