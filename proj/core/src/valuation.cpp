#include "bidlab/valuation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "bidlab/errors.hpp"

namespace bidlab {

namespace {

void check_size(int items) {
  if (items < 0 || items > kMaxGoods) {
    throw InvalidArgument("valuation over " + std::to_string(items) + " items; the limit is " +
                          std::to_string(kMaxGoods));
  }
}

struct BundleSearch {
  std::span<const BundleSpec> bundles;
  std::vector<int> remaining;
  std::vector<Money> suffix_value;
  std::vector<int> current;
  Money current_value = 0;
  BundleSelection best;

  bool fits(const BundleSpec& b) const {
    return std::all_of(b.requirements.begin(), b.requirements.end(),
                       [&](const BundleSpec::Requirement& r) { return remaining[r.good] >= r.copies; });
  }

  void take(const BundleSpec& b, int sign) {
    for (const auto& r : b.requirements) remaining[r.good] -= sign * r.copies;
  }

  void run(std::size_t i) {
    if (current_value + suffix_value[i] <= best.value) return;
    if (i == bundles.size()) {
      best.value = current_value;
      best.bundles = current;
      return;
    }
    run(i + 1);
    const BundleSpec& b = bundles[i];
    if (b.value > 0 && fits(b)) {
      take(b, +1);
      current.push_back(static_cast<int>(i));
      current_value += b.value;
      run(i + 1);
      current_value -= b.value;
      current.pop_back();
      take(b, -1);
    }
  }
};

}  // namespace

BundleSelection select_bundles(std::span<const int> copies_per_good, std::span<const BundleSpec> bundles) {
  BundleSearch search;
  search.bundles = bundles;
  search.remaining.assign(copies_per_good.begin(), copies_per_good.end());
  search.suffix_value.assign(bundles.size() + 1, 0);
  for (std::size_t i = bundles.size(); i-- > 0;) {
    search.suffix_value[i] = search.suffix_value[i + 1] + std::max<Money>(bundles[i].value, 0);
  }
  for (const auto& b : bundles) {
    for (const auto& r : b.requirements) {
      if (r.good < 0 || r.good >= static_cast<int>(copies_per_good.size())) {
        throw InvalidArgument("bundle requirement names an unknown good");
      }
    }
  }
  // The all-excluded leaf is the first one reached; seed it so ties keep the
  // lexicographically smallest indicator.
  search.best.value = -1;
  search.run(0);
  if (search.best.value < 0) search.best = {};
  return search.best;
}

Valuation::Valuation(int items) : items_(items) {
  check_size(items);
  table_.assign(std::size_t{1} << items, 0);
  item_goods_.resize(static_cast<std::size_t>(items));
  std::iota(item_goods_.begin(), item_goods_.end(), 0);
  free_disposal_ = true;
  finish();
}

Valuation Valuation::from_entries(int items, std::span<const std::pair<GoodSet, Money>> entries,
                                  bool free_disposal) {
  Valuation v(items);
  const GoodSet all = v.universe();
  std::map<std::uint32_t, Money> listed;
  for (const auto& [set, value] : entries) {
    if (!set.subset_of(all)) throw InvalidArgument("valuation entry names goods outside the universe");
    if (value < 0) throw InvalidArgument("negative valuations are not supported");
    if (set.empty() && value != 0) throw InvalidArgument("v(empty set) must be 0");
    auto [it, inserted] = listed.emplace(set.mask(), value);
    if (!inserted && it->second != value) throw InvalidArgument("conflicting duplicate valuation entry");
  }
  if (free_disposal) {
    for (const auto& [small, small_value] : listed) {
      for (const auto& [large, large_value] : listed) {
        if ((small & ~large) == 0 && small_value > large_value) {
          throw MonotonicityViolation("free disposal violated: v(" + std::to_string(small) + ") = " +
                                      std::to_string(small_value) + " > v(" + std::to_string(large) +
                                      ") = " + std::to_string(large_value));
        }
      }
    }
  }
  for (const auto& [mask, value] : listed) v.table_[mask] = value;
  v.finish();
  if (free_disposal) {
    // Values are nonnegative, so closing over listed subsets is the disposal hull.
    v.table_ = v.hull_;
    v.hull_arg_.assign(v.table_.size(), 0);
    v.finish();
  }
  v.free_disposal_ = v.is_monotone();
  return v;
}

Valuation Valuation::from_table(int items, std::vector<Money> table) {
  check_size(items);
  if (table.size() != (std::size_t{1} << items)) throw InvalidArgument("valuation table has the wrong size");
  if (table[0] != 0) throw InvalidArgument("v(empty set) must be 0");
  if (std::any_of(table.begin(), table.end(), [](Money m) { return m < 0; })) {
    throw InvalidArgument("negative valuations are not supported");
  }
  Valuation v(items);
  v.table_ = std::move(table);
  v.finish();
  v.free_disposal_ = v.is_monotone();
  return v;
}

Valuation Valuation::from_bundles(std::vector<int> item_goods, std::vector<BundleSpec> bundles) {
  const int items = static_cast<int>(item_goods.size());
  check_size(items);
  int goods = 0;
  for (int g : item_goods) {
    if (g < 0) throw InvalidArgument("negative good index");
    goods = std::max(goods, g + 1);
  }
  for (const auto& b : bundles) {
    if (b.value < 0) throw InvalidArgument("bundle values must be nonnegative");
    if (b.requirements.empty()) throw InvalidArgument("bundle with no requirements");
    for (const auto& r : b.requirements) {
      if (r.copies < 1) throw InvalidArgument("bundle copy counts must be >= 1");
      if (r.good < 0 || r.good >= goods) throw InvalidArgument("bundle requirement names an unknown good");
    }
  }

  Valuation v(items);
  v.item_goods_ = std::move(item_goods);
  v.bundles_ = std::move(bundles);

  std::vector<int> counts(static_cast<std::size_t>(goods));
  std::unordered_map<std::uint64_t, Money> memo;
  for (std::uint32_t mask = 0; mask < v.table_.size(); ++mask) {
    std::fill(counts.begin(), counts.end(), 0);
    for (GoodId i : GoodSet(mask)) ++counts[v.item_goods_[i]];
    std::uint64_t key = 0;
    for (int c : counts) key = key * (kMaxGoods + 1) + static_cast<std::uint64_t>(c);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, select_bundles(counts, v.bundles_).value).first;
    v.table_[mask] = it->second;
  }
  v.finish();
  v.free_disposal_ = true;
  return v;
}

void Valuation::finish() {
  const std::size_t n = table_.size();
  hull_.resize(n);
  hull_arg_.resize(n);
  for (std::uint32_t mask = 0; mask < n; ++mask) {
    Money best = table_[mask];
    std::uint32_t arg = mask;
    for (GoodId i : GoodSet(mask)) {
      const std::uint32_t sub = mask & ~(1u << i);
      if (hull_[sub] > best || (hull_[sub] == best && hull_arg_[sub] < arg)) {
        best = hull_[sub];
        arg = hull_arg_[sub];
      }
    }
    hull_[mask] = best;
    hull_arg_[mask] = arg;
  }
}

bool Valuation::is_monotone() const {
  for (std::uint32_t mask = 0; mask < table_.size(); ++mask) {
    if (hull_[mask] != table_[mask]) return false;
  }
  return true;
}

PairRelation classify_pair(const Valuation& v, GoodId a, GoodId b) {
  if (a == b) throw InvalidArgument("classify_pair needs two distinct goods");
  if (a < 0 || b < 0 || a >= v.size() || b >= v.size()) throw InvalidArgument("good index out of range");
  const Money separate = v(GoodSet::single(a)) + v(GoodSet::single(b));
  const Money together = v(GoodSet{a, b});
  if (separate < together) return PairRelation::Complementary;
  if (separate > together) return PairRelation::Substitutable;
  return PairRelation::Additive;
}

const char* to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Complementary: return "complementary";
    case PairRelation::Substitutable: return "substitutable";
    case PairRelation::Additive: return "additive";
  }
  return "?";
}

}  // namespace bidlab
