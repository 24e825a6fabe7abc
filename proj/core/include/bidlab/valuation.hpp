#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bidlab/goods.hpp"
#include "bidlab/money.hpp"

namespace bidlab {

/// One bundle of the multi-copy form: `value` is earned when every listed good
/// receives at least `copies` units.
struct BundleSpec {
  struct Requirement {
    int good = 0;
    int copies = 1;
  };
  std::vector<Requirement> requirements;
  Money value = 0;
};

enum class PairRelation { Complementary, Substitutable, Additive };

/// Combinatorial value function over subsets of solver items.
///
/// The full 2^n table is materialized at construction. Alongside it the
/// valuation keeps its disposal closure: for a set W of won items, the best
/// value of any subset of W and the smallest-mask subset attaining it. That is
/// the realized value after the allocation step when unused winnings are
/// simply discarded.
class Valuation {
 public:
  /// The zero valuation over `items` items.
  explicit Valuation(int items = 0);

  /// Table form. Unlisted subsets default to 0, or, under free disposal, to the
  /// best listed subset they contain. Throws MonotonicityViolation if free
  /// disposal is requested and two listed entries contradict it.
  static Valuation from_entries(int items, std::span<const std::pair<GoodSet, Money>> entries,
                                bool free_disposal);

  /// Fully specified table (size 2^items, table[0] == 0).
  static Valuation from_table(int items, std::vector<Money> table);

  /// Multi-copy form. `item_goods[i]` names the good of item i; the table entry
  /// for S is the optimal allocation value of the copies in S.
  static Valuation from_bundles(std::vector<int> item_goods, std::vector<BundleSpec> bundles);

  int size() const { return items_; }
  GoodSet universe() const { return GoodSet::universe(items_); }

  Money operator()(GoodSet s) const { return table_[s.mask()]; }

  /// max over T ⊆ won of v(T).
  Money disposal_value(GoodSet won) const { return hull_[won.mask()]; }
  /// Smallest-mask T ⊆ won attaining disposal_value(won).
  GoodSet disposal_choice(GoodSet won) const { return GoodSet(hull_arg_[won.mask()]); }

  bool free_disposal() const { return free_disposal_; }
  bool has_bundles() const { return !bundles_.empty(); }
  const std::vector<BundleSpec>& bundles() const { return bundles_; }
  /// Good of each item (identity when built from a table).
  const std::vector<int>& item_goods() const { return item_goods_; }

  /// True iff Y ⊆ X implies v(Y) <= v(X) over the whole table.
  bool is_monotone() const;

  /// Largest value in the table.
  Money max_value() const { return hull_.back(); }

 private:
  void finish();

  int items_ = 0;
  bool free_disposal_ = false;
  std::vector<Money> table_;
  std::vector<Money> hull_;
  std::vector<std::uint32_t> hull_arg_;
  std::vector<int> item_goods_;
  std::vector<BundleSpec> bundles_;
};

/// Bundles chosen by the multi-copy allocation step.
struct BundleSelection {
  Money value = 0;
  std::vector<int> bundles;  ///< indices into the bundle list, ascending
};

/// Exact best set of bundles that the per-good copy counts can satisfy at once.
/// Ties go to the lexicographically smallest indicator vector (bundle 0 first).
BundleSelection select_bundles(std::span<const int> copies_per_good,
                               std::span<const BundleSpec> bundles);

/// Superadditive, subadditive or additive on the pair {a, b}.
PairRelation classify_pair(const Valuation& v, GoodId a, GoodId b);

const char* to_string(PairRelation r);

}  // namespace bidlab
