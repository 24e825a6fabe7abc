#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace bidlab {

/// Index of a good (or of one copy of a good) in the solver universe.
using GoodId = int;

/// Largest universe the exhaustive solvers accept.
inline constexpr int kMaxGoods = 20;

/// Subset of the universe as a bitmask.
class GoodSet {
 public:
  class iterator {
   public:
    using value_type = GoodId;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr GoodId operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr GoodSet() = default;
  constexpr explicit GoodSet(std::uint32_t mask) : mask_(mask) {}
  constexpr GoodSet(std::initializer_list<GoodId> goods) {
    for (GoodId g : goods) mask_ |= bit(g);
  }

  static constexpr GoodSet single(GoodId g) { return GoodSet(bit(g)); }
  static constexpr GoodSet universe(int n) {
    return GoodSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(GoodId g) const { return (mask_ & bit(g)) != 0; }
  constexpr bool subset_of(GoodSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(GoodSet other) const { return (mask_ & other.mask_) != 0; }

  constexpr GoodSet with(GoodId g) const { return GoodSet(mask_ | bit(g)); }
  constexpr GoodSet without(GoodId g) const { return GoodSet(mask_ & ~bit(g)); }

  constexpr GoodSet operator|(GoodSet o) const { return GoodSet(mask_ | o.mask_); }
  constexpr GoodSet operator&(GoodSet o) const { return GoodSet(mask_ & o.mask_); }
  /// Set difference.
  constexpr GoodSet operator-(GoodSet o) const { return GoodSet(mask_ & ~o.mask_); }

  constexpr bool operator==(const GoodSet&) const = default;
  constexpr auto operator<=>(const GoodSet&) const = default;

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  static constexpr std::uint32_t bit(GoodId g) { return 1u << static_cast<unsigned>(g); }

  std::uint32_t mask_ = 0;
};

/// Calls f(sub) for every subset of `set`, in increasing mask order, starting at the empty set.
template <typename F>
void for_each_subset(GoodSet set, F&& f) {
  const std::uint32_t full = set.mask();
  std::uint32_t sub = 0;
  do {
    f(GoodSet(sub));
    sub = (sub - full) & full;
  } while (sub != 0);
}

/// Named goods with a per-good supply; each copy of a good is one solver item.
///
/// Items are laid out good-major: all copies of good 0, then good 1, and so on.
/// With unit supply, items and goods coincide.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names, std::vector<int> supply = {});

  int good_count() const { return static_cast<int>(names_.size()); }
  int item_count() const { return static_cast<int>(item_good_.size()); }

  const std::string& good_name(int good) const { return names_.at(good); }
  const std::vector<std::string>& good_names() const { return names_; }
  int supply(int good) const { return supply_.at(good); }
  const std::vector<int>& supplies() const { return supply_; }

  GoodId item(int good, int copy) const;
  int good_of(GoodId item) const { return item_good_.at(item); }
  int copy_of(GoodId item) const { return item - offset_.at(item_good_.at(item)); }
  GoodSet items_of(int good) const;
  const std::vector<int>& item_goods() const { return item_good_; }

  /// Index of a named good, or -1.
  int find(const std::string& name) const;

  /// "camera" with unit supply, "hotel#2" for copy 2 otherwise.
  std::string item_label(GoodId item) const;

  /// "{camera,flash}".
  std::string describe(GoodSet set) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> supply_;
  std::vector<int> offset_;
  std::vector<int> item_good_;
};

}  // namespace bidlab
