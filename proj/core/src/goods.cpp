#include "bidlab/goods.hpp"

#include <numeric>

#include "bidlab/errors.hpp"

namespace bidlab {

Universe::Universe(std::vector<std::string> names, std::vector<int> supply)
    : names_(std::move(names)), supply_(std::move(supply)) {
  if (supply_.empty()) supply_.assign(names_.size(), 1);
  if (supply_.size() != names_.size()) throw InvalidArgument("supply list does not match goods");
  offset_.reserve(names_.size());
  for (std::size_t g = 0; g < names_.size(); ++g) {
    if (supply_[g] < 1) throw InvalidArgument("supply of '" + names_[g] + "' must be >= 1");
    offset_.push_back(static_cast<int>(item_good_.size()));
    item_good_.insert(item_good_.end(), static_cast<std::size_t>(supply_[g]), static_cast<int>(g));
  }
  if (item_count() > kMaxGoods) {
    throw InvalidArgument("universe has " + std::to_string(item_count()) + " items; the limit is " +
                          std::to_string(kMaxGoods));
  }
}

GoodId Universe::item(int good, int copy) const {
  if (copy < 0 || copy >= supply_.at(good)) throw InvalidArgument("copy index out of range");
  return offset_[good] + copy;
}

GoodSet Universe::items_of(int good) const {
  GoodSet s;
  for (int k = 0; k < supply_.at(good); ++k) s = s.with(offset_[good] + k);
  return s;
}

int Universe::find(const std::string& name) const {
  for (std::size_t g = 0; g < names_.size(); ++g) {
    if (names_[g] == name) return static_cast<int>(g);
  }
  return -1;
}

std::string Universe::item_label(GoodId item) const {
  const int g = good_of(item);
  if (supply_[g] == 1) return names_[g];
  return names_[g] + "#" + std::to_string(copy_of(item));
}

std::string Universe::describe(GoodSet set) const {
  std::string out = "{";
  bool first = true;
  for (GoodId i : set) {
    if (!first) out += ",";
    out += i < item_count() ? item_label(i) : std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace bidlab
