#include "bidlab/sim/hybrid_auction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "bidlab/errors.hpp"

namespace bidlab::sim {

const char* to_string(BidVerdict v) {
  switch (v) {
    case BidVerdict::Accepted: return "accepted";
    case BidVerdict::PriceBelowQuote: return "price-below-quote";
    case BidVerdict::QuantityRegression: return "quantity-regression";
    case BidVerdict::InvalidBid: return "invalid-bid";
    case BidVerdict::AuctionClosed: return "auction-closed";
  }
  return "?";
}

BidVerdict validate_beat_the_quote(int current_winning_units, std::span<const Money> new_units, Money quote) {
  if (std::any_of(new_units.begin(), new_units.end(), [](Money p) { return p < 0; })) return BidVerdict::InvalidBid;
  const auto above = std::count_if(new_units.begin(), new_units.end(), [quote](Money p) { return p >= quote + 1; });
  if (above < 1) return BidVerdict::PriceBelowQuote;
  if (above < current_winning_units) return BidVerdict::QuantityRegression;
  return BidVerdict::Accepted;
}

Clearing clear_uniform_price(std::span<const StandingBid> book, int supply) {
  if (supply < 0) throw InvalidArgument("auction supply must be nonnegative");
  // Price level -> bids with units at that level, in admission order.
  std::map<Money, std::vector<std::tuple<std::uint64_t, int, int>>, std::greater<>> levels;
  for (const auto& bid : book) {
    std::map<Money, int> counts;
    for (Money p : bid.units) ++counts[p];
    for (const auto& [price, count] : counts) levels[price].emplace_back(bid.admitted, bid.agent, count);
  }
  Clearing out;
  std::map<int, int> won;
  Money last_price = 0;
  for (auto& [price, entries] : levels) {
    if (out.units_sold == supply) break;
    std::sort(entries.begin(), entries.end());
    for (const auto& [admitted, agent, count] : entries) {
      const int take = std::min(count, supply - out.units_sold);
      if (take == 0) break;
      won[agent] += take;
      out.units_sold += take;
      last_price = price;
    }
  }
  out.price = out.units_sold == supply && supply > 0 ? last_price : 0;
  for (const auto& [agent, units] : won) out.awards.push_back({agent, units});
  return out;
}

HybridAuction::HybridAuction(int supply) : supply_(supply) {
  if (supply < 1) throw InvalidArgument("auction supply must be >= 1");
}

Money HybridAuction::quote() const { return clear_uniform_price(book_, supply_).price; }

int HybridAuction::winning_units(int agent) const {
  for (const auto& a : clear_uniform_price(book_, supply_).awards) {
    if (a.agent == agent) return a.units;
  }
  return 0;
}

BidVerdict HybridAuction::submit(int agent, std::vector<Money> units) {
  if (closed_) return BidVerdict::AuctionClosed;
  const BidVerdict verdict = validate_beat_the_quote(winning_units(agent), units, quote());
  if (verdict != BidVerdict::Accepted) return verdict;
  std::sort(units.begin(), units.end(), std::greater<>());
  std::erase_if(book_, [agent](const StandingBid& b) { return b.agent == agent; });
  book_.push_back({agent, std::move(units), next_admission_++});
  return verdict;
}

Clearing HybridAuction::close() {
  if (closed_) throw InvalidArgument("auction already closed");
  closed_ = true;
  return clear_uniform_price(book_, supply_);
}

}  // namespace bidlab::sim
