#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bidlab/money.hpp"

namespace bidlab::sim {

/// An agent's current multi-unit bid in one auction: one price per unit,
/// highest first. `admitted` orders bids at equal prices (earlier wins).
struct StandingBid {
  int agent = 0;
  std::vector<Money> units;
  std::uint64_t admitted = 0;
};

enum class BidVerdict {
  Accepted,
  PriceBelowQuote,     ///< no unit offered at quote + 1 or more
  QuantityRegression,  ///< fewer units at quote + 1 than the current bid is winning
  InvalidBid,          ///< negative unit price
  AuctionClosed,
};

const char* to_string(BidVerdict v);

/// Beat-the-quote admission rule: the new bid must offer at least one unit at
/// quote + 1 or more, and at least as many such units as the agent's current
/// bid would win right now.
BidVerdict validate_beat_the_quote(int current_winning_units, std::span<const Money> new_units, Money quote);

struct UnitAward {
  int agent = 0;
  int units = 0;
};

struct Clearing {
  Money price = 0;  ///< u-th highest unit price, 0 with fewer than u units bid
  int units_sold = 0;
  std::vector<UnitAward> awards;  ///< by agent id, agents with zero units omitted
};

/// Top `supply` unit bids win (price descending, earlier admission first); all
/// winners pay the `supply`-th highest unit price.
Clearing clear_uniform_price(std::span<const StandingBid> book, int supply);

/// One ascending multi-unit auction with a uniform `supply`-th price close.
class HybridAuction {
 public:
  explicit HybridAuction(int supply = 16);

  int supply() const { return supply_; }
  bool closed() const { return closed_; }
  const std::vector<StandingBid>& book() const { return book_; }

  /// Current ask quote: the `supply`-th highest unit price in the book.
  Money quote() const;

  /// Units the agent's standing bid would win if the auction closed now.
  int winning_units(int agent) const;

  /// Admits `units` as the agent's new bid if it beats the quote; otherwise the
  /// standing bid stays as it was.
  BidVerdict submit(int agent, std::vector<Money> units);

  /// Closes the auction; further submissions are rejected.
  Clearing close();

 private:
  int supply_;
  bool closed_ = false;
  std::uint64_t next_admission_ = 0;
  std::vector<StandingBid> book_;
};

}  // namespace bidlab::sim
