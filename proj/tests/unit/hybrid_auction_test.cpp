#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "bidlab/errors.hpp"
#include "bidlab/sim/hybrid_auction.hpp"

namespace bidlab::sim {
namespace {

// Sort-based clearing oracle: flatten every unit, order by price descending
// then admission, and take the first `supply`.
Clearing sort_clear(const std::vector<StandingBid>& book, int supply) {
  std::vector<std::tuple<Money, std::uint64_t, int>> units;
  for (const auto& b : book) {
    for (Money p : b.units) units.emplace_back(-p, b.admitted, b.agent);
  }
  std::sort(units.begin(), units.end());
  Clearing c;
  std::map<int, int> won;
  const int take = std::min<int>(supply, static_cast<int>(units.size()));
  for (int k = 0; k < take; ++k) ++won[std::get<2>(units[static_cast<std::size_t>(k)])];
  c.units_sold = take;
  c.price = take == supply && supply > 0 ? -std::get<0>(units[static_cast<std::size_t>(supply - 1)]) : 0;
  for (auto [agent, n] : won) c.awards.push_back({agent, n});
  return c;
}

TEST(BeatTheQuote, TruthTable) {
  struct Case {
    int winning;
    std::vector<Money> units;
    Money quote;
    BidVerdict want;
  };
  const std::vector<Case> cases{
      {0, {51}, 50, BidVerdict::Accepted},
      {0, {50}, 50, BidVerdict::PriceBelowQuote},
      {0, {50, 50, 50, 50}, 50, BidVerdict::PriceBelowQuote},
      {0, {}, 50, BidVerdict::PriceBelowQuote},
      {3, {55, 55}, 50, BidVerdict::QuantityRegression},
      {3, {51, 51, 51}, 50, BidVerdict::Accepted},
      {3, {51, 51, 50, 50, 50}, 50, BidVerdict::QuantityRegression},
      {3, {50, 50, 50}, 50, BidVerdict::PriceBelowQuote},
      {0, {1}, 0, BidVerdict::Accepted},
      {0, {0}, 0, BidVerdict::PriceBelowQuote},
      {1, {60, -1}, 50, BidVerdict::InvalidBid},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(validate_beat_the_quote(c.winning, c.units, c.quote), c.want)
        << "winning " << c.winning << " quote " << c.quote << " first " << (c.units.empty() ? -1 : c.units[0]);
  }
}

TEST(Clearing, SixteenthPriceExample) {
  const std::vector<StandingBid> book{{0, std::vector<Money>(16, 10), 0}, {1, std::vector<Money>(16, 20), 1}};
  const auto c = clear_uniform_price(book, 16);
  EXPECT_EQ(c.price, 20);
  EXPECT_EQ(c.units_sold, 16);
  ASSERT_EQ(c.awards.size(), 1u);
  EXPECT_EQ(c.awards[0].agent, 1);
  EXPECT_EQ(c.awards[0].units, 16);
}

TEST(Clearing, ThinBookClearsAtZero) {
  const std::vector<StandingBid> book{{0, {30, 20}, 0}};
  const auto c = clear_uniform_price(book, 16);
  EXPECT_EQ(c.price, 0);
  EXPECT_EQ(c.units_sold, 2);
  EXPECT_EQ(clear_uniform_price({}, 16).units_sold, 0);
}

TEST(Clearing, EarlierAdmissionWinsTies) {
  const std::vector<StandingBid> book{{3, {10, 10}, 5}, {1, {10}, 7}, {2, {10}, 2}};
  const auto c = clear_uniform_price(book, 2);
  ASSERT_EQ(c.awards.size(), 2u);
  EXPECT_EQ(c.awards[0].agent, 2);
  EXPECT_EQ(c.awards[1].agent, 3);
  EXPECT_EQ(c.awards[1].units, 1);
}

TEST(Clearing, MatchesSortOracleAndConserves) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int supply = 1 + static_cast<int>(rng() % 16);
    const int agents = static_cast<int>(rng() % 9);
    std::vector<StandingBid> book;
    for (int a = 0; a < agents; ++a) {
      StandingBid b{a, {}, rng() % 100};
      const int n = static_cast<int>(rng() % 10);
      for (int k = 0; k < n; ++k) b.units.push_back(static_cast<Money>(rng() % 25));
      std::sort(b.units.begin(), b.units.end(), std::greater<>());
      book.push_back(b);
    }
    // Admission stamps must be distinct for a unique order.
    std::shuffle(book.begin(), book.end(), rng);
    for (std::size_t i = 0; i < book.size(); ++i) book[i].admitted = i;
    const auto got = clear_uniform_price(book, supply);
    const auto want = sort_clear(book, supply);
    ASSERT_EQ(got.price, want.price);
    ASSERT_EQ(got.units_sold, want.units_sold);
    ASSERT_EQ(got.awards.size(), want.awards.size());
    int total = 0;
    for (std::size_t k = 0; k < got.awards.size(); ++k) {
      EXPECT_EQ(got.awards[k].agent, want.awards[k].agent);
      EXPECT_EQ(got.awards[k].units, want.awards[k].units);
      total += got.awards[k].units;
    }
    EXPECT_EQ(total, got.units_sold);
    EXPECT_LE(got.units_sold, supply);
  }
}

TEST(HybridAuction, AdmissionFollowsTheQuote) {
  HybridAuction a(2);
  EXPECT_EQ(a.quote(), 0);
  EXPECT_EQ(a.submit(0, {50, 50}), BidVerdict::Accepted);
  EXPECT_EQ(a.quote(), 50);
  EXPECT_EQ(a.winning_units(0), 2);
  EXPECT_EQ(a.submit(1, {50}), BidVerdict::PriceBelowQuote);
  EXPECT_EQ(a.submit(1, {51}), BidVerdict::Accepted);
  EXPECT_EQ(a.winning_units(0), 1);
  // Agent 0 now wins one unit; a bid with no unit above the quote is refused
  // and the standing bid stays.
  EXPECT_EQ(a.submit(0, {50}), BidVerdict::PriceBelowQuote);
  EXPECT_EQ(a.winning_units(0), 1);
  const auto c = a.close();
  EXPECT_TRUE(a.closed());
  EXPECT_EQ(c.price, 50);
  EXPECT_EQ(a.submit(2, {1000}), BidVerdict::AuctionClosed);
  EXPECT_THROW(HybridAuction(0), InvalidArgument);
}

TEST(HybridAuction, QuoteNeverFalls) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    HybridAuction a(1 + static_cast<int>(rng() % 6));
    Money last = a.quote();
    for (int step = 0; step < 40; ++step) {
      std::vector<Money> units(rng() % 5);
      for (auto& u : units) u = last + static_cast<Money>(rng() % 6) - 2;
      for (auto& u : units) u = std::max<Money>(u, 0);
      a.submit(static_cast<int>(rng() % 5), units);
      const Money q = a.quote();
      ASSERT_GE(q, last);
      last = q;
    }
  }
}

}  // namespace
}  // namespace bidlab::sim
