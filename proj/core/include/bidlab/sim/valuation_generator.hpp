#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bidlab/money.hpp"
#include "bidlab/price_model.hpp"
#include "bidlab/valuation.hpp"

namespace bidlab::sim {

/// A private valuation plus the good each of its items belongs to. In
/// single-unit games the items are the goods themselves.
struct AgentValuation {
  Valuation valuation;
  std::vector<int> item_goods;
};

/// Draws one agent's valuation for one game.
using ValuationGenerator = std::function<AgentValuation(Rng&)>;

/// Always the same valuation over unit-supply goods.
ValuationGenerator fixed_valuation(Valuation v);

struct PairsParams {
  Money single_lo = 10;
  Money single_hi = 100;
  Money pair_lo = 50;   ///< complementary pair value range
  Money pair_hi = 200;
  double complement_share = 0.5;  ///< chance a pair is complementary rather than substitutable
};

/// Goods are shuffled into disjoint pairs (plus a single when n is odd). A
/// complementary pair is worth something only as a whole; a substitutable pair
/// is worth the larger of its two single values. Groups add up.
Valuation random_pairs_valuation(int goods, Rng& rng, const PairsParams& params = {});
ValuationGenerator pairs_generator(int goods, PairsParams params = {});

/// Small hotel market: two hotel types over consecutive nights.
///
/// Good layout is hotel-major: good h·nights + n is hotel h on night n, with
/// hotel 1 the premium one. Each client wants one stay of consecutive nights in
/// a single hotel; an agent's value is the best assignment of its rooms to its
/// clients.
struct HotelParams {
  int nights = 2;
  int clients = 2;
  Money night_lo = 40;  ///< per-night value of a stay
  Money night_hi = 120;
  Money premium_hi = 60;  ///< premium hotel bonus, drawn in [0, premium_hi]
  Money trip_lo = 0;  ///< flat value of a complete stay, on top of the nightly value
  Money trip_hi = 0;
};

int hotel_goods(const HotelParams& p);
std::vector<std::string> hotel_good_names(const HotelParams& p);
void validate(const HotelParams& p);

struct HotelClient {
  int arrive = 0;  ///< first night
  int depart = 1;  ///< one past the last night
  Money per_night = 0;
  Money premium = 0;
  Money trip = 0;
};

/// Value table over the agent's room copies: one copy of hotel h on night n for
/// each client whose stay covers n.
AgentValuation hotel_valuation(const HotelParams& p, const std::vector<HotelClient>& clients);
std::vector<HotelClient> draw_hotel_clients(const HotelParams& p, Rng& rng);
ValuationGenerator hotel_generator(HotelParams p);

}  // namespace bidlab::sim
