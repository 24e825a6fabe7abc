#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bidlab/money.hpp"
#include "bidlab/price_model.hpp"
#include "bidlab/sim/game_log.hpp"
#include "bidlab/sim/price_table.hpp"
#include "bidlab/sim/valuation_generator.hpp"
#include "bidlab/strategies.hpp"

namespace bidlab::sim {

struct GameResult {
  std::vector<Money> scores;  ///< final value minus payments, by agent
  std::vector<double> ranks;  ///< 1 = best; tied scores share the average rank
};

std::vector<double> average_ranks(std::span<const Money> scores);

struct ExogenousOptions {
  /// Off: every agent bidding at least the drawn price gets a copy. On: only the
  /// highest such bid wins, ties to the lowest agent id.
  bool single_winner = false;
};

/// Goods sold one at a time in `order` at prices drawn once from `m` and
/// revealed stage by stage. seq-opt agents follow their backward-induction
/// policy; every other strategy re-solves the remaining goods as a
/// simultaneous problem each stage and submits its bid for the current good.
/// Scores use the valuation table directly, as the sequential model does.
GameResult run_sequential_game(std::span<const StrategySpec> agents, const ValuationGenerator& gen,
                               const PriceModel& m, std::vector<GoodId> order, std::uint64_t seed,
                               ExogenousOptions options = {});

/// One bid vector per agent, one price draw; scores through the allocation step.
GameResult run_simultaneous_game(std::span<const StrategySpec> agents, const ValuationGenerator& gen,
                                 const PriceModel& m, std::uint64_t seed, ExogenousOptions options = {});

struct HybridAgent {
  StrategySpec strategy;
  int team = 0;
};

/// Market of the hybrid game: good names, the per-agent valuation draw, and
/// the number of units sold in each auction.
struct HybridSetup {
  std::vector<std::string> goods;
  ValuationGenerator valuations;
  int supply = 16;
};

struct HybridGameRecord {
  GameResult result;
  std::vector<Money> clearing_prices;  ///< by good
  std::vector<int> close_order;        ///< goods in the order their auctions closed
};

/// One hybrid game with endogenous prices. Every round each agent (in a fresh
/// random order) bids on all open auctions through its strategy, using its
/// team's price table with atoms raised to the current quotes; then one
/// uniformly random open auction closes. Rejected bids leave the standing bid
/// in place.
HybridGameRecord run_hybrid_game(std::span<const HybridAgent> agents, const HybridSetup& setup,
                                 std::span<const PercentilePriceTable> team_tables, std::uint64_t seed,
                                 GameLogBuffer* log = nullptr, int game_index = 0);

}  // namespace bidlab::sim
