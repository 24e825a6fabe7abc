#pragma once

#include <cstdint>
#include <vector>

#include "bidlab/sim/games.hpp"
#include "bidlab/sim/price_table.hpp"

namespace bidlab::sim {

/// Team-versus-team hybrid games after a price-table training phase.
struct TournamentSpec {
  StrategySpec team_a;
  StrategySpec team_b;
  int team_size = 4;
  int games = 100;
  std::uint64_t seed = 0;
  HybridSetup setup;

  // Training: games between two reference teams, all starting from a flat
  // table at `prior_price`. The observed clearing prices become the shared table.
  int training_games = 500;
  StrategySpec train_a{StrategyKind::EVMU};
  StrategySpec train_b{StrategyKind::MU};
  Money prior_price = 0;
  std::vector<double> levels = default_percentile_levels();

  unsigned workers = 0;  ///< 0 = hardware concurrency
};

/// Agents 0 … team_size−1 form team 0 (team_a); the rest team 1.
std::vector<HybridAgent> make_teams(const StrategySpec& a, const StrategySpec& b, int team_size);

/// Clearing prices per good observed over the training games, plus the table
/// trained from them. Logs (if given) get one buffer per training game.
struct TrainingResult {
  std::vector<std::vector<Money>> observed;
  PercentilePriceTable table;
};
TrainingResult train_prices(const TournamentSpec& spec, std::vector<GameLogBuffer>* logs = nullptr);

struct TournamentResult {
  PercentilePriceTable table;
  std::vector<HybridGameRecord> games;  ///< by game index
};

/// Trains (unless `table` is given) and plays spec.games games. Game g uses
/// a seed derived from the master seed and g alone.
TournamentResult run_tournament(const TournamentSpec& spec, const PercentilePriceTable* table = nullptr,
                                std::vector<GameLogBuffer>* logs = nullptr);

/// Mean score of each team in one game.
struct TeamMeans {
  double a = 0;
  double b = 0;
  double rank_a = 0;
  double rank_b = 0;
};
TeamMeans team_means(const GameResult& r, int team_size);

}  // namespace bidlab::sim
