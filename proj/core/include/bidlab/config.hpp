#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bidlab/goods.hpp"
#include "bidlab/price_model.hpp"
#include "bidlab/sim/games.hpp"
#include "bidlab/sim/price_table.hpp"
#include "bidlab/sim/valuation_generator.hpp"
#include "bidlab/strategies.hpp"
#include "bidlab/valuation.hpp"

namespace bidlab {

// Experiment configuration, read from JSON. Top-level keys: goods, valuation,
// prices, supply, teams, games, seed, stats, output. See README for the schema.

struct TeamConfig {
  std::string name;
  StrategySpec strategy;
  int size = 1;
};

enum class GameMode { Solve, Sequential, Simultaneous, Hybrid };

const char* to_string(GameMode m);

struct GamesConfig {
  GameMode mode = GameMode::Solve;
  int count = 0;
  int training = 500;
  StrategySpec train_a{StrategyKind::EVMU};
  StrategySpec train_b{StrategyKind::MU};
  std::vector<GoodId> order;  ///< sequential auction order over items; empty = natural
  bool single_winner = false;
  unsigned workers = 0;
};

struct StatsConfig {
  bool z_test = true;
  bool wilcoxon = true;
  bool ci = true;
};

struct OutputConfig {
  std::string dir;
  std::string format = "csv";  ///< csv | text
  bool log = true;
};

enum class ValuationKind { Table, Bundles, Pairs, Hotel };

struct ValuationConfig {
  ValuationKind kind = ValuationKind::Table;
  std::optional<Valuation> fixed;  ///< Table and Bundles
  sim::PairsParams pairs;
  sim::HotelParams hotel;
};

struct PriceConfig {
  std::optional<PriceModel> model;  ///< exogenous models
  bool percentile = false;          ///< hybrid games: trained percentile tables
  Money prior = 0;
  std::vector<double> levels = sim::default_percentile_levels();
  std::optional<sim::PercentilePriceTable> table;  ///< preloaded instead of trained
};

struct ExperimentConfig {
  Universe universe;
  ValuationConfig valuation;
  PriceConfig prices;
  int auction_supply = 16;  ///< units per hybrid auction
  std::vector<TeamConfig> teams;
  GamesConfig games;
  std::uint64_t seed = 0;
  StatsConfig stats;
  OutputConfig output;

  /// Draws per-agent valuations: the fixed instance or the configured generator.
  sim::ValuationGenerator generator() const;
  /// Fixed instance valuation; throws ConfigError("valuation") for generators.
  const Valuation& instance() const;
  /// Exogenous price model; throws ConfigError("prices") when absent.
  const PriceModel& price_model() const;
  /// Hybrid market description.
  sim::HybridSetup hybrid_setup() const;
};

/// Throws ConfigError with the offending field path. Relative paths inside the
/// config (price tables) resolve against `base_dir`.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Item sets written as item labels ("camera", "hotel#1"), for CLI flags.
GoodSet parse_item_list(const Universe& u, const std::string& csv, const std::string& what);

}  // namespace bidlab
