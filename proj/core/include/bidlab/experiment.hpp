#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bidlab/config.hpp"
#include "bidlab/report.hpp"
#include "bidlab/sim/game_log.hpp"
#include "bidlab/sim/games.hpp"
#include "bidlab/sim/price_table.hpp"

namespace bidlab {

struct ExperimentReport {
  GameMode mode = GameMode::Solve;
  std::vector<std::pair<std::string, std::string>> facts;  ///< solver values and run parameters, in order
  std::vector<std::string> team_names;
  std::vector<int> team_of_agent;
  std::vector<sim::GameResult> results;              ///< by game index
  std::vector<std::vector<double>> team_mean_scores;  ///< [game][team]
  std::vector<std::vector<double>> team_mean_ranks;   ///< [game][team]
  std::vector<ComparisonReport> comparisons;          ///< every team pair (i < j)
  std::optional<sim::PercentilePriceTable> table;
  std::vector<sim::GameLogBuffer> logs;           ///< one per game when logging
  std::vector<sim::GameLogBuffer> training_logs;  ///< hybrid training games

  /// Per-game rows for teams i and j.
  std::vector<GameRow> game_rows(std::size_t i = 0, std::size_t j = 1) const;
  const std::string* fact(const std::string& key) const;
};

/// Runs whatever the config describes. A pure function of the config: the
/// same config (seed included) gives the same report.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Writes report, summary, per-game and per-agent CSVs, interval data, the
/// price table and game logs under `dir` (created if needed).
void write_artifacts(const ExperimentReport& report, const ExperimentConfig& config, const std::filesystem::path& dir);

std::string summary_text(const ExperimentReport& report);

}  // namespace bidlab
