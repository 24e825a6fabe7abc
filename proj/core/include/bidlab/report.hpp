#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bidlab/config.hpp"
#include "bidlab/stats.hpp"

namespace bidlab {

/// Team means of one game (ranks are averages over the team's agents).
struct GameRow {
  int game = 0;
  double mean_a = 0;
  double mean_b = 0;
  double rank_a = 0;
  double rank_b = 0;
};

/// One row of a comparison table: team a versus team b.
struct ComparisonReport {
  std::string team_a;
  std::string team_b;
  int games = 0;
  std::optional<double> mean_a;
  std::optional<double> mean_b;
  std::optional<double> z_test;    ///< confidence that team b's mean exceeds team a's
  std::optional<double> wilcoxon;  ///< two-sided p on per-game average ranks
  std::optional<MeanCI> ci_a;
  std::optional<MeanCI> ci_b;
  std::vector<std::string> notes;  ///< statistics that could not be computed, and why
};

/// Means, tests and intervals over the per-game team means. With `strict`,
/// statistics errors propagate; otherwise they become notes.
ComparisonReport compare_teams(std::string team_a, std::string team_b, std::span<const GameRow> games,
                               const StatsConfig& stats, bool strict = false);

enum class TableFormat { Csv, Text };
TableFormat parse_format(std::string_view s);

/// Columns: team pair, both means, z-test, Wilcoxon, games. Deterministic.
std::string emit_table(std::span<const ComparisonReport> reports, TableFormat format);
/// Inverse of the CSV form of emit_table (means, p-values and counts only).
std::vector<ComparisonReport> parse_table_csv(std::string_view csv);

/// Plot-ready 95% intervals on each team's mean: team,n,mean,se,lo,hi.
std::string emit_ci_csv(std::span<const ComparisonReport> reports);

std::string emit_games_csv(std::span<const GameRow> rows);
/// Reads game,mean_a,mean_b,rank_a,rank_b (header required).
std::vector<GameRow> parse_games_csv(std::string_view csv);

/// Shortest text that reads back to the same double.
std::string format_double(double x);

/// Splits one CSV line, honouring double quotes.
std::vector<std::string> split_csv_line(std::string_view line);
std::string csv_field(std::string_view s);

}  // namespace bidlab
