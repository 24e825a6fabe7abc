#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bidlab/money.hpp"

namespace bidlab::sim {

inline constexpr const char* kGameLogSchema = "bidlab.gamelog";
inline constexpr int kGameLogVersion = 1;

/// Records of one game, kept in memory so games can run in any order and
/// still be written out by game index.
struct GameLogBuffer {
  std::vector<nlohmann::json> records;

  void bid(int game, int round, int agent, int good, const std::vector<Money>& units, const char* verdict);
  void close(int game, int round, int good, Money price, int units_sold, const nlohmann::json& awards);
  void score(int game, int agent, int team, Money score, double rank);
};

/// JSON Lines writer: the header record first, then whatever is appended.
class GameLogWriter {
 public:
  /// `meta` is copied into the header record.
  GameLogWriter(std::ostream& out, std::vector<std::string> goods, nlohmann::json meta = {});

  void append(const GameLogBuffer& buffer);

 private:
  std::ostream* out_;
};

/// Clearing prices per good, read from `close` records. Throws InvalidArgument
/// on a missing or incompatible header.
std::vector<std::vector<Money>> read_clearing_prices(std::istream& in, std::vector<std::string>* goods = nullptr);

}  // namespace bidlab::sim
