#include "bidlab/sim/game_log.hpp"

#include <istream>
#include <ostream>

#include "bidlab/errors.hpp"

namespace bidlab::sim {

using nlohmann::json;

void GameLogBuffer::bid(int game, int round, int agent, int good, const std::vector<Money>& units,
                        const char* verdict) {
  records.push_back(json{{"record", "bid"}, {"game", game},   {"round", round},    {"agent", agent},
                         {"good", good},    {"units", units}, {"verdict", verdict}});
}

void GameLogBuffer::close(int game, int round, int good, Money price, int units_sold, const json& awards) {
  records.push_back(json{{"record", "close"}, {"game", game},           {"round", round}, {"good", good},
                         {"price", price},    {"units_sold", units_sold}, {"awards", awards}});
}

void GameLogBuffer::score(int game, int agent, int team, Money score, double rank) {
  records.push_back(json{{"record", "score"}, {"game", game}, {"agent", agent},
                         {"team", team},      {"score", score}, {"rank", rank}});
}

GameLogWriter::GameLogWriter(std::ostream& out, std::vector<std::string> goods, json meta) : out_(&out) {
  json header{{"record", "header"}, {"schema", kGameLogSchema}, {"version", kGameLogVersion}, {"goods", goods}};
  if (meta.is_object()) {
    for (auto& [k, v] : meta.items()) header[k] = v;
  }
  *out_ << header.dump() << '\n';
}

void GameLogWriter::append(const GameLogBuffer& buffer) {
  for (const auto& r : buffer.records) *out_ << r.dump() << '\n';
}

std::vector<std::vector<Money>> read_clearing_prices(std::istream& in, std::vector<std::string>* goods) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("game log is empty");
  const json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || header.value("record", "") != "header" ||
      header.value("schema", "") != kGameLogSchema) {
    throw InvalidArgument("game log lacks a bidlab header record");
  }
  if (header.value("version", 0) != kGameLogVersion) {
    throw InvalidArgument("unsupported game log version " + header.value("version", json(0)).dump());
  }
  const auto names = header.at("goods").get<std::vector<std::string>>();
  if (goods) *goods = names;

  std::vector<std::vector<Money>> prices(names.size());
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const json r = json::parse(line, nullptr, false);
    if (r.is_discarded()) throw InvalidArgument("game log line " + std::to_string(lineno) + " is not JSON");
    if (r.value("record", "") != "close") continue;
    const int g = r.at("good").get<int>();
    if (g < 0 || static_cast<std::size_t>(g) >= prices.size()) {
      throw InvalidArgument("game log line " + std::to_string(lineno) + " names an unknown good");
    }
    prices[static_cast<std::size_t>(g)].push_back(r.at("price").get<Money>());
  }
  return prices;
}

}  // namespace bidlab::sim
