#include "bidlab/sim/tournament.hpp"

#include "bidlab/errors.hpp"
#include "bidlab/sim/parallel.hpp"

namespace bidlab::sim {

namespace {

constexpr std::uint64_t kTrainingStream = 0x7261696e;  // "rain"
constexpr std::uint64_t kTournamentStream = 0x67616d65;  // "game"

void check(const TournamentSpec& spec) {
  if (spec.team_size < 1) throw InvalidArgument("team_size must be >= 1");
  if (spec.games < 0 || spec.training_games < 0) throw InvalidArgument("game counts must be >= 0");
  if (spec.setup.goods.empty()) throw InvalidArgument("hybrid market has no goods");
  if (!spec.setup.valuations) throw InvalidArgument("hybrid market has no valuation generator");
  if (spec.setup.supply < 1) throw InvalidArgument("supply must be >= 1");
  validate(spec.team_a);
  validate(spec.team_b);
}

std::vector<HybridGameRecord> play(const std::vector<HybridAgent>& agents, const HybridSetup& setup,
                                   const std::vector<PercentilePriceTable>& tables, int games,
                                   std::uint64_t stream_seed, std::vector<GameLogBuffer>* logs, unsigned workers) {
  std::vector<HybridGameRecord> out(static_cast<std::size_t>(games));
  if (logs) logs->assign(static_cast<std::size_t>(games), {});
  parallel_for(
      out.size(),
      [&](std::size_t g) {
        GameLogBuffer* log = logs ? &(*logs)[g] : nullptr;
        out[g] = run_hybrid_game(agents, setup, tables, derive_seed(stream_seed, g), log, static_cast<int>(g));
      },
      workers);
  return out;
}

}  // namespace

std::vector<HybridAgent> make_teams(const StrategySpec& a, const StrategySpec& b, int team_size) {
  std::vector<HybridAgent> agents;
  for (int k = 0; k < team_size; ++k) agents.push_back({a, 0});
  for (int k = 0; k < team_size; ++k) agents.push_back({b, 1});
  return agents;
}

TrainingResult train_prices(const TournamentSpec& spec, std::vector<GameLogBuffer>* logs) {
  check(spec);
  const int goods = static_cast<int>(spec.setup.goods.size());
  const auto prior = PercentilePriceTable::flat(goods, spec.levels, spec.prior_price);
  const auto games = play(make_teams(spec.train_a, spec.train_b, spec.team_size), spec.setup, {prior, prior},
                          spec.training_games, derive_seed(spec.seed, kTrainingStream), logs, spec.workers);
  TrainingResult r;
  r.observed.resize(static_cast<std::size_t>(goods));
  for (const auto& g : games) {
    for (int k = 0; k < goods; ++k) r.observed[static_cast<std::size_t>(k)].push_back(g.clearing_prices[static_cast<std::size_t>(k)]);
  }
  r.table = train_price_table(r.observed, spec.levels, spec.prior_price);
  return r;
}

TournamentResult run_tournament(const TournamentSpec& spec, const PercentilePriceTable* table,
                                std::vector<GameLogBuffer>* logs) {
  check(spec);
  TournamentResult r;
  r.table = table ? *table : train_prices(spec).table;
  r.games = play(make_teams(spec.team_a, spec.team_b, spec.team_size), spec.setup, {r.table, r.table}, spec.games,
                 derive_seed(spec.seed, kTournamentStream), logs, spec.workers);
  return r;
}

TeamMeans team_means(const GameResult& r, int team_size) {
  TeamMeans m;
  const auto n = static_cast<std::size_t>(team_size);
  for (std::size_t k = 0; k < n; ++k) {
    m.a += static_cast<double>(r.scores[k]);
    m.rank_a += r.ranks[k];
    m.b += static_cast<double>(r.scores[n + k]);
    m.rank_b += r.ranks[n + k];
  }
  m.a /= team_size;
  m.b /= team_size;
  m.rank_a /= team_size;
  m.rank_b /= team_size;
  return m;
}

}  // namespace bidlab::sim
