#include "bidlab/experiment.hpp"

#include <fstream>
#include <sstream>

#include "bidlab/acquisition.hpp"
#include "bidlab/errors.hpp"
#include "bidlab/sim/parallel.hpp"
#include "bidlab/sim/tournament.hpp"
#include "bidlab/simultaneous.hpp"

namespace bidlab {

namespace {

constexpr std::uint64_t kExogenousStream = 0x65786f67;  // "exog"

std::string bids_text(const Universe& u, const BidVector& bids) {
  std::string out;
  for (GoodId i = 0; i < u.item_count(); ++i) {
    if (!out.empty()) out += ' ';
    out += u.item_label(i) + "=" + std::to_string(bids[static_cast<std::size_t>(i)]);
  }
  return out;
}

void solve_facts(const ExperimentConfig& c, ExperimentReport& r) {
  const Valuation& v = c.instance();
  const PriceModel& m = c.price_model();
  const auto ctx = BiddingContext::everything(v.size());
  const auto sp = solve_stochastic_program(m, v, ctx);
  const auto ev = ev_method_bids(m, v, ctx);
  const auto eev = expected_utility_of_bids(ev, m, v, ctx);
  const auto ws = expected_acquisition(GoodSet{}, v.universe(), m, v);
  const auto completion = solve_completion(expected_prices(m), v, ctx);
  r.facts.emplace_back("sp_value", to_string(sp.value));
  r.facts.emplace_back("sp_bids", bids_text(c.universe, sp.bids));
  r.facts.emplace_back("ev_bids", bids_text(c.universe, ev));
  r.facts.emplace_back("ev_value", to_string(eev));
  r.facts.emplace_back("vsi", to_string(sp.value - eev));
  r.facts.emplace_back("ws_value", to_string(ws));
  r.facts.emplace_back("completion_value", std::to_string(completion.value));
  r.facts.emplace_back("completion_buy", c.universe.describe(completion.buy));
}

void summarize_teams(const ExperimentConfig& c, ExperimentReport& r) {
  const std::size_t teams = r.team_names.size();
  for (const auto& g : r.results) {
    std::vector<double> score(teams, 0), rank(teams, 0), count(teams, 0);
    for (std::size_t a = 0; a < g.scores.size(); ++a) {
      const auto t = static_cast<std::size_t>(r.team_of_agent[a]);
      score[t] += static_cast<double>(g.scores[a]);
      rank[t] += g.ranks[a];
      count[t] += 1;
    }
    for (std::size_t t = 0; t < teams; ++t) {
      score[t] /= count[t];
      rank[t] /= count[t];
    }
    r.team_mean_scores.push_back(std::move(score));
    r.team_mean_ranks.push_back(std::move(rank));
  }
  for (std::size_t i = 0; i < teams; ++i) {
    for (std::size_t j = i + 1; j < teams; ++j) {
      r.comparisons.push_back(compare_teams(r.team_names[i], r.team_names[j], r.game_rows(i, j), c.stats));
    }
  }
  if (teams == 1 && !r.results.empty()) {
    std::vector<double> xs;
    for (const auto& row : r.team_mean_scores) xs.push_back(row[0]);
    const MeanCI ci = mean_ci(xs);
    r.facts.emplace_back("mean_" + r.team_names[0], format_double(ci.mean));
    r.facts.emplace_back("se_" + r.team_names[0], format_double(ci.se));
  }
}

void run_exogenous(const ExperimentConfig& c, ExperimentReport& r) {
  std::vector<StrategySpec> agents;
  for (std::size_t t = 0; t < c.teams.size(); ++t) {
    for (int k = 0; k < c.teams[t].size; ++k) {
      agents.push_back(c.teams[t].strategy);
      r.team_of_agent.push_back(static_cast<int>(t));
    }
  }
  const auto gen = c.generator();
  const PriceModel& m = c.price_model();
  const auto order = c.games.order.empty() ? natural_order(m.item_count()) : c.games.order;
  const sim::ExogenousOptions opts{c.games.single_winner};
  const std::uint64_t stream = derive_seed(c.seed, kExogenousStream);
  r.results.resize(static_cast<std::size_t>(c.games.count));
  sim::parallel_for(
      r.results.size(),
      [&](std::size_t g) {
        const auto seed = derive_seed(stream, g);
        r.results[g] = c.games.mode == GameMode::Sequential
                           ? sim::run_sequential_game(agents, gen, m, order, seed, opts)
                           : sim::run_simultaneous_game(agents, gen, m, seed, opts);
      },
      c.games.workers);
}

void run_hybrid(const ExperimentConfig& c, ExperimentReport& r) {
  sim::TournamentSpec spec;
  spec.team_a = c.teams[0].strategy;
  spec.team_b = c.teams[1].strategy;
  spec.team_size = c.teams[0].size;
  spec.games = c.games.count;
  spec.seed = c.seed;
  spec.setup = c.hybrid_setup();
  spec.training_games = c.games.training;
  spec.train_a = c.games.train_a;
  spec.train_b = c.games.train_b;
  spec.prior_price = c.prices.prior;
  spec.levels = c.prices.levels;
  spec.workers = c.games.workers;

  sim::PercentilePriceTable table;
  if (c.prices.table) {
    table = *c.prices.table;
  } else {
    table = sim::train_prices(spec, c.output.log ? &r.training_logs : nullptr).table;
    r.facts.emplace_back("training_games", std::to_string(spec.training_games));
  }
  auto result = sim::run_tournament(spec, &table, c.output.log ? &r.logs : nullptr);
  r.table = result.table;
  for (auto& g : result.games) r.results.push_back(std::move(g.result));
  for (int k = 0; k < 2 * spec.team_size; ++k) r.team_of_agent.push_back(k < spec.team_size ? 0 : 1);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace

std::vector<GameRow> ExperimentReport::game_rows(std::size_t i, std::size_t j) const {
  std::vector<GameRow> rows;
  if (j >= team_names.size()) return rows;
  for (std::size_t g = 0; g < team_mean_scores.size(); ++g) {
    rows.push_back({static_cast<int>(g), team_mean_scores[g][i], team_mean_scores[g][j], team_mean_ranks[g][i],
                    team_mean_ranks[g][j]});
  }
  return rows;
}

const std::string* ExperimentReport::fact(const std::string& key) const {
  for (const auto& [k, v] : facts) {
    if (k == key) return &v;
  }
  return nullptr;
}

ExperimentReport run_experiment(const ExperimentConfig& c) {
  ExperimentReport r;
  r.mode = c.games.mode;
  r.facts.emplace_back("mode", to_string(c.games.mode));
  r.facts.emplace_back("seed", std::to_string(c.seed));
  for (const auto& t : c.teams) r.team_names.push_back(t.name);

  switch (c.games.mode) {
    case GameMode::Solve: solve_facts(c, r); return r;
    case GameMode::Sequential:
    case GameMode::Simultaneous: run_exogenous(c, r); break;
    case GameMode::Hybrid: run_hybrid(c, r); break;
  }
  r.facts.emplace_back("games", std::to_string(r.results.size()));
  summarize_teams(c, r);
  return r;
}

std::string summary_text(const ExperimentReport& r) {
  std::ostringstream out;
  for (const auto& [k, v] : r.facts) out << k << ": " << v << '\n';
  if (!r.comparisons.empty()) {
    out << '\n' << emit_table(r.comparisons, TableFormat::Text);
    for (const auto& c : r.comparisons) {
      for (const auto& note : c.notes) out << "note (" << c.team_a << " vs " << c.team_b << "): " << note << '\n';
    }
  }
  return out.str();
}

void write_artifacts(const ExperimentReport& r, const ExperimentConfig& c, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const TableFormat fmt = parse_format(c.output.format);
  write_file(dir / "summary.txt", summary_text(r));
  if (r.mode == GameMode::Solve) {
    std::ostringstream csv;
    csv << "key,value\n";
    for (const auto& [k, v] : r.facts) csv << csv_field(k) << ',' << csv_field(v) << '\n';
    write_file(dir / "solve.csv", csv.str());
    return;
  }
  write_file(dir / (fmt == TableFormat::Csv ? "report.csv" : "report.txt"), emit_table(r.comparisons, fmt));
  write_file(dir / "ci.csv", emit_ci_csv(r.comparisons));
  if (r.team_names.size() >= 2) write_file(dir / "games.csv", emit_games_csv(r.game_rows(0, 1)));

  std::ostringstream agents;
  agents << "game,agent,team,score,rank\n";
  for (std::size_t g = 0; g < r.results.size(); ++g) {
    for (std::size_t a = 0; a < r.results[g].scores.size(); ++a) {
      agents << g << ',' << a << ',' << csv_field(r.team_names[static_cast<std::size_t>(r.team_of_agent[a])]) << ','
             << r.results[g].scores[a] << ',' << format_double(r.results[g].ranks[a]) << '\n';
    }
  }
  write_file(dir / "agents.csv", agents.str());

  if (r.table) write_file(dir / "price_table.json", r.table->to_json().dump(2) + "\n");
  const nlohmann::json meta{{"seed", c.seed}, {"teams", r.team_names}};
  auto write_log = [&](const char* name, const std::vector<sim::GameLogBuffer>& logs) {
    if (logs.empty()) return;
    std::ofstream out(dir / name, std::ios::binary);
    sim::GameLogWriter w(out, c.universe.good_names(), meta);
    for (const auto& b : logs) w.append(b);
  };
  write_log("training_log.jsonl", r.training_logs);
  write_log("game_log.jsonl", r.logs);
}

}  // namespace bidlab
