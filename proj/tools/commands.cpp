#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "bidlab/acquisition.hpp"
#include "bidlab/config.hpp"
#include "bidlab/errors.hpp"
#include "bidlab/experiment.hpp"
#include "bidlab/report.hpp"
#include "bidlab/sequential_mdp.hpp"
#include "bidlab/sim/tournament.hpp"
#include "bidlab/simultaneous.hpp"
#include "bidlab/strategies.hpp"

namespace bidlab::cli {

namespace {

namespace fs = std::filesystem;

/// Rows printed as CSV (header first) or as aligned text.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    std::ostringstream out;
    if (format == "csv") {
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_field(r[c]);
        out << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
      return out.str();
    }
    std::vector<std::size_t> w(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        out << r[c];
        if (c + 1 < r.size()) out << std::string(w[c] - r[c].size() + 2, ' ');
      }
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out.str();
  }
};

std::string format_of(const Options& o) { return o.format.empty() ? "text" : o.format; }

ExperimentConfig load(const Options& o) {
  ExperimentConfig c = load_config(o.config);
  if (o.seed) c.seed = *o.seed;
  if (o.games) c.games.count = *o.games;
  return c;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

/// Prints the table and, with --out, also saves it as <name>.csv / .txt.
int emit(const Options& o, std::ostream& out, const Table& t, const std::string& name) {
  const std::string text = t.render(format_of(o));
  out << text;
  if (!o.out.empty()) write_text(fs::path(o.out) / (name + (format_of(o) == "csv" ? ".csv" : ".txt")), text);
  return kOk;
}

BiddingContext context(const Options& o, const ExperimentConfig& c) {
  const GoodSet all = c.universe.item_count() > 0 ? GoodSet::universe(c.universe.item_count()) : GoodSet{};
  const GoodSet held = parse_item_list(c.universe, o.holdings, "--holdings");
  const GoodSet market = o.market ? parse_item_list(c.universe, *o.market, "--market") : all - held;
  if (held.intersects(market)) throw ConfigError("--market", "holdings and market overlap");
  return {held, market};
}

std::vector<std::string> exact_row(const std::string& metric, const std::string& item, const Rational& r) {
  return {metric, item, to_string(r), to_decimal(r, 6)};
}

std::vector<std::string> money_row(const std::string& metric, const std::string& item, Money m) {
  return {metric, item, std::to_string(m), std::to_string(m)};
}

}  // namespace

int solve_acquisition(const Options& o, std::ostream& out) {
  const auto c = load(o);
  const Valuation& v = c.instance();
  const PriceModel& m = c.price_model();
  const auto ctx = context(o, c);
  const auto p = expected_prices(m);

  Table t{{"metric", "item", "value", "decimal"}, {}};
  const auto alpha = solve_acquisition(ctx.holdings, ctx.market, p, v);
  t.rows.push_back(money_row("alpha_at_expected_prices", "", alpha.value));
  t.rows.push_back({"alpha_choice", "", c.universe.describe(alpha.chosen), ""});
  t.rows.push_back(exact_row("expected_alpha", "", expected_acquisition(ctx.holdings, ctx.market, m, v)));
  for (GoodId x : ctx.market) {
    const GoodSet rest = ctx.market.without(x);
    const auto label = c.universe.item_label(x);
    t.rows.push_back(money_row("mu", label, marginal_utility(x, ctx.holdings, rest, p, v)));
    t.rows.push_back(exact_row("expected_mu", label, expected_marginal_utility(x, ctx.holdings, rest, m, v)));
  }
  return emit(o, out, t, "acquisition");
}

int solve_mdp(const Options& o, std::ostream& out) {
  const auto c = load(o);
  const Valuation& v = c.instance();
  const PriceModel& m = c.price_model();
  const auto order = c.games.order.empty() ? natural_order(v.size()) : c.games.order;
  const ValueTable values = backward_induction(v, m, order);

  Table t{{"stage", "next", "holdings", "value", "decimal", "bid"}, {}};
  for (int j = 0; j <= values.stages(); ++j) {
    for (const MdpState& s : values.states(j)) {
      const bool last = j == values.stages();
      const Rational& val = values.at(s);
      t.rows.push_back({std::to_string(j), last ? "" : c.universe.item_label(order[static_cast<std::size_t>(j)]),
                        c.universe.describe(s.holdings), to_string(val), to_decimal(val, 6),
                        last ? "" : std::to_string(optimal_bid(s, values))});
    }
  }
  return emit(o, out, t, "mdp");
}

int solve_completion(const Options& o, std::ostream& out) {
  const auto c = load(o);
  const Valuation& v = c.instance();
  const auto ctx = context(o, c);
  const auto p = expected_prices(c.price_model());
  const auto r = bidlab::solve_completion(p, v, ctx);
  Table t{{"metric", "value"}, {}};
  std::string prices;
  for (GoodId i : ctx.market) prices += (prices.empty() ? "" : " ") + c.universe.item_label(i) + "=" + std::to_string(p[static_cast<std::size_t>(i)]);
  t.rows.push_back({"prices", prices});
  t.rows.push_back({"value", std::to_string(r.value)});
  t.rows.push_back({"buy", c.universe.describe(r.buy)});
  return emit(o, out, t, "completion");
}

int solve_sp(const Options& o, std::ostream& out) {
  auto c = load(o);
  c.games.mode = GameMode::Solve;
  const auto r = bidlab::run_experiment(c);
  Table t{{"metric", "value"}, {}};
  for (const auto& [k, v] : r.facts) {
    if (k != "mode" && k != "seed") t.rows.push_back({k, v});
  }
  return emit(o, out, t, "sp");
}

int bid(const Options& o, std::ostream& out) {
  const auto c = load(o);
  StrategySpec spec;
  if (!o.strategy.empty()) {
    const auto kind = parse_strategy_kind(o.strategy);
    if (!kind) throw ConfigError("--strategy", "unknown strategy '" + o.strategy + "'");
    spec.kind = *kind;
    for (const auto& team : c.teams) {
      if (team.strategy.kind == *kind) spec = team.strategy;
    }
  } else if (!c.teams.empty()) {
    spec = c.teams.front().strategy;
  } else {
    throw ConfigError("teams", "no team configured; pass --strategy");
  }
  spec.seed = c.seed;
  const auto ctx = context(o, c);
  const Valuation& v = c.instance();
  const PriceModel& m = c.price_model();
  const BidVector bids = compute_bids(spec, m, v, ctx);
  Table t{{"item", "bid"}, {}};
  for (GoodId i : ctx.market) t.rows.push_back({c.universe.item_label(i), std::to_string(bids[static_cast<std::size_t>(i)])});
  t.rows.push_back({"expected_utility", to_decimal(expected_utility_of_bids(bids, m, v, ctx), 6)});
  return emit(o, out, t, "bids");
}

int run_sim(const Options& o, std::ostream& out) {
  auto c = load(o);
  if (c.games.mode == GameMode::Solve) throw ConfigError("games.mode", "run-sim needs sequential, simultaneous or hybrid games");
  c.stats = {false, false, false};
  const auto r = bidlab::run_experiment(c);
  Table t{{"game", "agent", "team", "score", "rank"}, {}};
  for (std::size_t g = 0; g < r.results.size(); ++g) {
    for (std::size_t a = 0; a < r.results[g].scores.size(); ++a) {
      t.rows.push_back({std::to_string(g), std::to_string(a), r.team_names[static_cast<std::size_t>(r.team_of_agent[a])],
                        std::to_string(r.results[g].scores[a]), format_double(r.results[g].ranks[a])});
    }
  }
  if (!o.out.empty()) write_artifacts(r, c, o.out);
  out << t.render(format_of(o));
  return kOk;
}

int train_prices(const Options& o, std::ostream& out) {
  auto c = load(o);
  sim::PercentilePriceTable table;
  std::vector<sim::GameLogBuffer> logs;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    std::vector<std::string> goods;
    const auto observed = sim::read_clearing_prices(in, &goods);
    if (goods != c.universe.good_names()) throw ConfigError("goods", "game log goods differ from the config");
    table = sim::train_price_table(observed, c.prices.levels, c.prices.prior);
  } else {
    if (!c.prices.percentile) throw ConfigError("prices.model", "training needs the percentile model");
    sim::TournamentSpec spec;
    spec.setup = c.hybrid_setup();
    spec.seed = c.seed;
    spec.team_size = c.teams.empty() ? 4 : c.teams.front().size;
    spec.training_games = o.games ? *o.games : c.games.training;
    spec.train_a = c.games.train_a;
    spec.train_b = c.games.train_b;
    spec.prior_price = c.prices.prior;
    spec.levels = c.prices.levels;
    spec.workers = c.games.workers;
    table = sim::train_prices(spec, o.out.empty() ? nullptr : &logs).table;
  }
  if (!o.out.empty()) {
    write_text(fs::path(o.out) / "price_table.json", table.to_json().dump(2) + "\n");
    if (!logs.empty()) {
      fs::create_directories(o.out);
      std::ofstream log(fs::path(o.out) / "training_log.jsonl", std::ios::binary);
      sim::GameLogWriter w(log, c.universe.good_names(), {{"seed", c.seed}});
      for (const auto& b : logs) w.append(b);
    }
  }
  Table t{{"good", "level", "price"}, {}};
  for (int g = 0; g < table.goods(); ++g) {
    for (std::size_t k = 0; k < table.levels.size(); ++k) {
      t.rows.push_back({c.universe.good_name(g), format_double(table.levels[k]),
                        std::to_string(table.prices[static_cast<std::size_t>(g)][k])});
    }
  }
  out << t.render(format_of(o));
  return kOk;
}

int run_experiment(const Options& o, std::ostream& out) {
  const auto c = load(o);
  const auto r = bidlab::run_experiment(c);
  const std::string format = o.format.empty() ? c.output.format : o.format;
  const std::string dir = o.out.empty() ? c.output.dir : o.out;
  if (!dir.empty()) {
    auto cfg = c;
    cfg.output.format = format;
    write_artifacts(r, cfg, dir);
  }
  if (format == "csv" && r.mode != GameMode::Solve) {
    out << emit_table(r.comparisons, TableFormat::Csv);
  } else {
    out << summary_text(r);
  }
  return kOk;
}

int stats(const Options& o, std::ostream& out) {
  std::ifstream in(o.input);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto rows = parse_games_csv(buf.str());
  std::string a = "a", b = "b";
  if (auto comma = o.names.find(','); comma != std::string::npos) {
    a = o.names.substr(0, comma);
    b = o.names.substr(comma + 1);
  }
  const std::vector<ComparisonReport> reports{compare_teams(a, b, rows, StatsConfig{}, true)};
  const auto fmt = parse_format(format_of(o));
  out << emit_table(reports, fmt);
  if (fmt == TableFormat::Text) {
    for (const auto& [name, ci] : {std::pair{a, reports[0].ci_a}, std::pair{b, reports[0].ci_b}}) {
      if (ci) out << name << ": mean " << format_double(ci->mean) << " ± " << format_double(ci->half_width) << " (95%)\n";
    }
  }
  if (!o.out.empty()) {
    write_text(fs::path(o.out) / "report.csv", emit_table(reports, TableFormat::Csv));
    write_text(fs::path(o.out) / "ci.csv", emit_ci_csv(reports));
  }
  return kOk;
}

}  // namespace bidlab::cli
