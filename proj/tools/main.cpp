#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <functional>
#include <iostream>

#include "bidlab/errors.hpp"
#include "commands.hpp"

using namespace bidlab;

int main(int argc, char** argv) {
  CLI::App app{"bidlab: bidding under price uncertainty"};
  app.require_subcommand(1);
  cli::Options o;

  auto common = [&](CLI::App* cmd, bool needs_config) {
    auto* c = cmd->add_option("--config", o.config, "experiment config (JSON)");
    if (needs_config) c->required()->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "override the master seed");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--games", o.games, "override the game count")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", o.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  };
  auto instance_flags = [&](CLI::App* cmd) {
    cmd->add_option("--holdings", o.holdings, "comma-separated items already held");
    cmd->add_option("--market", o.market, "comma-separated items for sale (default: all not held)");
  };

  std::function<int(std::ostream&)> run;
  auto sub = [&](const char* name, const char* help, int (*fn)(const cli::Options&, std::ostream&),
                 bool needs_config = true) {
    auto* cmd = app.add_subcommand(name, help);
    common(cmd, needs_config);
    cmd->callback([&, fn] { run = [&, fn](std::ostream& out) { return fn(o, out); }; });
    return cmd;
  };

  instance_flags(sub("solve-acquisition", "acquisition values and marginal utilities", cli::solve_acquisition));
  sub("solve-mdp", "sequential-auction value table and optimal bids", cli::solve_mdp);
  instance_flags(sub("solve-completion", "completion problem at expected prices", cli::solve_completion));
  sub("solve-sp", "simultaneous-auction stochastic program", cli::solve_sp);
  auto* bid = sub("bid", "bids of one strategy on the configured instance", cli::bid);
  instance_flags(bid);
  bid->add_option("--strategy", o.strategy, "mu, xmu, ev, evmu, saa-ps, saa-exact (default: first team's)");
  sub("run-sim", "play the configured games and write per-agent results", cli::run_sim);
  auto* train = sub("train-prices", "percentile price table from training games or a game log", cli::train_prices);
  train->add_option("--log", o.input, "train from this JSONL game log instead of playing")->check(CLI::ExistingFile);
  sub("run-experiment", "games, statistics and report", cli::run_experiment);
  auto* st = sub("stats", "z-test and Wilcoxon test on a per-game CSV", cli::stats, false);
  st->add_option("--input", o.input, "CSV with game,mean_a,mean_b,rank_a,rank_b")->required()->check(CLI::ExistingFile);
  st->add_option("--names", o.names, "team names, comma-separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kConfigError;
  }

  try {
    return run(std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cli::kConfigError;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return cli::kLimitExceeded;
  } catch (const StatisticsError& e) {
    std::cerr << "statistics: " << e.what() << '\n';
    return cli::kStatisticsError;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return cli::kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kFailure;
  }
}
