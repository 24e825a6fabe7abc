#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace bidlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kConfigError = 2;
inline constexpr int kLimitExceeded = 3;
inline constexpr int kStatisticsError = 4;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<int> games;
  std::string format;  ///< empty: the config's output.format, else text

  // Command-specific.
  std::string holdings;
  std::optional<std::string> market;
  std::string strategy;
  std::string input;
  std::string names = "a,b";
};

int solve_acquisition(const Options& o, std::ostream& out);
int solve_mdp(const Options& o, std::ostream& out);
int solve_completion(const Options& o, std::ostream& out);
int solve_sp(const Options& o, std::ostream& out);
int bid(const Options& o, std::ostream& out);
int run_sim(const Options& o, std::ostream& out);
int train_prices(const Options& o, std::ostream& out);
int run_experiment(const Options& o, std::ostream& out);
int stats(const Options& o, std::ostream& out);

}  // namespace bidlab::cli
