#pragma once

#include <stdexcept>
#include <string>

namespace bidlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad valuation entries, invalid distributions, bad sizes.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class MonotonicityViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class OverlapError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class MembershipError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A configured enumeration cap was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class ScenarioExplosion : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

class CandidateExplosion : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

/// Statistical test preconditions not met.
class StatisticsError : public Error {
 public:
  using Error::Error;
};

class DegenerateVariance : public StatisticsError {
 public:
  using StatisticsError::StatisticsError;
};

class TooFewPairs : public StatisticsError {
 public:
  using StatisticsError::StatisticsError;
};

/// Configuration file problems; `path` names the offending field (e.g. "prices.goods.camera").
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace bidlab
