#include "bidlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bidlab/errors.hpp"

namespace bidlab {

double normal_cdf(double x) {
  const double ax = std::fabs(x);
  double tail = 0;
  if (ax <= 37) {
    const double e = std::exp(-ax * ax / 2);
    if (ax < 7.07106781186547) {
      double num = 3.52624965998911e-02 * ax + 0.700383064443688;
      num = num * ax + 6.37396220353165;
      num = num * ax + 33.912866078383;
      num = num * ax + 112.079291497871;
      num = num * ax + 221.213596169931;
      num = num * ax + 220.206867912376;
      double den = 8.83883476483184e-02 * ax + 1.75566716318264;
      den = den * ax + 16.064177579207;
      den = den * ax + 86.7807322029461;
      den = den * ax + 296.564248779674;
      den = den * ax + 637.333633378831;
      den = den * ax + 793.826512519948;
      den = den * ax + 440.413735824752;
      tail = e * num / den;
    } else {
      // Continued fraction for the far tail.
      double b = ax + 0.65;
      b = ax + 4 / b;
      b = ax + 3 / b;
      b = ax + 2 / b;
      b = ax + 1 / b;
      tail = e / b / 2.506628274631;
    }
  }
  return x > 0 ? 1 - tail : tail;
}

double sample_mean(std::span<const double> xs) {
  if (xs.empty()) throw StatisticsError("mean of an empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw StatisticsError("variance needs at least 2 values");
  const double m = sample_mean(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

double z_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw StatisticsError("z-test needs at least 2 values per sample");
  const double diff = sample_mean(b) - sample_mean(a);
  const double var = sample_variance(a) / static_cast<double>(a.size()) +
                     sample_variance(b) / static_cast<double>(b.size());
  if (var == 0) {
    if (diff == 0) throw DegenerateVariance("z-test: both samples are constant and equal");
    return diff > 0 ? 1.0 : 0.0;
  }
  return normal_cdf(diff / std::sqrt(var));
}

namespace {

/// Nonzero differences with doubled average ranks (so ties stay integral).
struct SignedRanks {
  std::vector<std::int64_t> rank2;
  std::vector<bool> positive;
  std::vector<std::int64_t> tie_sizes;
  std::int64_t w2 = 0;  ///< doubled W+
  std::int64_t total2 = 0;
};

SignedRanks signed_ranks(std::span<const std::pair<double, double>> pairs) {
  std::vector<double> d;
  for (const auto& [a, b] : pairs) {
    if (a - b != 0) d.push_back(a - b);
  }
  std::vector<std::size_t> idx(d.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return std::fabs(d[x]) < std::fabs(d[y]); });
  SignedRanks r;
  r.rank2.resize(d.size());
  r.positive.resize(d.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j < idx.size() && std::fabs(d[idx[j]]) == std::fabs(d[idx[i]])) ++j;
    // Ranks i+1 … j averaged, doubled: (i+1) + j.
    const auto shared = static_cast<std::int64_t>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) r.rank2[idx[k]] = shared;
    r.tie_sizes.push_back(static_cast<std::int64_t>(j - i));
    i = j;
  }
  for (std::size_t k = 0; k < d.size(); ++k) {
    r.positive[k] = d[k] > 0;
    r.total2 += r.rank2[k];
    if (r.positive[k]) r.w2 += r.rank2[k];
  }
  return r;
}

void require_pairs(const SignedRanks& r) {
  if (r.rank2.size() < static_cast<std::size_t>(kWilcoxonMinPairs)) {
    throw TooFewPairs("Wilcoxon test needs at least " + std::to_string(kWilcoxonMinPairs) +
                      " nonzero differences, got " + std::to_string(r.rank2.size()));
  }
}

WilcoxonResult exact_from(const SignedRanks& r) {
  const std::size_t n = r.rank2.size();
  if (n > 60) throw InvalidArgument("exact Wilcoxon distribution limited to 60 pairs");
  // count[s]: sign patterns whose doubled positive-rank sum is s.
  std::vector<std::uint64_t> count(static_cast<std::size_t>(r.total2) + 1, 0);
  count[0] = 1;
  std::int64_t reach = 0;
  for (std::int64_t rk : r.rank2) {
    for (std::int64_t s = reach; s >= 0; --s) count[static_cast<std::size_t>(s + rk)] += count[static_cast<std::size_t>(s)];
    reach += rk;
  }
  const std::int64_t observed = std::llabs(2 * r.w2 - r.total2);
  long double extreme = 0;
  for (std::int64_t s = 0; s <= r.total2; ++s) {
    if (std::llabs(2 * s - r.total2) >= observed) extreme += static_cast<long double>(count[static_cast<std::size_t>(s)]);
  }
  WilcoxonResult out;
  out.p = static_cast<double>(extreme / std::ldexp(1.0L, static_cast<int>(n)));
  out.w_plus = static_cast<double>(r.w2) / 2;
  out.n = static_cast<int>(n);
  out.exact = true;
  return out;
}

WilcoxonResult normal_from(const SignedRanks& r) {
  const double n = static_cast<double>(r.rank2.size());
  const double w = static_cast<double>(r.w2) / 2;
  const double mu = n * (n + 1) / 4;
  double var = n * (n + 1) * (2 * n + 1) / 24;
  for (std::int64_t t : r.tie_sizes) var -= static_cast<double>(t * t * t - t) / 48;
  WilcoxonResult out;
  out.w_plus = w;
  out.n = static_cast<int>(r.rank2.size());
  if (var <= 0) {
    out.p = 1;
    return out;
  }
  const double z = std::max(0.0, std::fabs(w - mu) - 0.5) / std::sqrt(var);
  out.p = std::min(1.0, 2 * normal_cdf(-z));
  return out;
}

}  // namespace

WilcoxonResult wilcoxon_exact(std::span<const std::pair<double, double>> pairs) {
  const auto r = signed_ranks(pairs);
  require_pairs(r);
  return exact_from(r);
}

WilcoxonResult wilcoxon_normal(std::span<const std::pair<double, double>> pairs) {
  const auto r = signed_ranks(pairs);
  require_pairs(r);
  return normal_from(r);
}

WilcoxonResult wilcoxon_signed_rank(std::span<const std::pair<double, double>> pairs) {
  const auto r = signed_ranks(pairs);
  require_pairs(r);
  return r.rank2.size() <= static_cast<std::size_t>(kWilcoxonExactMax) ? exact_from(r) : normal_from(r);
}

MeanCI mean_ci(std::span<const double> xs) {
  MeanCI ci;
  ci.n = static_cast<int>(xs.size());
  ci.mean = sample_mean(xs);
  if (xs.size() >= 2) ci.se = std::sqrt(sample_variance(xs) / static_cast<double>(xs.size()));
  ci.half_width = kZ95 * ci.se;
  ci.lo = ci.mean - ci.half_width;
  ci.hi = ci.mean + ci.half_width;
  return ci;
}

}  // namespace bidlab
