#pragma once

#include <span>
#include <utility>

namespace bidlab {

/// Standard normal cdf. Hart's rational approximation in West's double
/// precision form; absolute error below 1e-14 on the whole line. Computed
/// through the upper tail, so normal_cdf(x) + normal_cdf(−x) == 1 up to rounding.
double normal_cdf(double x);

double sample_mean(std::span<const double> xs);
/// Unbiased sample variance (n − 1 denominator); needs n >= 2.
double sample_variance(std::span<const double> xs);

/// One-sided two-sample z-test: Φ((mean_b − mean_a) / sqrt(s_a²/n_a + s_b²/n_b)),
/// the confidence that b's mean exceeds a's. Throws StatisticsError if either
/// sample has fewer than 2 values and DegenerateVariance if both variances are
/// 0 with equal means (0 or 1 when the means differ).
double z_test(std::span<const double> a, std::span<const double> b);

struct WilcoxonResult {
  double p = 1;       ///< two-sided
  double w_plus = 0;  ///< sum of ranks of positive differences (a − b)
  int n = 0;          ///< pairs with a nonzero difference
  bool exact = false;
};

inline constexpr int kWilcoxonExactMax = 20;
inline constexpr int kWilcoxonMinPairs = 6;

/// Signed-rank test on per-pair differences a − b. Zero differences are
/// dropped and tied magnitudes share their average rank. Exact null
/// distribution up to kWilcoxonExactMax pairs, normal approximation (with
/// continuity and tie corrections) above. Throws TooFewPairs below
/// kWilcoxonMinPairs nonzero differences.
WilcoxonResult wilcoxon_signed_rank(std::span<const std::pair<double, double>> pairs);

/// The two code paths, callable directly (exact accepts up to 60 pairs).
WilcoxonResult wilcoxon_exact(std::span<const std::pair<double, double>> pairs);
WilcoxonResult wilcoxon_normal(std::span<const std::pair<double, double>> pairs);

inline constexpr double kZ95 = 1.96;

struct MeanCI {
  double mean = 0;
  double se = 0;
  double half_width = 0;  ///< kZ95 · se
  double lo = 0;
  double hi = 0;
  int n = 0;
};

/// 95% normal-theory interval on the mean; se is 0 for a single value.
MeanCI mean_ci(std::span<const double> xs);

}  // namespace bidlab
