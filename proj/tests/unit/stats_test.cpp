#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bidlab/errors.hpp"
#include "bidlab/stats.hpp"

namespace bidlab {
namespace {

using Pairs = std::vector<std::pair<double, double>>;

// Φ at −5, −4.5, …, 5, computed to 20 significant digits with mpmath.
constexpr double kNormalCdfReference[21] = {
    2.8665157187919391167e-07, 3.3976731247300604017e-06, 3.1671241833119921254e-05, 2.3262907903552503635e-04,
    1.3498980316300945267e-03, 6.2096653257761351670e-03, 2.2750131948179207200e-02, 6.6807201268858066004e-02,
    1.5865525393145705141e-01, 3.0853753872598689636e-01, 0.5,
    6.9146246127401310364e-01, 8.4134474606854294859e-01, 9.3319279873114193400e-01, 9.7724986805182079280e-01,
    9.9379033467422386483e-01, 9.9865010196836990547e-01, 9.9976737092096447496e-01, 9.9996832875816688008e-01,
    9.9999660232687526994e-01, 9.9999971334842812081e-01,
};

// Two-sided p by enumerating every sign pattern over the (average) ranks of
// the nonzero differences. Ranks are doubled so ties stay integral.
double brute_force_wilcoxon(const Pairs& pairs) {
  std::vector<double> mag;
  std::vector<bool> positive;
  for (auto [a, b] : pairs) {
    if (a == b) continue;
    mag.push_back(std::abs(a - b));
    positive.push_back(a > b);
  }
  const std::size_t n = mag.size();
  std::vector<long> rank2(n);
  for (std::size_t i = 0; i < n; ++i) {
    long below = 0, equal = 0;
    for (std::size_t j = 0; j < n; ++j) {
      below += mag[j] < mag[i];
      equal += mag[j] == mag[i];
    }
    rank2[i] = 2 * below + equal + 1;  // twice the average of ranks below+1 … below+equal
  }
  long total = 0, observed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += rank2[i];
    if (positive[i]) observed += rank2[i];
  }
  // |2W − total| compares W to its null mean total/2 (all in doubled units).
  const long dev = std::abs(2 * observed - total);
  std::uint64_t extreme = 0;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << n); ++pattern) {
    long w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (pattern >> i & 1u) w += rank2[i];
    }
    extreme += std::abs(2 * w - total) >= dev;
  }
  return static_cast<double>(extreme) / static_cast<double>(std::uint64_t{1} << n);
}

Pairs random_pairs(std::mt19937_64& rng, int n, double shift, bool ties) {
  std::normal_distribution<double> z(0, 1);
  Pairs p;
  for (int i = 0; i < n; ++i) {
    double a = z(rng) + shift, b = z(rng);
    if (ties) {
      a = std::round(a * 2);
      b = std::round(b * 2);
    }
    p.emplace_back(a, b);
  }
  return p;
}

TEST(NormalCdf, MatchesHighPrecisionReference) {
  double worst = 0;
  for (int i = 0; i < 21; ++i) {
    const double x = -5 + 0.5 * i;
    worst = std::max(worst, std::abs(normal_cdf(x) - kNormalCdfReference[i]));
  }
  EXPECT_LT(worst, 1e-14);
}

TEST(NormalCdf, SymmetricAndSaturating) {
  for (double x = -9; x <= 9; x += 0.37) EXPECT_NEAR(normal_cdf(x) + normal_cdf(-x), 1.0, 1e-15);
  EXPECT_EQ(normal_cdf(-40), 0.0);
  EXPECT_EQ(normal_cdf(40), 1.0);
  EXPECT_NEAR(normal_cdf(1.96), 0.9750021048517795, 1e-14);
}

TEST(ZTest, IdenticalSamplesGiveHalf) {
  const std::vector<double> a{1, 2, 3, 4, 7};
  EXPECT_DOUBLE_EQ(z_test(a, a), 0.5);
}

TEST(ZTest, StatisticOfExactly196) {
  // Means 0 and 1.96, each sample variance 1 over 2 values: SE = sqrt(1/2 + 1/2) = 1.
  const double h = std::sqrt(0.5);
  const std::vector<double> a{-h, h};
  const std::vector<double> b{1.96 - h, 1.96 + h};
  EXPECT_NEAR(z_test(a, b), 0.975, 1e-3);
}

TEST(ZTest, LargeEffect) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> z(0, 1);
  std::vector<double> a, b;
  for (int i = 0; i < 100; ++i) {
    a.push_back(z(rng));
    b.push_back(a.back() + 10);
  }
  EXPECT_GT(z_test(a, b), 0.999);
  EXPECT_LT(z_test(b, a), 0.001);
}

TEST(ZTest, Complementarity) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> z(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(2 + rng() % 50), b(2 + rng() % 50);
    const double shift = z(rng);
    for (auto& x : a) x = z(rng);
    for (auto& x : b) x = z(rng) * 2 + shift;
    EXPECT_NEAR(z_test(a, b) + z_test(b, a), 1.0, 1e-12);
  }
}

TEST(ZTest, Preconditions) {
  const std::vector<double> one{1}, flat{2, 2, 2}, other{3, 3};
  EXPECT_THROW(z_test(one, flat), StatisticsError);
  EXPECT_THROW(z_test(flat, flat), DegenerateVariance);
  EXPECT_EQ(z_test(flat, other), 1.0);
  EXPECT_EQ(z_test(other, flat), 0.0);
}

TEST(Wilcoxon, AllPositiveSixPairs) {
  const Pairs p{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}};
  const auto r = wilcoxon_signed_rank(p);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.n, 6);
  EXPECT_EQ(r.w_plus, 21);
  EXPECT_DOUBLE_EQ(r.p, 0.03125);
}

TEST(Wilcoxon, TooFewPairs) {
  const Pairs zero(10, {1.0, 1.0});
  EXPECT_THROW(wilcoxon_signed_rank(zero), TooFewPairs);
  const Pairs five{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {7, 7}};
  EXPECT_THROW(wilcoxon_signed_rank(five), TooFewPairs);
}

TEST(Wilcoxon, ExactMatchesSignPatternEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 11);
    const auto p = random_pairs(rng, n, static_cast<double>(rng() % 3) * 0.5, trial % 2 == 0);
    int nonzero = 0;
    for (auto [a, b] : p) nonzero += a != b;
    if (nonzero < kWilcoxonMinPairs) continue;
    EXPECT_NEAR(wilcoxon_exact(p).p, brute_force_wilcoxon(p), 1e-12) << "trial " << trial;
  }
}

TEST(Wilcoxon, ExactAtTwentyMatchesEnumeration) {
  std::mt19937_64 rng(8);
  const auto p = random_pairs(rng, 20, 0.4, false);
  const auto r = wilcoxon_signed_rank(p);
  EXPECT_TRUE(r.exact);
  EXPECT_NEAR(r.p, brute_force_wilcoxon(p), 1e-12);
}

TEST(Wilcoxon, ApproximationCloseToExactFrom15To20) {
  std::mt19937_64 rng(9);
  for (int n = 15; n <= 20; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto p = random_pairs(rng, n, 0.3 * (trial % 4), false);
      EXPECT_NEAR(wilcoxon_normal(p).p, wilcoxon_exact(p).p, 0.02) << "n " << n;
    }
  }
}

TEST(Wilcoxon, LargeSampleUsesApproximationWithinOnePercent) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_pairs(rng, 25, 0.3, false);
    const auto r = wilcoxon_signed_rank(p);
    EXPECT_FALSE(r.exact);
    EXPECT_NEAR(r.p, wilcoxon_exact(p).p, 0.01);
  }
}

TEST(MeanCi, HalfWidthIsZ95TimesSe) {
  const std::vector<double> xs{1, 2, 3, 4, 5};
  const auto ci = mean_ci(xs);
  EXPECT_DOUBLE_EQ(ci.mean, 3);
  EXPECT_DOUBLE_EQ(ci.se, std::sqrt(2.5 / 5));
  EXPECT_DOUBLE_EQ(ci.half_width, kZ95 * ci.se);
  EXPECT_DOUBLE_EQ(ci.lo, 3 - ci.half_width);
  EXPECT_DOUBLE_EQ(ci.hi, 3 + ci.half_width);
  EXPECT_EQ(ci.n, 5);
  const std::vector<double> one{4};
  EXPECT_EQ(mean_ci(one).se, 0);
}

}  // namespace
}  // namespace bidlab
