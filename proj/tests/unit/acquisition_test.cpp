#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bidlab/acquisition.hpp"
#include "bidlab/errors.hpp"
#include "bidlab/simultaneous.hpp"
#include "oracle.hpp"

namespace bidlab {
namespace {

using Entries = std::vector<std::pair<GoodSet, Money>>;

Valuation camera_flash() {
  const Entries e{{GoodSet{0, 1}, 750}};
  return Valuation::from_entries(2, e, true);
}

PriceModel camera_flash_prices() {
  return PriceModel::independent(
      {PriceDistribution({{500, Rational(1, 2)}, {1000, Rational(1, 2)}}), PriceDistribution::deterministic(50)});
}

Valuation substitutes() {
  const Entries e{{GoodSet{0}, 1}, {GoodSet{1}, 1}, {GoodSet{0, 1}, 1}};
  return Valuation::from_entries(2, e, true);
}

PriceModel long_tail() {
  return PriceModel::independent({PriceDistribution({{1, Rational(9, 10)}, {1000000, Rational(1, 10)}})});
}

Valuation single(Money value) {
  const Entries e{{GoodSet{0}, value}};
  return Valuation::from_entries(1, e, true);
}

TEST(Acquisition, CameraFlashBuysBoth) {
  const std::vector<Money> p{500, 50};
  const auto r = solve_acquisition({}, GoodSet{0, 1}, p, camera_flash());
  EXPECT_EQ(r.value, 200);
  EXPECT_EQ(r.chosen, (GoodSet{0, 1}));
}

TEST(Acquisition, EmptyMarketKeepsHoldings) {
  const std::vector<Money> p{0, 0};
  const auto r = solve_acquisition(GoodSet{0, 1}, {}, p, camera_flash());
  EXPECT_EQ(r.value, 750);
  EXPECT_EQ(r.chosen, (GoodSet{0, 1}));
}

TEST(Acquisition, SingleGoodAtPriceOne) {
  const std::vector<Money> p{1};
  EXPECT_EQ(solve_acquisition({}, GoodSet{0}, p, single(100)).value, 99);
}

TEST(Acquisition, OverlapRejected) {
  const std::vector<Money> p{0, 0};
  EXPECT_THROW(solve_acquisition(GoodSet{0}, GoodSet{0, 1}, p, camera_flash()), OverlapError);
}

TEST(Acquisition, MarginalUtilityExamples) {
  for (Money px : {1, 101}) {
    for (Money py : {1, 101}) {
      const std::vector<Money> p{px, py};
      EXPECT_EQ(marginal_utility(0, {}, GoodSet{1}, p, substitutes()), 1);
      EXPECT_EQ(marginal_utility(1, {}, GoodSet{0}, p, substitutes()), 1);
    }
  }
  const std::vector<Money> p{500, 50};
  EXPECT_EQ(marginal_utility(0, {}, GoodSet{1}, p, camera_flash()), 700);
  EXPECT_EQ(marginal_utility(1, {}, GoodSet{0}, p, camera_flash()), 250);
  // A good that adds nothing.
  const Entries e{{GoodSet{0}, 5}};
  const std::vector<Money> q{0, 0};
  EXPECT_EQ(marginal_utility(1, GoodSet{0}, {}, q, Valuation::from_entries(2, e, true)), 0);
  EXPECT_THROW(marginal_utility(0, GoodSet{0}, {}, q, camera_flash()), MembershipError);
  EXPECT_THROW(marginal_utility(1, {}, GoodSet{1}, q, camera_flash()), MembershipError);
}

TEST(Acquisition, ExpectedValues) {
  EXPECT_EQ(expected_acquisition({}, GoodSet{0, 1}, camera_flash_prices(), camera_flash()), Rational(100));
  EXPECT_EQ(expected_acquisition({}, GoodSet{0}, long_tail(), single(100)), Rational(891, 10));
  const auto dp = PriceModel::independent({PriceDistribution::deterministic(500), PriceDistribution::deterministic(50)});
  const std::vector<Money> p{500, 50};
  EXPECT_EQ(expected_acquisition({}, GoodSet{0, 1}, dp, camera_flash()),
            Rational(solve_acquisition({}, GoodSet{0, 1}, p, camera_flash()).value));
}

TEST(Acquisition, ExpectedMarginalUtilityExamples) {
  const auto d = PriceDistribution::uniform({1, 101});
  const auto m = PriceModel::independent({d, d});
  EXPECT_EQ(expected_marginal_utility(0, {}, GoodSet{1}, m, substitutes()), Rational(1));
  EXPECT_EQ(expected_marginal_utility(0, {}, {}, long_tail(), single(100)), Rational(100));
  // Additive valuation with nothing left for sale: μ̄ is the value increment.
  const Entries add{{GoodSet{0}, 3}, {GoodSet{1}, 4}, {GoodSet{0, 1}, 7}};
  const auto v = Valuation::from_entries(2, add, true);
  EXPECT_EQ(expected_marginal_utility(1, GoodSet{0}, {}, m, v), Rational(4));
}

TEST(Acquisition, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Valuation v = trial % 2 ? oracle::random_valuation(n, rng) : oracle::random_monotone_valuation(n, rng);
    std::vector<Money> p(static_cast<std::size_t>(n));
    for (auto& x : p) x = static_cast<Money>(rng() % 60);
    const std::uint32_t market = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
    const std::uint32_t held = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1) & ~market;
    const auto r = solve_acquisition(GoodSet(held), GoodSet(market), p, v);
    const Money want = oracle::alpha(v, held, market, p);
    ASSERT_EQ(r.value, want);
    EXPECT_EQ(acquisition_value(GoodSet(held), GoodSet(market), p, v), want);
    // The chosen set attains the value.
    Money got = v(r.chosen);
    for (GoodId i : r.chosen & GoodSet(market)) got -= p[static_cast<std::size_t>(i)];
    EXPECT_EQ(got, want);
    EXPECT_TRUE(r.chosen.subset_of(GoodSet(held | market)));
  }
}

TEST(Acquisition, NonincreasingInEachPrice) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Valuation v = oracle::random_valuation(n, rng);
    std::vector<Money> p(static_cast<std::size_t>(n));
    for (auto& x : p) x = static_cast<Money>(rng() % 60);
    const GoodSet market = GoodSet::universe(n);
    const Money base = acquisition_value({}, market, p, v);
    const auto i = static_cast<std::size_t>(rng() % static_cast<unsigned>(n));
    p[i] += 1 + static_cast<Money>(rng() % 30);
    EXPECT_LE(acquisition_value({}, market, p, v), base);
  }
}

TEST(Acquisition, MarginalsNonnegativeUnderFreeDisposal) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Valuation v = oracle::random_monotone_valuation(n, rng);
    const auto m = oracle::random_independent_model(n, rng, 3, 80);
    const GoodId x = static_cast<GoodId>(rng() % static_cast<unsigned>(n));
    const GoodSet rest = GoodSet::universe(n).without(x);
    const GoodSet market(static_cast<std::uint32_t>(rng()) & rest.mask());
    const GoodSet held = rest - market;
    std::vector<Money> p(static_cast<std::size_t>(n));
    for (auto& q : p) q = static_cast<Money>(rng() % 80);
    EXPECT_GE(marginal_utility(x, held, market, p, v), 0);
    EXPECT_GE(expected_marginal_utility(x, held, market, m, v), 0);
  }
}

TEST(Acquisition, ExpectationMatchesEnumerationOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const Valuation v = oracle::random_valuation(n, rng);
    std::vector<PriceDistribution> d;
    for (int i = 0; i < n; ++i) d.push_back(oracle::random_distribution(rng, 3, 60));
    const auto m = PriceModel::independent(d);
    const std::uint32_t market = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
    const std::uint32_t held = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1) & ~market;
    EXPECT_EQ(expected_acquisition(GoodSet(held), GoodSet(market), m, v),
              oracle::expected_alpha(v, held, market, oracle::product(d)));
  }
}

TEST(Acquisition, MonteCarloMeanWithinThreeStandardErrors) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 3);
    const Valuation v = oracle::random_monotone_valuation(n, gen);
    const auto m = oracle::random_independent_model(n, gen, 3, 80);
    const GoodSet market = GoodSet::universe(n);
    const double exact = to_double(expected_acquisition({}, market, m, v));
    Rng rng(derive_seed(31, static_cast<std::uint64_t>(trial)));
    const int samples = 10000;
    double sum = 0, sq = 0;
    for (int k = 0; k < samples; ++k) {
      const auto s = sample_scenario(m, rng);
      const double a = static_cast<double>(solve_acquisition({}, market, s.prices, v).value);
      sum += a;
      sq += a * a;
    }
    const double mean = sum / samples;
    const double se = std::sqrt(std::max(0.0, (sq / samples - mean * mean) / (samples - 1)));
    EXPECT_LE(std::abs(mean - exact), 3 * se + 1e-9) << "trial " << trial;
  }
}

TEST(Acquisition, WaitAndSeeBoundsStochasticProgram) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const Valuation v = oracle::random_monotone_valuation(n, rng);
    const auto m = oracle::random_independent_model(n, rng, 3, 80);
    const Rational ws = expected_acquisition({}, GoodSet::universe(n), m, v);
    EXPECT_GE(ws, solve_stochastic_program(m, v).value);
  }
}

}  // namespace
}  // namespace bidlab
