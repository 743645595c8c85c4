#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "savi/experiments.hpp"
#include "savi/martingales.hpp"
#include "savi/regret.hpp"

namespace savi {
namespace {

std::vector<Vector> random_stream(int d, double B, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const Vector drift = sample_uniform_ball(d, 0.5 * B, rng);
  std::vector<Vector> out;
  for (std::size_t t = 0; t < n; ++t) out.push_back(drift + sample_uniform_ball(d, 0.5 * B, rng));
  return out;
}

TEST(HoeffdingOracle, ClosedFormMatchesAscent) {
  const GeometryBounds g{3, 0.7, 1.1};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto xs = random_stream(3, 0.7, 200, seed);
    EXPECT_NEAR(hoeffding_max_log_wealth(xs, NullSpec::TwoSidedMean, g),
                oracle::hoeffding_max_by_ascent(xs, g.D), 1e-9);
  }
}

TEST(HoeffdingOracle, SingleObservationWithZeroBet) {
  const GeometryBounds g{2, 1.0, 1.5};
  Vector x(2);
  x << 0.3, -0.4;
  const std::vector<Vector> xs{x};
  EXPECT_NEAR(hoeffding_regret_oracle(xs, 0.0, NullSpec::TwoSidedMean, g),
              2.0 * x.squaredNorm() / (g.D * g.D), 1e-15);
}

TEST(HoeffdingOracle, OneSidedUsesPositivePart) {
  const GeometryBounds g{1, 1.0, 2.0};
  const std::vector<Vector> xs{Vector::Constant(1, -0.5), Vector::Constant(1, -0.1)};
  EXPECT_EQ(hoeffding_max_log_wealth(xs, NullSpec::OneSidedMean, g), 0.0);
  EXPECT_GT(hoeffding_max_log_wealth(xs, NullSpec::TwoSidedMean, g), 0.0);
}

TEST(HoeffdingOracle, ReplayedMaximizerHasZeroRegret) {
  const GeometryBounds g{2, 0.7, 0.9};
  const auto xs = random_stream(2, 0.7, 300, 3);
  Vector mean = Vector::Zero(2);
  for (const Vector& x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  const Vector lambda = 4.0 * mean / (g.D * g.D);
  double logw = 0.0;
  for (const Vector& x : xs) logw += hoeffding_log_increment(lambda, x, g.D);
  EXPECT_NEAR(hoeffding_regret_oracle(xs, logw, NullSpec::TwoSidedMean, g), 0.0, 1e-10);
}

TEST(HoeffdingOracle, FtlRegretWithinLogBound) {
  for (int d : {1, 3}) {
    const GeometryBounds g{d, 0.7, 1.4};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      WealthProcess p = make_hoeffding_ftl(g);
      std::vector<Vector> history;
      for (const Vector& x : random_stream(d, 0.7, 1000, 1000 + seed)) {
        p.step(x);
        history.push_back(x);
        const double n = static_cast<double>(history.size());
        const double regret =
            hoeffding_regret_oracle(history, p.log_wealth(), NullSpec::TwoSidedMean, g);
        ASSERT_LE(regret, 4.0 * (1.0 + std::log(n))) << "d=" << d << " seed=" << seed;
      }
    }
  }
}

TEST(CapitalOracle, AllZeroStream) {
  const std::vector<Vector> xs(10, Vector::Zero(2));
  EXPECT_EQ(capital_max_log_wealth(xs, BallSet{0.5}), 0.0);
  EXPECT_EQ(capital_regret_oracle(xs, 0.0, BallSet{0.5}), 0.0);
  VertexSet v{{Vector::Unit(2, 0) * 0.5, -Vector::Unit(2, 0) * 0.5}};
  EXPECT_EQ(capital_max_log_wealth(xs, v), 0.0);
}

TEST(CapitalOracle, ScalarBallMatchesGoldenSection) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto xs = random_stream(1, 1.0, 150, 50 + seed);
    EXPECT_NEAR(capital_max_log_wealth(xs, BallSet{0.5}),
                oracle::scalar_capital_max(xs, 0.5, false), 1e-9);
    EXPECT_NEAR(capital_max_log_wealth(xs, BallSet{0.5, true}),
                oracle::scalar_capital_max(xs, 0.5, true), 1e-9);
  }
}

TEST(CapitalOracle, DiskMatchesPolarGrid) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto xs = random_stream(2, 0.6, 120, 80 + seed);
    const double r = 1.0 / 1.2;
    EXPECT_NEAR(capital_max_log_wealth(xs, BallSet{r}), oracle::disk_capital_max(xs, r), 1e-6);
  }
}

TEST(CapitalOracle, IncrementalOracleMatchesBatch) {
  const auto xs = random_stream(3, 0.7, 300, 5);
  CapitalBallOracle inc(3, BallSet{1.0 / 1.4});
  std::vector<Vector> prefix;
  for (const Vector& x : xs) {
    inc.add(x);
    prefix.push_back(x);
    if (prefix.size() % 50 == 0) {
      ASSERT_NEAR(inc.max_log_wealth(), capital_max_log_wealth(prefix, BallSet{1.0 / 1.4}), 1e-6);
      ASSERT_LE(inc.argmax().norm(), 1.0 / 1.4 + 1e-12);
    }
  }
  EXPECT_EQ(inc.size(), 300u);
}

TEST(CapitalOracle, Errors) {
  EXPECT_THROW(CapitalBallOracle(0, BallSet{0.5}), ConfigError);
  EXPECT_THROW(CapitalBallOracle(2, BallSet{0.0}), ConfigError);
  EXPECT_THROW(CapitalBallOracle(2, BallSet{0.5, true}), ConfigError);
  CapitalBallOracle o(2, BallSet{0.5});
  EXPECT_THROW(o.add(Vector::Zero(3)), ConfigError);
}

TEST(CapitalOracle, EwaVertexRegretAndIdentity) {
  for (int d : {1, 3}) {
    const GeometryBounds g{d, 0.7, 1.4};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      WealthProcess p = make_capital_ewa(g);
      const auto& ewa = std::get<EwaStrategy>(p.strategy());
      const VertexSet set{ewa.vertices()};
      std::vector<Vector> history;
      for (const Vector& x : random_stream(d, 0.7, 500, 300 + seed)) {
        p.step(x);
        history.push_back(x);
        const double regret = capital_regret_oracle(history, p.log_wealth(), set);
        ASSERT_LE(regret, std::log(2.0 * d) + 1e-9);
        ASSERT_GE(regret, -1e-9);
        // log W = max log L - R, with max log L read from the strategy's own vertex wealths.
        const auto& lw = std::get<EwaStrategy>(p.strategy()).vertex_log_wealths();
        const double max_vertex = *std::max_element(lw.begin(), lw.end());
        ASSERT_NEAR(p.log_wealth(), max_vertex - regret, 1e-9);
      }
    }
  }
}

TEST(CapitalOracle, OnsBallRegretInOneDimension) {
  const GeometryBounds g{1, 1.0, 2.0};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    WealthProcess p = make_capital_ons(g);
    CapitalBallOracle oracle_ball(1, BallSet{0.5});
    std::size_t n = 0;
    for (const Vector& x : random_stream(1, 1.0, 1000, 500 + seed)) {
      p.step(x);
      oracle_ball.add(x);
      ++n;
      const double regret = oracle_ball.max_log_wealth() - p.log_wealth();
      ASSERT_LE(regret, 7.2 + 4.5 * std::log(static_cast<double>(n)) + 1e-4);
    }
  }
}

}  // namespace
}  // namespace savi
