#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "savi/experiments.hpp"
#include "savi/rng.hpp"
#include "savi/strategies.hpp"

namespace savi {
namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

std::vector<Vector> random_stream(int d, double B, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const Vector drift = sample_uniform_ball(d, 0.5 * B, rng);
  std::vector<Vector> out;
  for (std::size_t t = 0; t < n; ++t) out.push_back(drift + sample_uniform_ball(d, 0.5 * B, rng));
  return out;
}

// FTL -----------------------------------------------------------------------

TEST(Ftl, ZeroMeanGivesZeroBet) {
  FtlStrategy ftl({2, 0.7, 0.9}, false);
  EXPECT_EQ(ftl.bet(), Vector::Zero(2));
  ftl.update(vec({0.1, 0.2}));
  ftl.update(vec({-0.1, -0.2}));
  EXPECT_EQ(ftl.bet(), Vector::Zero(2));
}

TEST(Ftl, FormulaIdentityInOneDimension) {
  const double D = 1.5;
  FtlStrategy ftl({1, 1.0, D}, false);
  ftl.update(vec({D * D / 4.0}));
  EXPECT_DOUBLE_EQ(ftl.bet()(0), 1.0);
}

TEST(Ftl, MatchesGridMaximizerAlongFirstAxis) {
  FtlStrategy ftl({2, 0.7, 0.9}, false);
  ftl.update(vec({0.225, 0.0}));
  const Vector bet = ftl.bet();
  EXPECT_NEAR(bet(0), 10.0 / 9.0, 1e-15);
  EXPECT_EQ(bet(1), 0.0);

  // log L_1(l e_1) = 0.225 l - l^2 0.81 / 8 on a grid of step 1e-5.
  double best = -1e300;
  double best_l = 0.0;
  for (int i = 0; i <= 300000; ++i) {
    const double l = i * 1e-5;
    const double v = 0.225 * l - l * l * 0.81 / 8.0;
    if (v > best) {
      best = v;
      best_l = l;
    }
  }
  EXPECT_NEAR(bet(0), best_l, 1e-5);
}

TEST(Ftl, ZeroDiameterIsConfigError) {
  EXPECT_THROW(FtlStrategy({1, 1.0, 0.0}, false), ConfigError);
}

TEST(Ftl, OneSidedClampsAtZero) {
  FtlStrategy ftl({2, 1.0, 2.0}, true);
  ftl.update(vec({-0.5, 0.5}));
  const Vector bet = ftl.bet();
  EXPECT_EQ(bet(0), 0.0);
  EXPECT_DOUBLE_EQ(bet(1), 0.5);
}

// EWA -----------------------------------------------------------------------

TEST(Ewa, FirstBetIsZero) {
  EwaStrategy ewa({3, 1.0, 2.0}, false);
  EXPECT_EQ(ewa.vertices().size(), 6u);
  EXPECT_EQ(ewa.bet(), Vector::Zero(3));
}

TEST(Ewa, HandEvaluatedSecondBet) {
  EwaStrategy ewa({1, 1.0, 2.0}, false, 0.5);
  ewa.update(vec({1.0}));
  EXPECT_DOUBLE_EQ(ewa.bet()(0), 0.25);
  EXPECT_DOUBLE_EQ(ewa.vertex_log_wealths()[0], std::log(1.5));
  EXPECT_DOUBLE_EQ(ewa.vertex_log_wealths()[1], std::log(0.5));
}

TEST(Ewa, ZeroStreamKeepsZeroBet) {
  EwaStrategy ewa({2, 1.0, 2.0}, false);
  for (int t = 0; t < 100; ++t) {
    ewa.update(Vector::Zero(2));
    ASSERT_EQ(ewa.bet(), Vector::Zero(2));
  }
}

TEST(Ewa, WeightsFormADistributionAndBetStaysInHull) {
  const GeometryBounds g{3, 0.7, 1.4};
  EwaStrategy ewa(g, false);
  for (const Vector& x : random_stream(3, 0.7, 2000, 4)) {
    ewa.update(x);
    const auto w = ewa.weights();
    double total = 0.0;
    for (double wk : w) {
      ASSERT_GE(wk, 0.0);
      total += wk;
    }
    ASSERT_NEAR(total, 1.0, 1e-12);
    // The hull of {+-eps e_k} is the l1 ball of radius eps.
    ASSERT_LE(ewa.bet().lpNorm<1>(), ewa.eps() * (1.0 + 1e-12));
  }
}

TEST(Ewa, EpsRange) {
  EXPECT_THROW(EwaStrategy({1, 1.0, 2.0}, false, 0.0), ConfigError);
  EXPECT_THROW(EwaStrategy({1, 1.0, 2.0}, false, 0.6), ConfigError);
  EXPECT_DOUBLE_EQ(EwaStrategy({1, 0.7, 1.4}, false).eps(), 1.0 / 1.4);
}

TEST(Ewa, VertexLeavingTheSetIsDomainError) {
  EwaStrategy ewa({1, 1.0, 2.0}, false, 0.5);
  EXPECT_THROW(ewa.update(vec({-2.0})), DomainError);
}

TEST(Ewa, OneSidedUsesPositiveVerticesOnly) {
  EwaStrategy ewa({2, 1.0, 2.0}, true);
  EXPECT_EQ(ewa.vertices().size(), 2u);
  for (int t = 0; t < 50; ++t) {
    ewa.update(vec({-0.5, 0.3}));
    ASSERT_GE(ewa.bet().minCoeff(), 0.0);
  }
}

// ONS -----------------------------------------------------------------------

TEST(Ons, InitialBetIsZero) {
  OnsStrategy ons({2, 0.6, 1.2}, false);
  EXPECT_EQ(ons.bet(), Vector::Zero(2));
  EXPECT_EQ(ons.curvature(), Matrix::Identity(2, 2));
}

TEST(Ons, ZeroObservationLeavesStateUnchanged) {
  OnsStrategy ons({2, 1.0, 2.0}, false);
  ons.update(vec({0.5, -0.25}));
  const Matrix A = ons.curvature();
  const Vector gamma = ons.scaled_bet();
  ons.update(Vector::Zero(2));
  EXPECT_EQ(ons.curvature(), A);
  EXPECT_EQ(ons.scaled_bet(), gamma);
}

TEST(Ons, HandStepInOneDimension) {
  OnsStrategy ons({1, 1.0, 2.0}, false);
  ons.update(vec({1.0}));
  EXPECT_DOUBLE_EQ(ons.curvature()(0, 0), 2.0);
  EXPECT_NEAR(ons.last_raw_step()(0), 1.0 / (2.0 - std::log(3.0)), 1e-15);
  EXPECT_GT(ons.last_raw_step()(0), 0.5);
  EXPECT_DOUBLE_EQ(ons.scaled_bet()(0), 0.5);
  EXPECT_DOUBLE_EQ(ons_step_constant(), 2.0 / (2.0 - std::log(3.0)));
}

TEST(Ons, BetIsScaledByBound) {
  OnsStrategy ons({1, 0.5, 1.0}, false);
  ons.update(vec({0.5}));
  EXPECT_DOUBLE_EQ(ons.bet()(0), 1.0);  // gamma = 1/2 on x / B, bet = gamma / B
}

TEST(Ons, CurvatureStaysSymmetricPositiveDefinite) {
  OnsStrategy ons({3, 0.7, 1.4}, false);
  for (const Vector& x : random_stream(3, 0.7, 1000, 8)) {
    ons.update(x);
    const Matrix& A = ons.curvature();
    ASSERT_LE((A - A.transpose()).norm(), 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(A);
    ASSERT_GE(eig.eigenvalues().minCoeff(), 1.0 - 1e-9);
    ASSERT_LE(ons.scaled_bet().norm(), 0.5 * (1.0 + 1e-9));
  }
}

TEST(Ons, OneSidedVariant) {
  EXPECT_THROW(OnsStrategy({2, 1.0, 2.0}, true), ConfigError);
  OnsStrategy ons({1, 1.0, 2.0}, true);
  for (int t = 0; t < 20; ++t) {
    ons.update(vec({-0.8}));
    ASSERT_GE(ons.scaled_bet()(0), 0.0);
    ASSERT_LE(ons.scaled_bet()(0), 0.5);
  }
}

// OGA -----------------------------------------------------------------------

TEST(Oga, ZeroGradientKeepsDirection) {
  OgaStrategy oga({2, 1.0, 2.0});
  oga.update(Vector::Zero(2));
  EXPECT_EQ(oga.direction(), Vector::Zero(2));
  EXPECT_EQ(oga.step_index(), 2u);
}

TEST(Oga, FirstStepIsClamped) {
  OgaStrategy oga({2, 1.0, 2.0});
  oga.update(vec({1.0, 0.0}));
  EXPECT_EQ(oga.direction(), vec({1.0, 0.0}));
}

TEST(Oga, InwardStepFromBoundaryIsNotClamped) {
  OgaStrategy oga({2, 1.0, 2.0});
  oga.update(vec({1.0, 0.0}));  // eta = (1, 0) on the boundary
  oga.update(vec({-0.5, 0.0}));  // raw step (1 - 2 * 0.5 / sqrt 2, 0)
  const double raw = 1.0 - 1.0 / std::sqrt(2.0);
  EXPECT_LE(raw, 1.0);
  EXPECT_DOUBLE_EQ(oga.direction()(0), raw);
  EXPECT_EQ(oga.direction()(1), 0.0);
}

TEST(Oga, DirectionStaysInBall) {
  const double B = 0.6;
  OgaStrategy oga({2, B, 1.2});
  for (const Vector& x : random_stream(2, B, 2000, 12)) {
    oga.update(x);
    ASSERT_LE(oga.direction().norm(), (1.0 / B) * (1.0 + 1e-12));
  }
}

// Linear regret of the direction against the best fixed eta in B(1/B):
// ||sum X_t|| / B - sum eta_t^T X_t.
TEST(Oga, DeterministicRegretWithinRootN) {
  for (int d : {1, 2, 5}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const double B = 0.7;
      OgaStrategy oga({d, B, 2.0 * B});
      Vector sum = Vector::Zero(d);
      double earned = 0.0;
      std::size_t n = 0;
      for (const Vector& x : random_stream(d, B, 1000, 100 + seed)) {
        earned += oga.direction().dot(x);
        oga.update(x);
        sum += x;
        ++n;
        const double regret = sum.norm() / B - earned;
        ASSERT_LE(regret, std::sqrt(static_cast<double>(n)) + 1e-9)
            << "d=" << d << " seed=" << seed << " n=" << n;
      }
    }
  }
}

// Two-step ------------------------------------------------------------------

TEST(TwoStep, BetIsSizeTimesDirection) {
  TwoStepStrategy two({2, 1.0, 2.0});
  EXPECT_EQ(two.bet(), Vector::Zero(2));
  for (const Vector& x : random_stream(2, 1.0, 200, 21)) {
    two.update(x);
    ASSERT_LE(std::abs(two.size()), 0.5);
    ASSERT_EQ(two.bet(), two.size() * two.direction());
    ASSERT_LE(two.direction().norm(), 1.0 + 1e-12);
  }
}

// Predictability ------------------------------------------------------------

TEST(Predictability, PerturbingObservationTLeavesBetsUpToTUnchanged) {
  const GeometryBounds g{3, 0.7, 1.4};
  const auto stream = random_stream(3, 0.7, 60, 31);
  const auto make_all = [&] {
    return std::vector<AnyStrategy>{FtlStrategy(g, false), EwaStrategy(g, false),
                                    OnsStrategy(g, false), TwoStepStrategy(g)};
  };
  const auto bets = [&](std::vector<Vector> xs) {
    std::vector<std::vector<Vector>> out;
    for (AnyStrategy s : make_all()) {
      std::vector<Vector> path;
      for (const Vector& x : xs) {
        path.push_back(bet_of(s));
        update_strategy(s, x);
      }
      out.push_back(path);
    }
    return out;
  };
  const auto reference = bets(stream);
  for (std::size_t t : {0u, 10u, 59u}) {
    auto perturbed = stream;
    perturbed[t] = -0.9 * perturbed[t];
    const auto changed = bets(perturbed);
    for (std::size_t k = 0; k < reference.size(); ++k) {
      for (std::size_t s = 0; s <= t; ++s) ASSERT_EQ(changed[k][s], reference[k][s]);
    }
  }
}

TEST(OneSided, EveryBetIsNonnegative) {
  const GeometryBounds g1{1, 1.0, 2.0};
  const GeometryBounds g3{3, 1.0, 2.0};
  std::vector<std::pair<AnyStrategy, int>> strategies{
      {FtlStrategy(g3, true), 3}, {EwaStrategy(g3, true), 3}, {OnsStrategy(g1, true), 1}};
  for (auto& [s, d] : strategies) {
    for (const Vector& x : random_stream(d, 1.0, 500, 41)) {
      ASSERT_GE(bet_of(s).minCoeff(), 0.0) << strategy_name(s);
      update_strategy(s, x);
    }
  }
}

TEST(Names, VariantNames) {
  const GeometryBounds g{1, 1.0, 2.0};
  EXPECT_EQ(strategy_name(AnyStrategy(FtlStrategy(g, false))), "ftl");
  EXPECT_EQ(strategy_name(AnyStrategy(EwaStrategy(g, false))), "ewa");
  EXPECT_EQ(strategy_name(AnyStrategy(OnsStrategy(g, false))), "ons");
  EXPECT_EQ(strategy_name(AnyStrategy(TwoStepStrategy(g))), "2steps");
  EXPECT_EQ(strategy_name(AnyStrategy(FixedBetStrategy(vec({0.1})))), "fixed");
}

}  // namespace
}  // namespace savi
