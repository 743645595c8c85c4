#pragma once

// Predictable betting strategies.
//
// Every strategy exposes the same two-phase protocol:
//   bet()      -> the bet for the next round, a function of past rounds only;
//   update(x)  -> fold the realized observation into the state.
// Callers must always call bet() before update() for a given round.

#include <string_view>
#include <variant>
#include <vector>

#include "savi/core.hpp"

namespace savi {

// Step constant of the Online Newton Step recursion, 2 / (2 - log 3).
[[nodiscard]] double ons_step_constant() noexcept;

// Follow The Leader for the Hoeffding family: the bet 4 mu_hat_n / D^2
// maximizes log L_n^H in closed form. In one-sided mode the bet is clamped at
// zero coordinate-wise.
class FtlStrategy {
 public:
  FtlStrategy(const GeometryBounds& geometry, bool one_sided);

  [[nodiscard]] Vector bet() const;
  void update(const Vector& x);

  [[nodiscard]] Vector empirical_mean() const;
  [[nodiscard]] std::size_t rounds() const noexcept { return n_; }

 private:
  GeometryBounds geometry_;
  bool one_sided_;
  Vector sum_;
  std::size_t n_ = 0;
};

// Exponentially weighted average over the vertex bets g_k = +-eps e_k
// (k = 1..2d), or over +eps e_k (k = 1..d) in one-sided mode. Per-vertex
// wealths are kept in log space.
class EwaStrategy {
 public:
  // eps defaults to the largest admissible value 1/(2B).
  EwaStrategy(const GeometryBounds& geometry, bool one_sided,
              std::optional<double> eps = std::nullopt);

  [[nodiscard]] Vector bet() const;
  void update(const Vector& x);

  [[nodiscard]] double eps() const noexcept { return eps_; }
  [[nodiscard]] const std::vector<Vector>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<double>& vertex_log_wealths() const noexcept {
    return log_wealth_;
  }
  // Normalized weights exp(l_k) / sum_j exp(l_j).
  [[nodiscard]] std::vector<double> weights() const;

 private:
  double eps_;
  std::vector<Vector> vertices_;
  std::vector<double> log_wealth_;
};

// Online Newton Step on the capital process. Observations are scaled by 1/B
// before entering the recursion; the internal bet gamma lives in S (the
// radius-1/2 ball, or [0, 1/2] one-sided) and the bet against the raw
// observation is gamma / B.
class OnsStrategy {
 public:
  OnsStrategy(const GeometryBounds& geometry, bool one_sided);

  [[nodiscard]] Vector bet() const { return gamma_ / scale_; }
  void update(const Vector& x);

  [[nodiscard]] const Vector& scaled_bet() const noexcept { return gamma_; }
  [[nodiscard]] const Matrix& curvature() const noexcept { return A_; }
  // Unprojected gamma_t - c A_t^{-1} z_t from the last update.
  [[nodiscard]] const Vector& last_raw_step() const noexcept { return raw_; }

 private:
  double scale_;
  bool one_sided_;
  Matrix A_;
  Vector gamma_;
  Vector raw_;
};

// Online projected gradient ascent on the direction eta:
// eta_{t+1} = Pi_{B(1/B)}(eta_t + 2 X_t / (B^2 sqrt(t))), eta_1 = 0.
class OgaStrategy {
 public:
  explicit OgaStrategy(const GeometryBounds& geometry);

  [[nodiscard]] const Vector& direction() const noexcept { return eta_; }
  [[nodiscard]] Vector bet() const { return eta_; }
  void update(const Vector& x);

  [[nodiscard]] std::size_t step_index() const noexcept { return t_; }

 private:
  double B_;
  Vector eta_;
  std::size_t t_ = 1;
};

// Direction from OGA, scalar size from a one-dimensional ONS run on the
// projected values eta_t^T X_t (which lie in [-1, 1], so B = 1 there).
class TwoStepStrategy {
 public:
  explicit TwoStepStrategy(const GeometryBounds& geometry);

  [[nodiscard]] double size() const { return size_.bet()(0); }
  [[nodiscard]] const Vector& direction() const noexcept { return direction_.direction(); }
  [[nodiscard]] Vector bet() const { return size() * direction(); }
  void update(const Vector& x);

 private:
  OgaStrategy direction_;
  OnsStrategy size_;
};

// A constant bet; useful as a baseline and for replaying a known maximizer.
class FixedBetStrategy {
 public:
  explicit FixedBetStrategy(Vector bet) : bet_(std::move(bet)) {}
  [[nodiscard]] Vector bet() const { return bet_; }
  void update(const Vector&) noexcept {}

 private:
  Vector bet_;
};

using AnyStrategy =
    std::variant<FtlStrategy, EwaStrategy, OnsStrategy, TwoStepStrategy, FixedBetStrategy>;

[[nodiscard]] Vector bet_of(const AnyStrategy& strategy);
void update_strategy(AnyStrategy& strategy, const Vector& x);
[[nodiscard]] std::string_view strategy_name(const AnyStrategy& strategy) noexcept;

}  // namespace savi
