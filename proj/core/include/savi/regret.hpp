#pragma once

// Regret oracles: the best constant bet in hindsight versus a realized
// log-wealth. R_n = max_bet log L_n(bet) - log W_n.

#include <span>
#include <variant>
#include <vector>

#include "savi/core.hpp"

namespace savi {

// max_lambda log L_n^H(lambda) = 2 n ||mu_hat_n||^2 / D^2 (two-sided) or
// 2 n (mu_hat_n)_+^2 / D^2 (one-sided, d = 1).
[[nodiscard]] double hoeffding_max_log_wealth(std::span<const Vector> history, NullSpec null,
                                              const GeometryBounds& geometry);

[[nodiscard]] double hoeffding_regret_oracle(std::span<const Vector> history, double log_wealth,
                                             NullSpec null, const GeometryBounds& geometry);

// Finite set of candidate bets; the maximum is exact.
struct VertexSet {
  std::vector<Vector> vertices;
};

// Centered ball of the given radius ([0, radius] when one_sided, d = 1 only).
struct BallSet {
  double radius = 0.0;
  bool one_sided = false;
};

using GammaSet = std::variant<VertexSet, BallSet>;

// max_{gamma in set} sum_t log(1 + gamma^T x_t).
[[nodiscard]] double capital_max_log_wealth(std::span<const Vector> history, const GammaSet& set);

[[nodiscard]] double capital_regret_oracle(std::span<const Vector> history, double log_wealth,
                                           const GammaSet& set);

// Incremental maximizer of sum_t log(1 + gamma^T x_t) over a ball, intended
// for evaluating the regret at every prefix of a stream. Each query warm
// starts from the previous maximizer.
//
// d = 1: safeguarded Newton on the decreasing derivative, solved to 1e-13.
// d > 1: projected gradient ascent with backtracking, stopped when the
//        Frank-Wolfe gap r ||grad|| - grad^T gamma (an upper bound on the
//        suboptimality) is <= 1e-7.
class CapitalBallOracle {
 public:
  CapitalBallOracle(int d, BallSet set);

  void add(const Vector& x);
  [[nodiscard]] double max_log_wealth();
  [[nodiscard]] const Vector& argmax() const noexcept { return gamma_; }
  [[nodiscard]] std::size_t size() const noexcept { return history_.size(); }

 private:
  double objective(const Vector& gamma) const;
  Vector gradient(const Vector& gamma) const;
  double solve_scalar();
  double solve_ball();

  int d_;
  BallSet set_;
  std::vector<Vector> history_;
  Vector gamma_;
  double step_ = 1.0;
};

}  // namespace savi
