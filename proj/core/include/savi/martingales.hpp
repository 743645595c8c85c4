#pragma once

// Wealth processes (test supermartingales) and the rejection rule
// tau_alpha = inf{t : W_t >= 1/alpha}. All wealth is tracked in log space.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "savi/core.hpp"
#include "savi/strategies.hpp"

namespace savi {

// lambda^T x - ||lambda||^2 D^2 / 8.
[[nodiscard]] double hoeffding_log_increment(const Vector& lambda, const Vector& x, double D);

// log(1 + gamma^T x); DomainError when 1 + gamma^T x <= 0.
[[nodiscard]] double capital_log_increment(const Vector& gamma, const Vector& x);

// log(1 + gamma eta^T x) for a scalar size gamma and a direction eta.
[[nodiscard]] double two_step_log_increment(double gamma, const Vector& eta, const Vector& x);

enum class WealthKind { Hoeffding, Capital, CapitalTwoStep, HoeffdingFunctional, CapitalFunctional };

[[nodiscard]] std::string_view to_string(WealthKind kind) noexcept;

// lambda g - lambda^2 / 2 (HoeffdingFunctional) or log(1 + gamma g)
// (CapitalFunctional). DomainError unless |g| <= 1.
[[nodiscard]] double functional_log_increment(WealthKind kind, double bet, double g);

// Result of scanning a log-wealth path against log(1/alpha).
struct RejectionRecord {
  double alpha = 0.05;
  double threshold = 0.0;        // log(1/alpha)
  std::optional<std::size_t> tau;  // first t (1-based) with log W_t >= threshold
  std::size_t horizon = 0;         // number of steps observed, T

  [[nodiscard]] bool rejected() const noexcept { return tau.has_value(); }
  // tau_alpha ^ T.
  [[nodiscard]] std::size_t truncated() const noexcept { return tau.value_or(horizon); }
};

// log(1/alpha); ConfigError unless 0 < alpha < 1.
[[nodiscard]] double rejection_threshold(double alpha);

// path[i] holds log W_{i+1}.
[[nodiscard]] RejectionRecord rejection_time(std::span<const double> log_wealth_path, double alpha);

// One e-process trajectory. Bets are drawn from the strategy before the
// observation is revealed, then the strategy is updated with it.
class WealthProcess {
 public:
  WealthProcess(WealthKind kind, NullSpec null, const GeometryBounds& geometry,
                AnyStrategy strategy, bool record_trajectory = false);

  // Ingest one observation (mean-testing kinds).
  void step(const Vector& x);
  // Ingest one value g_t(X_t) in [-1, 1] (functional kinds).
  void step_functional(double g);

  [[nodiscard]] WealthKind kind() const noexcept { return kind_; }
  [[nodiscard]] NullSpec null() const noexcept { return null_; }
  [[nodiscard]] const GeometryBounds& geometry() const noexcept { return geometry_; }
  [[nodiscard]] const AnyStrategy& strategy() const noexcept { return strategy_; }

  [[nodiscard]] double log_wealth() const noexcept { return log_wealth_; }
  [[nodiscard]] std::size_t steps() const noexcept { return t_; }
  // Bet used in the most recent step (zero vector before the first step).
  [[nodiscard]] const Vector& last_bet() const noexcept { return last_bet_; }
  // The bet that would be used for the next observation.
  [[nodiscard]] Vector next_bet() const;
  // Empty unless recording was requested.
  [[nodiscard]] const std::vector<double>& trajectory() const noexcept { return trajectory_; }

  // Online rejection tracking; the first crossing is kept even if the
  // wealth later falls back below the threshold.
  void watch(double alpha);
  [[nodiscard]] RejectionRecord rejection() const;

 private:
  void advance(double increment);

  WealthKind kind_;
  NullSpec null_;
  GeometryBounds geometry_;
  AnyStrategy strategy_;
  bool record_;
  double log_wealth_ = 0.0;
  std::size_t t_ = 0;
  Vector last_bet_;
  std::vector<double> trajectory_;
  std::optional<double> alpha_;
  std::optional<std::size_t> tau_;
};

// Convenience constructors for the procedures studied here.
[[nodiscard]] WealthProcess make_hoeffding_ftl(const GeometryBounds& geometry,
                                               NullSpec null = NullSpec::TwoSidedMean,
                                               bool record = false);
[[nodiscard]] WealthProcess make_capital_ewa(const GeometryBounds& geometry,
                                             NullSpec null = NullSpec::TwoSidedMean,
                                             std::optional<double> eps = std::nullopt,
                                             bool record = false);
[[nodiscard]] WealthProcess make_capital_ons(const GeometryBounds& geometry,
                                             NullSpec null = NullSpec::TwoSidedMean,
                                             bool record = false);
[[nodiscard]] WealthProcess make_capital_two_step(const GeometryBounds& geometry,
                                                  bool record = false);

// Writes "step,logw" followed by one row per step.
void write_trajectory_csv(std::ostream& out, std::span<const double> log_wealth_path);

}  // namespace savi
