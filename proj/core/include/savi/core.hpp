#pragma once

// Shared domain types: geometry of the observation set, null hypotheses,
// observation ingestion and running statistics.

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace savi {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Error hierarchy. Everything derives from std::runtime_error so callers can
// catch a single type at the CLI boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user or programmatic configuration (bad alpha, D = 0, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An argument outside the mathematical domain of an operation
// (1 + bet * x <= 0, |g| > 1, linlog of a nonpositive number, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An observation violating the declared geometry bounds.
class IngestionError : public Error {
 public:
  using Error::Error;
};

// Non-finite values or a numerical routine that failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Bounds on the observation set X: dimension d, ||x||_2 <= B and
// sup ||x - y||_2 <= D.
struct GeometryBounds {
  int d = 1;
  double B = 1.0;
  double D = 2.0;

  // Throws ConfigError unless d >= 1, B > 0, D >= 0 and D <= 2B.
  void validate() const;
};

enum class NullSpec {
  TwoSidedMean,        // E_{t-1}[X_t] = 0
  OneSidedMean,        // E_{t-1}[X_t] <= 0, nonnegative bets only
  FunctionalTwoSided,  // E_{t-1}[g(X_t)] = 0
  FunctionalOneSided,  // E_{t-1}[g(X_t)] <= 0
};

[[nodiscard]] bool is_one_sided(NullSpec null) noexcept;
[[nodiscard]] bool is_functional(NullSpec null) noexcept;
[[nodiscard]] std::string_view to_string(NullSpec null) noexcept;

// Relative slack used when checking ||x||_2 <= B so that observations built
// exactly on the boundary survive rounding.
inline constexpr double kNormSlack = 1e-12;

// Throws IngestionError if x has the wrong length, non-finite entries, or
// ||x||_2 > B.
void check_observation(const Vector& x, const GeometryBounds& geometry);

// Throws DomainError unless |g| <= 1.
void check_functional_value(double g);

// Second-moment summaries E_{t-1}||X_t||_p^2 for p = 2 and p = infinity.
struct CondSecondMoments {
  double sq_2 = 0.0;
  double sq_inf = 0.0;
};

// Running sums over an ingested prefix. The conditional sums are only
// available for synthetic streams, where the data-generating process is known.
class RunningStats {
 public:
  explicit RunningStats(int d);

  void update(const Vector& x, const GeometryBounds& geometry,
              const std::optional<Vector>& cond_mean = std::nullopt,
              const std::optional<CondSecondMoments>& cond_sq = std::nullopt);

  [[nodiscard]] std::size_t count() const noexcept { return n_; }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(sum_x_.size()); }
  [[nodiscard]] const Vector& sum_x() const noexcept { return sum_x_; }

  // mu_hat_n = sum_x / n; the zero vector when n = 0.
  [[nodiscard]] Vector empirical_mean() const;
  // mu_n = (1/n) sum E_{t-1}[X_t]; empty if no conditional mean was supplied.
  [[nodiscard]] std::optional<Vector> conditional_mean() const;
  // nu_{n,2} and nu_{n,inf}; empty if no second moments were supplied.
  [[nodiscard]] std::optional<CondSecondMoments> conditional_second_moments() const;

 private:
  std::size_t n_ = 0;
  Vector sum_x_;
  Vector sum_cond_mean_;
  std::size_t n_cond_mean_ = 0;
  CondSecondMoments sum_cond_sq_;
  std::size_t n_cond_sq_ = 0;
};

}  // namespace savi
