#pragma once

// Synthetic streams, the forecaster-comparison baseline and the Monte Carlo
// rejection-time harness.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "savi/bounds.hpp"
#include "savi/core.hpp"
#include "savi/martingales.hpp"
#include "savi/rng.hpp"

namespace savi {

enum class StreamFamily { OneAxis, Spiral, ForecasterDiff, Adversarial, CenteredNull };

[[nodiscard]] std::string_view to_string(StreamFamily family) noexcept;
[[nodiscard]] std::optional<StreamFamily> parse_stream_family(std::string_view name) noexcept;

// Parameters for every family live side by side; each family reads its own:
//   OneAxis        m, a, b, d      X_t = (m t^-a, 0, ..) + t^-b eps_t, eps_t ~ U(ball 1/5)
//   Spiral         m, a, M         X_t = m t^-a (cos 2pi t/M, sin 2pi t/M) + t^-2a eps_t,
//                                  eps_t ~ U(ball 1/10)
//   ForecasterDiff theta           X_t = brier(p_t, Y_t) - brier(q_t, Y_t)
//   Adversarial    kind, m         X_t = z_t - z_{t-1}, deterministic
//   CenteredNull   d, radius       X_t = radius * (independent signs) / sqrt(d)
struct StreamSpec {
  StreamFamily family = StreamFamily::OneAxis;
  double m = 0.2;
  double a = 0.0;
  double b = 0.0;
  int d = 2;
  int M = 50;
  double theta = 0.7;
  AdversarialKind adversarial = AdversarialKind::CapitalConst;
  double radius = 0.5;
  // Adversarial streams only: the declared geometry (d is forced to 1).
  GeometryBounds adversarial_geometry{1, 1.0, 2.0};
  std::uint64_t seed = 0;
  std::size_t T = 1000;

  // OneAxis: B = 0.7, D = 0.9. Spiral: B = 0.6, D = 1.2. ForecasterDiff:
  // B = 1, D = 2. CenteredNull: B = radius, D = 2 radius.
  [[nodiscard]] GeometryBounds geometry() const;
  // ForecasterDiff tests the one-sided null; everything else is two-sided.
  [[nodiscard]] NullSpec null() const;
  // ConfigError naming the offending parameter.
  void validate() const;
};

[[nodiscard]] StreamSpec one_axis_stream(double m, double a, double b, int d, std::uint64_t seed,
                                         std::size_t T = 1000);
[[nodiscard]] StreamSpec spiral_stream(double m, double a, int M, std::uint64_t seed,
                                       std::size_t T = 1000);
[[nodiscard]] StreamSpec forecaster_stream(double theta, std::uint64_t seed, std::size_t T = 1000);
[[nodiscard]] StreamSpec adversarial_stream(AdversarialKind kind, double m,
                                            const GeometryBounds& geometry, std::size_t T);
[[nodiscard]] StreamSpec centered_null_stream(int d, double radius, std::uint64_t seed,
                                              std::size_t T = 1000);

struct Observation {
  Vector x;
  // Known conditional moments of the generating process (upper bounds for
  // the second moments of the ball-noise families).
  Vector cond_mean;
  CondSecondMoments cond_sq;
  // ForecasterDiff only.
  double p = 0.5;
  double q = 0.5;
  int y = 0;
};

// Uniform on the solid ball: a normalized Gaussian direction scaled by
// radius * U^(1/d).
[[nodiscard]] Vector sample_uniform_ball(int d, double radius, Rng& rng);

// Standard normal distribution function.
[[nodiscard]] double normal_cdf(double z);

// All T observations of the stream seeded with spec.seed.
[[nodiscard]] std::vector<Observation> generate_stream(const StreamSpec& spec);

// (p - y)^2 - (q - y)^2. DomainError unless p, q in [0, 1] and y in {0, 1}.
[[nodiscard]] double brier_diff(double p, double q, int y);

// argmax over [0, 1/2] of pi log(1 + l x1) + (1 - pi) log(1 + l x0) with
// x_y = brier_diff(p, q, y).
[[nodiscard]] double henzi_bet(double p, double q, double pi_hat);

// Pointwise mean in wealth space of log-wealth trajectories, returned in log
// space. ConfigError on an empty list or mismatched lengths.
[[nodiscard]] std::vector<double> henzi_mixture(const std::vector<std::vector<double>>& log_wealths);

enum class ProcedureKind { HoeffdingFtl, CapitalEwa, CapitalOns, CapitalTwoStep, Henzi, HenziMixture };

struct ProcedureSpec {
  ProcedureKind kind = ProcedureKind::HoeffdingFtl;
  double beta = 0.0;                                    // Henzi: pi_hat = beta p + (1 - beta) q
  std::vector<double> betas{0.0, 0.25, 0.5, 0.75, 1.0};  // HenziMixture components

  // "hoeffding-ftl", "capital-ewa", "capital-ons", "capital-2steps",
  // "henzi-<100 beta>" or "henzi-mix".
  [[nodiscard]] std::string name() const;
};

// Inverse of ProcedureSpec::name; "henzi-<x>" accepts x in [0, 100].
[[nodiscard]] std::optional<ProcedureSpec> parse_procedure(std::string_view name);

[[nodiscard]] std::vector<ProcedureSpec> default_mean_procedures();
[[nodiscard]] std::vector<ProcedureSpec> default_forecaster_procedures(
    const std::vector<double>& betas = {0.0, 0.25, 0.5, 0.75, 1.0});

// One test run on a stream: feed observations in order, read the log-wealth.
class Procedure {
 public:
  // ConfigError when the procedure is not defined for the stream (Henzi on a
  // mean stream, two-step on a one-sided null, ...).
  Procedure(const ProcedureSpec& spec, const StreamSpec& stream);

  void step(const Observation& obs);
  [[nodiscard]] double log_wealth() const;
  [[nodiscard]] std::size_t steps() const noexcept { return t_; }

 private:
  ProcedureSpec spec_;
  std::optional<WealthProcess> process_;
  std::vector<double> component_log_wealth_;  // Henzi / HenziMixture
  std::size_t t_ = 0;
};

// log W_1..log W_T over the full horizon.
[[nodiscard]] std::vector<double> log_wealth_path(const ProcedureSpec& procedure,
                                                  const std::vector<Observation>& stream,
                                                  const StreamSpec& spec);

struct TrialSummary {
  std::string strategy;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  std::size_t tau_truncated = 0;  // tau ^ T, in [1, T]
  bool rejected = false;
  double final_logw = 0.0;        // log-wealth at tau ^ T
};

struct StrategyAggregate {
  std::string strategy;
  std::size_t replicates = 0;
  double mean_tau = 0.0;
  double stderr_tau = 0.0;  // sample standard deviation / sqrt(replicates)
  double reject_rate = 0.0;
};

struct MonteCarloResult {
  std::vector<TrialSummary> trials;  // replicate-major, procedures in input order
  std::vector<StrategyAggregate> aggregates;
};

// Runs one replicate of every procedure on the stream seeded with `seed`.
// Each procedure stops at its rejection time.
[[nodiscard]] std::vector<TrialSummary> run_replicate(const StreamSpec& stream,
                                                      const std::vector<ProcedureSpec>& procedures,
                                                      double alpha, std::size_t replicate,
                                                      std::uint64_t seed);

// Replicate r uses seed base_seed + r and every procedure sees the same
// observations. Replicates are spread over `threads` workers (0: hardware
// concurrency); results do not depend on the thread count.
[[nodiscard]] MonteCarloResult monte_carlo_tau(const StreamSpec& stream,
                                               const std::vector<ProcedureSpec>& procedures,
                                               double alpha, std::size_t replicates,
                                               std::uint64_t base_seed, unsigned threads = 0);

// Aggregates in order of first appearance of each strategy name.
[[nodiscard]] std::vector<StrategyAggregate> aggregate_trials(const std::vector<TrialSummary>& trials);

}  // namespace savi
