#include <algorithm>
#include <cmath>
#include <limits>

#include "savi/experiments.hpp"

namespace savi {

namespace {

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

double brier_diff(double p, double q, int y) {
  if (!in_unit_interval(p) || !in_unit_interval(q)) {
    throw DomainError("brier_diff: forecasts must lie in [0, 1]");
  }
  if (y != 0 && y != 1) throw DomainError("brier_diff: outcome must be 0 or 1");
  const double yd = static_cast<double>(y);
  return (p - yd) * (p - yd) - (q - yd) * (q - yd);
}

double henzi_bet(double p, double q, double pi_hat) {
  if (!in_unit_interval(pi_hat)) throw DomainError("henzi_bet: pi_hat must lie in [0, 1]");
  const double x1 = brier_diff(p, q, 1);
  const double x0 = brier_diff(p, q, 0);
  const double drift = pi_hat * x1 + (1.0 - pi_hat) * x0;
  if (!(drift > 0.0)) return 0.0;
  // The objective is concave with positive slope at 0; its derivative
  // vanishes at -drift / (x0 x1) when x0 x1 < 0.
  const double product = x0 * x1;
  if (product < 0.0) {
    const double stationary = -drift / product;
    if (stationary < 0.5) return stationary;
  }
  return 0.5;
}

std::vector<double> henzi_mixture(const std::vector<std::vector<double>>& log_wealths) {
  if (log_wealths.empty()) throw ConfigError("henzi_mixture: no trajectories");
  const std::size_t T = log_wealths.front().size();
  for (const auto& path : log_wealths) {
    if (path.size() != T) throw ConfigError("henzi_mixture: trajectories differ in length");
  }
  const double log_k = std::log(static_cast<double>(log_wealths.size()));
  std::vector<double> out(T);
  for (std::size_t t = 0; t < T; ++t) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& path : log_wealths) top = std::max(top, path[t]);
    double sum = 0.0;
    for (const auto& path : log_wealths) sum += std::exp(path[t] - top);
    out[t] = top + std::log(sum) - log_k;
  }
  return out;
}

}  // namespace savi
