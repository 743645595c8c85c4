#include "savi/regret.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace savi {

namespace {

Vector mean_of(std::span<const Vector> history) {
  Vector sum = Vector::Zero(history.front().size());
  for (const Vector& x : history) sum += x;
  return sum / static_cast<double>(history.size());
}

}  // namespace

double hoeffding_max_log_wealth(std::span<const Vector> history, NullSpec null,
                                const GeometryBounds& geometry) {
  if (history.empty()) throw ConfigError("hoeffding oracle: empty history");
  if (!(geometry.D > 0.0)) throw ConfigError("hoeffding oracle: D must be positive");
  const double n = static_cast<double>(history.size());
  Vector mean = mean_of(history);
  if (is_one_sided(null)) mean = mean.cwiseMax(0.0);
  return 2.0 * n * mean.squaredNorm() / (geometry.D * geometry.D);
}

double hoeffding_regret_oracle(std::span<const Vector> history, double log_wealth, NullSpec null,
                               const GeometryBounds& geometry) {
  return hoeffding_max_log_wealth(history, null, geometry) - log_wealth;
}

double capital_max_log_wealth(std::span<const Vector> history, const GammaSet& set) {
  if (history.empty()) return 0.0;
  if (const auto* vertices = std::get_if<VertexSet>(&set)) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vector& g : vertices->vertices) {
      double total = 0.0;
      for (const Vector& x : history) {
        const double growth = 1.0 + g.dot(x);
        if (!(growth > 0.0)) throw DomainError("capital oracle: vertex outside admissible set");
        total += std::log(growth);
      }
      best = std::max(best, total);
    }
    return best;
  }
  CapitalBallOracle oracle(static_cast<int>(history.front().size()), std::get<BallSet>(set));
  for (const Vector& x : history) oracle.add(x);
  return oracle.max_log_wealth();
}

double capital_regret_oracle(std::span<const Vector> history, double log_wealth,
                             const GammaSet& set) {
  return capital_max_log_wealth(history, set) - log_wealth;
}

// CapitalBallOracle -----------------------------------------------------------

CapitalBallOracle::CapitalBallOracle(int d, BallSet set)
    : d_(d), set_(set), gamma_(Vector::Zero(d)) {
  if (d < 1) throw ConfigError("capital oracle: dimension must be >= 1");
  if (!(set.radius > 0.0)) throw ConfigError("capital oracle: radius must be positive");
  if (set.one_sided && d != 1) {
    throw ConfigError("capital oracle: one-sided ball is only defined for d = 1");
  }
}

void CapitalBallOracle::add(const Vector& x) {
  if (x.size() != d_) throw ConfigError("capital oracle: observation dimension mismatch");
  history_.push_back(x);
}

double CapitalBallOracle::objective(const Vector& gamma) const {
  double total = 0.0;
  for (const Vector& x : history_) {
    const double growth = 1.0 + gamma.dot(x);
    if (!(growth > 0.0)) return -std::numeric_limits<double>::infinity();
    total += std::log(growth);
  }
  return total;
}

Vector CapitalBallOracle::gradient(const Vector& gamma) const {
  Vector g = Vector::Zero(d_);
  for (const Vector& x : history_) g += x / (1.0 + gamma.dot(x));
  return g;
}

double CapitalBallOracle::max_log_wealth() {
  if (history_.empty()) return 0.0;
  return d_ == 1 ? solve_scalar() : solve_ball();
}

double CapitalBallOracle::solve_scalar() {
  const double lo_end = set_.one_sided ? 0.0 : -set_.radius;
  const double hi_end = set_.radius;
  auto derivatives = [&](double c) {
    double first = 0.0;
    double second = 0.0;
    for (const Vector& x : history_) {
      const double u = x(0) / (1.0 + c * x(0));
      first += u;
      second -= u * u;
    }
    return std::pair{first, second};
  };

  double c;
  if (derivatives(hi_end).first >= 0.0) {
    c = hi_end;
  } else if (derivatives(lo_end).first <= 0.0) {
    c = lo_end;
  } else {
    double lo = lo_end;
    double hi = hi_end;
    c = std::clamp(gamma_(0), lo, hi);
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
      const auto [first, second] = derivatives(c);
      if (first > 0.0) {
        lo = c;
      } else if (first < 0.0) {
        hi = c;
      } else {
        break;
      }
      double next = second < 0.0 ? c - first / second : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - c) <= 1e-15) {
        c = next;
        break;
      }
      c = next;
    }
  }
  gamma_(0) = c;
  return objective(gamma_);
}

double CapitalBallOracle::solve_ball() {
  const double r = set_.radius;
  auto project = [r](Vector v) {
    const double norm = v.norm();
    if (norm > r) v *= r / norm;
    return v;
  };

  gamma_ = project(gamma_);
  double value = objective(gamma_);
  for (int iter = 0; iter < 20000; ++iter) {
    const Vector grad = gradient(gamma_);
    const double gap = r * grad.norm() - grad.dot(gamma_);
    if (gap <= 1e-7) break;

    bool accepted = false;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      const Vector candidate = project(gamma_ + step_ * grad);
      const Vector delta = candidate - gamma_;
      const double candidate_value = objective(candidate);
      if (candidate_value >= value + grad.dot(delta) - delta.squaredNorm() / (2.0 * step_)) {
        accepted = delta.squaredNorm() > 0.0;
        gamma_ = candidate;
        value = candidate_value;
        step_ *= 2.0;
        break;
      }
      step_ *= 0.5;
    }
    if (!accepted) break;
  }
  return value;
}

}  // namespace savi
