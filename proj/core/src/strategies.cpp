#include "savi/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "savi/projection.hpp"

namespace savi {

double ons_step_constant() noexcept { return 2.0 / (2.0 - std::log(3.0)); }

namespace {

Vector clamp_nonnegative(Vector v) { return v.cwiseMax(0.0); }

}  // namespace

// FTL ----------------------------------------------------------------------

FtlStrategy::FtlStrategy(const GeometryBounds& geometry, bool one_sided)
    : geometry_(geometry), one_sided_(one_sided), sum_(Vector::Zero(geometry.d)) {
  geometry_.validate();
  if (!(geometry_.D > 0.0)) {
    throw ConfigError("FTL: diameter D must be positive");
  }
}

Vector FtlStrategy::empirical_mean() const {
  if (n_ == 0) return Vector::Zero(sum_.size());
  return sum_ / static_cast<double>(n_);
}

Vector FtlStrategy::bet() const {
  Vector lambda = 4.0 * empirical_mean() / (geometry_.D * geometry_.D);
  return one_sided_ ? clamp_nonnegative(std::move(lambda)) : lambda;
}

void FtlStrategy::update(const Vector& x) {
  sum_ += x;
  ++n_;
}

// EWA ----------------------------------------------------------------------

EwaStrategy::EwaStrategy(const GeometryBounds& geometry, bool one_sided,
                         std::optional<double> eps) {
  geometry.validate();
  const double max_eps = 1.0 / (2.0 * geometry.B);
  eps_ = eps.value_or(max_eps);
  if (!(eps_ > 0.0) || eps_ > max_eps * (1.0 + 1e-12)) {
    throw ConfigError("EWA: eps must lie in (0, 1/(2B)]");
  }
  const int d = geometry.d;
  for (int k = 0; k < d; ++k) {
    vertices_.push_back(eps_ * Vector::Unit(d, k));
  }
  if (!one_sided) {
    for (int k = 0; k < d; ++k) {
      vertices_.push_back(-eps_ * Vector::Unit(d, k));
    }
  }
  log_wealth_.assign(vertices_.size(), 0.0);
}

std::vector<double> EwaStrategy::weights() const {
  const double top = *std::max_element(log_wealth_.begin(), log_wealth_.end());
  std::vector<double> w(log_wealth_.size());
  double total = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = std::exp(log_wealth_[k] - top);
    total += w[k];
  }
  for (double& wk : w) wk /= total;
  return w;
}

Vector EwaStrategy::bet() const {
  const std::vector<double> w = weights();
  Vector gamma = Vector::Zero(vertices_.front().size());
  for (std::size_t k = 0; k < w.size(); ++k) gamma += w[k] * vertices_[k];
  return gamma;
}

void EwaStrategy::update(const Vector& x) {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const double growth = 1.0 + vertices_[k].dot(x);
    if (!(growth > 0.0)) {
      throw DomainError("EWA: vertex bet leaves the admissible set (1 + g^T x <= 0)");
    }
    log_wealth_[k] += std::log(growth);
  }
}

// ONS ----------------------------------------------------------------------

OnsStrategy::OnsStrategy(const GeometryBounds& geometry, bool one_sided)
    : scale_(geometry.B),
      one_sided_(one_sided),
      A_(Matrix::Identity(geometry.d, geometry.d)),
      gamma_(Vector::Zero(geometry.d)),
      raw_(Vector::Zero(geometry.d)) {
  geometry.validate();
  if (one_sided_ && geometry.d != 1) {
    throw ConfigError("ONS: the one-sided variant is only defined for d = 1");
  }
}

void OnsStrategy::update(const Vector& x_raw) {
  const Vector x = x_raw / scale_;
  const double denom = 1.0 + gamma_.dot(x);
  if (!(denom > 0.0)) {
    throw NumericError("ONS: 1 + gamma^T x <= 0; bet left the admissible set");
  }
  const Vector z = -x / denom;
  A_.noalias() += z * z.transpose();
  raw_ = gamma_ - ons_step_constant() * A_.ldlt().solve(z);
  if (!raw_.allFinite()) {
    throw NumericError("ONS: non-finite Newton step");
  }
  if (one_sided_) {
    gamma_ = raw_;
    gamma_(0) = project_to_interval(raw_(0), 0.0, 0.5);
  } else {
    gamma_ = a_norm_ball_projection(A_, raw_, 0.5);
  }
}

// OGA ----------------------------------------------------------------------

OgaStrategy::OgaStrategy(const GeometryBounds& geometry)
    : B_(geometry.B), eta_(Vector::Zero(geometry.d)) {
  geometry.validate();
}

void OgaStrategy::update(const Vector& x) {
  const double rate = 2.0 / (B_ * B_ * std::sqrt(static_cast<double>(t_)));
  eta_ = project_to_ball(eta_ + rate * x, 1.0 / B_);
  ++t_;
}

// Two-step -----------------------------------------------------------------

TwoStepStrategy::TwoStepStrategy(const GeometryBounds& geometry)
    : direction_(geometry), size_(GeometryBounds{1, 1.0, 2.0}, false) {}

void TwoStepStrategy::update(const Vector& x) {
  // |eta^T x| <= ||eta|| ||x|| <= 1; clamp away rounding excess.
  const double projected = std::clamp(direction_.direction().dot(x), -1.0, 1.0);
  size_.update(Vector::Constant(1, projected));
  direction_.update(x);
}

// Variant helpers -----------------------------------------------------------

Vector bet_of(const AnyStrategy& strategy) {
  return std::visit([](const auto& s) { return Vector(s.bet()); }, strategy);
}

void update_strategy(AnyStrategy& strategy, const Vector& x) {
  std::visit([&](auto& s) { s.update(x); }, strategy);
}

std::string_view strategy_name(const AnyStrategy& strategy) noexcept {
  struct Namer {
    std::string_view operator()(const FtlStrategy&) const { return "ftl"; }
    std::string_view operator()(const EwaStrategy&) const { return "ewa"; }
    std::string_view operator()(const OnsStrategy&) const { return "ons"; }
    std::string_view operator()(const TwoStepStrategy&) const { return "2steps"; }
    std::string_view operator()(const FixedBetStrategy&) const { return "fixed"; }
  };
  return std::visit(Namer{}, strategy);
}

}  // namespace savi
