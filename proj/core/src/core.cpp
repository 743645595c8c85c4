#include "savi/core.hpp"

#include <cmath>
#include <sstream>

namespace savi {

void GeometryBounds::validate() const {
  if (d < 1) {
    throw ConfigError("geometry: dimension d must be >= 1, got " + std::to_string(d));
  }
  if (!(B > 0.0) || !std::isfinite(B)) {
    throw ConfigError("geometry: norm bound B must be positive and finite");
  }
  if (!(D >= 0.0) || !std::isfinite(D)) {
    throw ConfigError("geometry: diameter D must be nonnegative and finite");
  }
  if (D > 2.0 * B * (1.0 + kNormSlack)) {
    throw ConfigError("geometry: diameter D must satisfy D <= 2B");
  }
}

bool is_one_sided(NullSpec null) noexcept {
  return null == NullSpec::OneSidedMean || null == NullSpec::FunctionalOneSided;
}

bool is_functional(NullSpec null) noexcept {
  return null == NullSpec::FunctionalTwoSided || null == NullSpec::FunctionalOneSided;
}

std::string_view to_string(NullSpec null) noexcept {
  switch (null) {
    case NullSpec::TwoSidedMean: return "two-sided-mean";
    case NullSpec::OneSidedMean: return "one-sided-mean";
    case NullSpec::FunctionalTwoSided: return "functional-two-sided";
    case NullSpec::FunctionalOneSided: return "functional-one-sided";
  }
  return "unknown";
}

void check_observation(const Vector& x, const GeometryBounds& geometry) {
  if (x.size() != geometry.d) {
    std::ostringstream msg;
    msg << "observation has dimension " << x.size() << ", expected " << geometry.d;
    throw IngestionError(msg.str());
  }
  if (!x.allFinite()) {
    throw IngestionError("observation has non-finite entries");
  }
  const double norm = x.norm();
  if (norm > geometry.B * (1.0 + kNormSlack)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "observation norm " << norm << " exceeds the bound B = " << geometry.B;
    throw IngestionError(msg.str());
  }
}

void check_functional_value(double g) {
  if (!(std::abs(g) <= 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "functional value " << g << " outside [-1, 1]";
    throw DomainError(msg.str());
  }
}

RunningStats::RunningStats(int d)
    : sum_x_(Vector::Zero(d)), sum_cond_mean_(Vector::Zero(d)) {
  if (d < 1) {
    throw ConfigError("running stats: dimension must be >= 1");
  }
}

void RunningStats::update(const Vector& x, const GeometryBounds& geometry,
                          const std::optional<Vector>& cond_mean,
                          const std::optional<CondSecondMoments>& cond_sq) {
  check_observation(x, geometry);
  if (cond_mean && cond_mean->size() != sum_x_.size()) {
    throw ConfigError("running stats: conditional mean has the wrong dimension");
  }
  sum_x_ += x;
  ++n_;
  if (cond_mean) {
    sum_cond_mean_ += *cond_mean;
    ++n_cond_mean_;
  }
  if (cond_sq) {
    sum_cond_sq_.sq_2 += cond_sq->sq_2;
    sum_cond_sq_.sq_inf += cond_sq->sq_inf;
    ++n_cond_sq_;
  }
}

Vector RunningStats::empirical_mean() const {
  if (n_ == 0) return Vector::Zero(sum_x_.size());
  return sum_x_ / static_cast<double>(n_);
}

std::optional<Vector> RunningStats::conditional_mean() const {
  if (n_ == 0 || n_cond_mean_ != n_) return std::nullopt;
  return Vector(sum_cond_mean_ / static_cast<double>(n_));
}

std::optional<CondSecondMoments> RunningStats::conditional_second_moments() const {
  if (n_ == 0 || n_cond_sq_ != n_) return std::nullopt;
  const double n = static_cast<double>(n_);
  return CondSecondMoments{sum_cond_sq_.sq_2 / n, sum_cond_sq_.sq_inf / n};
}

}  // namespace savi
