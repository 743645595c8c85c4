#include "savi/projection.hpp"

#include <algorithm>
#include <cmath>

namespace savi {

Vector project_to_ball(const Vector& x, double r) {
  const double norm = x.norm();
  if (norm <= r) return x;
  return x * (r / norm);
}

double project_to_interval(double x, double lo, double hi) noexcept {
  return std::clamp(x, lo, hi);
}

Vector a_norm_ball_projection(const Matrix& A, const Vector& x, double r) {
  if (!(r > 0.0)) throw ConfigError("a-norm projection: radius must be positive");
  if (A.rows() != A.cols() || A.rows() != x.size()) {
    throw ConfigError("a-norm projection: matrix and vector sizes disagree");
  }
  if (!A.allFinite() || !x.allFinite()) {
    throw NumericError("a-norm projection: non-finite input");
  }
  if (x.norm() <= r) return x;

  if (x.size() == 1) {
    Vector y(1);
    y(0) = std::clamp(x(0), -r, r);
    return y;
  }

  const Eigen::SelfAdjointEigenSolver<Matrix> eig(A);
  if (eig.info() != Eigen::Success) {
    throw NumericError("a-norm projection: eigendecomposition failed");
  }
  const Vector& lambda = eig.eigenvalues();
  if (lambda.minCoeff() <= 0.0) {
    throw NumericError("a-norm projection: matrix is not positive definite");
  }
  const Vector coords = eig.eigenvectors().transpose() * x;

  auto shrunk = [&](double mu) {
    return Vector(lambda.array() / (lambda.array() + mu) * coords.array());
  };

  double lo = 0.0;
  double hi = 1.0;
  Vector at_hi = shrunk(hi);
  while (at_hi.norm() >= r) {
    lo = hi;
    hi *= 2.0;
    at_hi = shrunk(hi);
    if (!std::isfinite(hi)) throw NumericError("a-norm projection: bracket diverged");
  }

  const double tol = 1e-10 * r;
  for (int iter = 0; iter < 2000 && r - at_hi.norm() > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    Vector at_mid = shrunk(mid);
    if (at_mid.norm() >= r) {
      lo = mid;
    } else {
      hi = mid;
      at_hi = std::move(at_mid);
    }
  }
  return eig.eigenvectors() * at_hi;
}

}  // namespace savi
