#pragma once

#include "savi/core.hpp"

namespace savi {

// Euclidean projection onto the centered ball of radius r.
[[nodiscard]] Vector project_to_ball(const Vector& x, double r);

// argmin_{||y||_2 <= r} (y - x)^T A (y - x) for symmetric positive-definite A.
//
// Interior points are returned unchanged. Otherwise the minimizer is
// y(mu) = (A + mu I)^{-1} A x for the multiplier mu >= 0 with ||y(mu)|| = r.
// ||y(mu)|| is decreasing in mu, so mu is found by bisection on a bracket
// [0, mu_hi] where mu_hi doubles until ||y(mu_hi)|| < r; iteration stops once
// r - ||y(mu_hi)|| <= 1e-10 r and the feasible endpoint is returned.
// Throws NumericError on non-finite input and ConfigError if r <= 0 or A is
// not square of matching size.
[[nodiscard]] Vector a_norm_ball_projection(const Matrix& A, const Vector& x, double r);

// Same problem restricted to one dimension and S = [0, r]: clamping.
[[nodiscard]] double project_to_interval(double x, double lo, double hi) noexcept;

}  // namespace savi
