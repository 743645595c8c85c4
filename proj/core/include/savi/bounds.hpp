#pragma once

// Deterministic power-bound machinery.
//
// A wealth process W_n with P[log W_n < u_n] summable satisfies
// E[tau_alpha] <= varrho + aleph(u, log(1/alpha)), where
// aleph(u, x) = inf{n >= 1 : inf_{k >= n} u_k >= x}. This header provides the
// u_n families for each process, aleph (generic and closed form), the
// solver of log(y)/y = z, adversarial streams and deterministic lower bounds
// on the rejection time. Logarithms are natural throughout.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "savi/core.hpp"

namespace savi {

using Sequence = std::function<double(std::size_t)>;

enum class BoundFamily {
  HoeffdingTwoSided,   // 2n(m_n - 2D sqrt(log n / n))_+^2 / D^2 - r_n
  CapitalFixedEps,     // eps n m_n - 4 eps^2 n v_n - 2 log(2 d n^2) - r_n
  CapitalAdaptiveEps,  // (n m_n / 4)(1/B ^ m_n / (4 v_n)) - 2 log(2 d n^2) - r_n
  TwoStep,             // ((n m_n - s_n)_+ / 4)(1 ^ (n m_n - s_n)_+ / (4 n v_n)) - 4 log n - r_n
  HoeffdingOneSided,   // 2n(m_n - D sqrt(log n / n))_+^2 / D^2 - r_n
  CapitalOneSided,     // (n m_n / 4)(1/B ^ m_n / (4 v_n)) - 4 log n - r_n
  HoeffdingFunctional, // (1/2n)(n m_n - s_n - 2 sqrt(n log n))_+^2 - r_n
  CapitalFunctional,   // same form as TwoStep
};

[[nodiscard]] std::string_view to_string(BoundFamily family) noexcept;
[[nodiscard]] std::optional<BoundFamily> parse_bound_family(std::string_view name) noexcept;

// Constant added to the caller-supplied tail sums: pi^2/3 or pi^2/6
// depending on the family.
[[nodiscard]] double family_constant(BoundFamily family) noexcept;

struct PowerBoundSpec {
  BoundFamily family = BoundFamily::HoeffdingTwoSided;
  Sequence m;  // required
  Sequence v;  // Capital* and TwoStep / CapitalFunctional
  Sequence r;  // regret bound; treated as 0 when empty
  Sequence s;  // stochastic regret: TwoStep and functional families
  std::optional<double> eps;  // CapitalFixedEps only
  GeometryBounds geometry;
};

// Throws ConfigError naming the family when a required piece is missing.
void validate(const PowerBoundSpec& spec);

// Exact evaluation of u_n for n >= 1.
[[nodiscard]] double u_n(const PowerBoundSpec& spec, std::size_t n);

// Default regret sequences. log terms at n = 1 are nonnegative already;
// log n is clamped at zero so that r_n is never negative.
[[nodiscard]] Sequence ftl_regret_bound();                 // 4(1 + log n)
[[nodiscard]] Sequence ewa_regret_bound(int d);            // log(2d)
[[nodiscard]] Sequence ons_regret_bound(int d);            // d(7.2 + 4.5 log n)
[[nodiscard]] Sequence oga_stochastic_regret_bound();      // sqrt(n)(1 + 4 sqrt(log n))
[[nodiscard]] Sequence constant_sequence(double value);

// First n in [1, horizon] whose suffix minimum over [n, horizon] is >= x;
// nullopt means "beyond the horizon" (the true aleph may be larger, or
// infinite). One backward pass over u_1..u_horizon.
[[nodiscard]] std::optional<std::size_t> aleph(const Sequence& u, double x, std::size_t horizon);
[[nodiscard]] std::optional<std::size_t> aleph(std::span<const double> u, double x);

// z log z; DomainError for z <= 0.
[[nodiscard]] double linlog(double z);

// For z <= 1/e, the solution y in [e, inf) of log(y)/y = z; 0 for z > 1/e.
// DomainError for z <= 0.
[[nodiscard]] double lambert_like(double z);

// aleph((a n^beta - b log n)_n, x) in closed form, for a, b, beta > 0.
[[nodiscard]] std::size_t aleph_closed_form(double a, double b, double beta, double x);

struct TauBound {
  std::optional<std::size_t> aleph;  // nullopt: beyond horizon
  double constant = 0.0;             // rho_terms + family constant
  // constant + aleph, or nullopt when aleph is beyond the horizon.
  [[nodiscard]] std::optional<double> value() const {
    if (!aleph) return std::nullopt;
    return constant + static_cast<double>(*aleph);
  }
};

// E[tau_alpha] <= rho_terms + family_constant + aleph(u, log(1/alpha)).
// rho_terms collects the caller's tail sums (regret, alternative, ...).
[[nodiscard]] TauBound expected_tau_bound(const PowerBoundSpec& spec, double rho_terms,
                                          double alpha, std::size_t horizon);

// Deterministic streams attaining the limit cases / lower bounds:
// X_t = z_t - z_{t-1} with z_0 = 0.
enum class AdversarialKind {
  HoeffdingLimit,  // z_n = m sqrt(n)
  HoeffdingConst,  // z_n = n m
  CapitalLimit,    // z_n = m (a single jump)
  CapitalConst,    // z_n = n m
};

[[nodiscard]] std::string_view to_string(AdversarialKind kind) noexcept;
[[nodiscard]] std::optional<AdversarialKind> parse_adversarial_kind(std::string_view name) noexcept;

// T scalar observations X_1..X_T. `partial_sum` overrides z_n (used for
// the o(1/sqrt n) and o(1/n) variants); z must be nondecreasing with z_0 = 0.
[[nodiscard]] std::vector<double> adversarial_values(AdversarialKind kind, double m, std::size_t T,
                                                     const Sequence& partial_sum = {});

// Hoeffding: D^2 log(1/alpha) / (2 m^2). Capital: 2 B log(1/alpha) / m.
enum class LowerBoundKind { Hoeffding, Capital };
[[nodiscard]] double lower_bound_tau(LowerBoundKind kind, double m, const GeometryBounds& geometry,
                                     double alpha);

// Largest m for which the limit stream provably never rejects:
// D / sqrt(2 log(1/alpha)) for Hoeffding, 2 B log(1/alpha) for Capital.
[[nodiscard]] double limit_threshold(LowerBoundKind kind, const GeometryBounds& geometry,
                                     double alpha);

}  // namespace savi
