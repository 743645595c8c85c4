#include "savi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "savi/martingales.hpp"

namespace savi {

namespace {

double positive_part(double v) { return v > 0.0 ? v : 0.0; }

double log_n(std::size_t n) { return std::log(static_cast<double>(n)); }

bool needs_v(BoundFamily f) {
  return f == BoundFamily::CapitalFixedEps || f == BoundFamily::CapitalAdaptiveEps ||
         f == BoundFamily::TwoStep || f == BoundFamily::CapitalOneSided ||
         f == BoundFamily::CapitalFunctional;
}

bool needs_s(BoundFamily f) {
  return f == BoundFamily::TwoStep || f == BoundFamily::HoeffdingFunctional ||
         f == BoundFamily::CapitalFunctional;
}

// min(1/B, m / (4 v)), with m / 0 read as +infinity.
double capital_rate(double m, double v, double B) {
  if (v <= 0.0) return 1.0 / B;
  return std::min(1.0 / B, m / (4.0 * v));
}

// (x_+ / 4) (1 ^ x_+ / (4 n v)).
double two_step_growth(double excess, double n, double v) {
  const double e = positive_part(excess);
  if (e == 0.0) return 0.0;
  const double ratio = v <= 0.0 ? 1.0 : std::min(1.0, e / (4.0 * n * v));
  return e / 4.0 * ratio;
}

}  // namespace

std::string_view to_string(BoundFamily family) noexcept {
  switch (family) {
    case BoundFamily::HoeffdingTwoSided: return "hoeffding";
    case BoundFamily::CapitalFixedEps: return "capital-fixed-eps";
    case BoundFamily::CapitalAdaptiveEps: return "capital-adaptive-eps";
    case BoundFamily::TwoStep: return "two-step";
    case BoundFamily::HoeffdingOneSided: return "hoeffding-one-sided";
    case BoundFamily::CapitalOneSided: return "capital-one-sided";
    case BoundFamily::HoeffdingFunctional: return "hoeffding-functional";
    case BoundFamily::CapitalFunctional: return "capital-functional";
  }
  return "unknown";
}

std::optional<BoundFamily> parse_bound_family(std::string_view name) noexcept {
  for (BoundFamily f : {BoundFamily::HoeffdingTwoSided, BoundFamily::CapitalFixedEps,
                        BoundFamily::CapitalAdaptiveEps, BoundFamily::TwoStep,
                        BoundFamily::HoeffdingOneSided, BoundFamily::CapitalOneSided,
                        BoundFamily::HoeffdingFunctional, BoundFamily::CapitalFunctional}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

double family_constant(BoundFamily family) noexcept {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  switch (family) {
    case BoundFamily::HoeffdingTwoSided:
    case BoundFamily::TwoStep:
    case BoundFamily::CapitalOneSided:
    case BoundFamily::CapitalFunctional:
      return pi2 / 3.0;
    case BoundFamily::CapitalFixedEps:
    case BoundFamily::CapitalAdaptiveEps:
    case BoundFamily::HoeffdingOneSided:
    case BoundFamily::HoeffdingFunctional:
      return pi2 / 6.0;
  }
  return 0.0;
}

void validate(const PowerBoundSpec& spec) {
  const std::string name(to_string(spec.family));
  if (!spec.m) throw ConfigError("bound family " + name + ": sequence m_n is required");
  if (needs_v(spec.family) && !spec.v) {
    throw ConfigError("bound family " + name + ": sequence v_n is required");
  }
  if (needs_s(spec.family) && !spec.s) {
    throw ConfigError("bound family " + name + ": sequence s_n is required");
  }
  if (spec.family == BoundFamily::CapitalFixedEps) {
    if (!spec.eps) throw ConfigError("bound family " + name + ": eps is required");
    const double max_eps = 1.0 / (2.0 * spec.geometry.B);
    if (!(*spec.eps > 0.0) || *spec.eps > max_eps * (1.0 + 1e-12)) {
      throw ConfigError("bound family " + name + ": eps must lie in (0, 1/(2B)]");
    }
  }
  spec.geometry.validate();
  if ((spec.family == BoundFamily::HoeffdingTwoSided ||
       spec.family == BoundFamily::HoeffdingOneSided) &&
      !(spec.geometry.D > 0.0)) {
    throw ConfigError("bound family " + name + ": D must be positive");
  }
}

double u_n(const PowerBoundSpec& spec, std::size_t n_index) {
  if (n_index < 1) throw ConfigError("u_n: n must be >= 1");
  validate(spec);
  const double n = static_cast<double>(n_index);
  const double ln = log_n(n_index);
  const double m = spec.m(n_index);
  const double r = spec.r ? spec.r(n_index) : 0.0;
  const double B = spec.geometry.B;
  const double D = spec.geometry.D;
  const double d = static_cast<double>(spec.geometry.d);

  switch (spec.family) {
    case BoundFamily::HoeffdingTwoSided: {
      const double gap = positive_part(m - 2.0 * D * std::sqrt(ln / n));
      return 2.0 * n * gap * gap / (D * D) - r;
    }
    case BoundFamily::HoeffdingOneSided: {
      const double gap = positive_part(m - D * std::sqrt(ln / n));
      return 2.0 * n * gap * gap / (D * D) - r;
    }
    case BoundFamily::CapitalFixedEps: {
      const double eps = *spec.eps;
      const double v = spec.v(n_index);
      return eps * n * m - 4.0 * eps * eps * n * v - 2.0 * std::log(2.0 * d * n * n) - r;
    }
    case BoundFamily::CapitalAdaptiveEps: {
      const double v = spec.v(n_index);
      return n * m / 4.0 * capital_rate(m, v, B) - 2.0 * std::log(2.0 * d * n * n) - r;
    }
    case BoundFamily::CapitalOneSided: {
      const double v = spec.v(n_index);
      return n * m / 4.0 * capital_rate(m, v, B) - 4.0 * ln - r;
    }
    case BoundFamily::TwoStep:
    case BoundFamily::CapitalFunctional: {
      const double v = spec.v(n_index);
      const double s = spec.s(n_index);
      return two_step_growth(n * m - s, n, v) - 4.0 * ln - r;
    }
    case BoundFamily::HoeffdingFunctional: {
      const double s = spec.s(n_index);
      const double excess = positive_part(n * m - s - 2.0 * std::sqrt(n * ln));
      return excess * excess / (2.0 * n) - r;
    }
  }
  return 0.0;
}

Sequence ftl_regret_bound() {
  return [](std::size_t n) { return 4.0 * (1.0 + std::max(0.0, log_n(n))); };
}

Sequence ewa_regret_bound(int d) {
  const double value = std::log(2.0 * d);
  return [value](std::size_t) { return value; };
}

Sequence ons_regret_bound(int d) {
  return [d](std::size_t n) { return d * (7.2 + 4.5 * std::max(0.0, log_n(n))); };
}

Sequence oga_stochastic_regret_bound() {
  return [](std::size_t n) {
    const double x = static_cast<double>(n);
    return std::sqrt(x) * (1.0 + 4.0 * std::sqrt(std::max(0.0, std::log(x))));
  };
}

Sequence constant_sequence(double value) {
  return [value](std::size_t) { return value; };
}

std::optional<std::size_t> aleph(std::span<const double> u, double x) {
  if (u.empty()) return std::nullopt;
  // suffix_ok[i] <=> min(u[i..]) >= x; the set of such i is a suffix.
  std::size_t first = u.size();
  for (std::size_t i = u.size(); i-- > 0;) {
    if (!(u[i] >= x)) break;
    first = i;
  }
  if (first == u.size()) return std::nullopt;
  return first + 1;
}

std::optional<std::size_t> aleph(const Sequence& u, double x, std::size_t horizon) {
  if (horizon < 1) throw ConfigError("aleph: horizon must be >= 1");
  std::vector<double> values(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) values[n - 1] = u(n);
  return aleph(values, x);
}

double linlog(double z) {
  if (!(z > 0.0)) throw DomainError("linlog: argument must be positive");
  return z * std::log(z);
}

double lambert_like(double z) {
  if (!(z > 0.0)) throw DomainError("lambert_like: argument must be positive");
  const double inv_e = std::exp(-1.0);
  if (z > inv_e) return 0.0;
  if (z == inv_e) return std::numbers::e;

  // log(y)/y - z is decreasing on [e, inf), nonnegative at e, and the root
  // lies below min(1/z^2, 2 log(1/z) / z).
  double lo = std::numbers::e;
  double hi = std::max(lo, std::min(1.0 / (z * z), 2.0 * std::log(1.0 / z) / z));
  hi = std::nextafter(hi * (1.0 + 1e-12), HUGE_VAL);
  auto h = [z](double y) { return std::log(y) / y - z; };
  while (h(hi) > 0.0) hi *= 2.0;
  for (int iter = 0; iter < 4000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(h(lo)) <= std::abs(h(hi)) ? lo : hi;
}

std::size_t aleph_closed_form(double a, double b, double beta, double x) {
  if (!(a > 0.0 && b > 0.0 && beta > 0.0)) {
    throw DomainError("aleph_closed_form: a, b and beta must be positive");
  }
  const double w = std::exp(-beta * x / b);
  const double z = a * beta / b * w;
  if (!(z <= std::exp(-1.0))) return 1;  // also covers w = inf
  const double n_star = std::pow(w * lambert_like(z), 1.0 / beta);
  const double n = std::ceil(n_star);
  return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

TauBound expected_tau_bound(const PowerBoundSpec& spec, double rho_terms, double alpha,
                            std::size_t horizon) {
  if (!(rho_terms >= 0.0)) throw ConfigError("expected_tau_bound: rho terms must be >= 0");
  validate(spec);
  const double threshold = rejection_threshold(alpha);
  TauBound bound;
  bound.constant = rho_terms + family_constant(spec.family);
  bound.aleph = aleph([&spec](std::size_t n) { return u_n(spec, n); }, threshold, horizon);
  return bound;
}

std::string_view to_string(AdversarialKind kind) noexcept {
  switch (kind) {
    case AdversarialKind::HoeffdingLimit: return "hoeffding-limit";
    case AdversarialKind::HoeffdingConst: return "hoeffding-const";
    case AdversarialKind::CapitalLimit: return "capital-limit";
    case AdversarialKind::CapitalConst: return "capital-const";
  }
  return "unknown";
}

std::optional<AdversarialKind> parse_adversarial_kind(std::string_view name) noexcept {
  for (AdversarialKind k : {AdversarialKind::HoeffdingLimit, AdversarialKind::HoeffdingConst,
                            AdversarialKind::CapitalLimit, AdversarialKind::CapitalConst}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<double> adversarial_values(AdversarialKind kind, double m, std::size_t T,
                                       const Sequence& partial_sum) {
  if (!partial_sum && !(m > 0.0)) throw ConfigError("adversarial stream: m must be positive");
  Sequence z = partial_sum;
  if (!z) {
    switch (kind) {
      case AdversarialKind::HoeffdingLimit:
        z = [m](std::size_t n) { return m * std::sqrt(static_cast<double>(n)); };
        break;
      case AdversarialKind::CapitalLimit:
        z = [m](std::size_t) { return m; };
        break;
      case AdversarialKind::HoeffdingConst:
      case AdversarialKind::CapitalConst:
        z = [m](std::size_t n) { return static_cast<double>(n) * m; };
        break;
    }
  }
  std::vector<double> values(T);
  double previous = 0.0;
  for (std::size_t t = 1; t <= T; ++t) {
    const double current = z(t);
    values[t - 1] = current - previous;
    if (values[t - 1] < 0.0) {
      throw ConfigError("adversarial stream: partial sums must be nondecreasing");
    }
    previous = current;
  }
  return values;
}

double lower_bound_tau(LowerBoundKind kind, double m, const GeometryBounds& geometry,
                       double alpha) {
  if (!(m > 0.0)) throw ConfigError("lower_bound_tau: m must be positive");
  const double log_inv_alpha = rejection_threshold(alpha);
  if (kind == LowerBoundKind::Hoeffding) {
    return geometry.D * geometry.D * log_inv_alpha / (2.0 * m * m);
  }
  return 2.0 * geometry.B * log_inv_alpha / m;
}

double limit_threshold(LowerBoundKind kind, const GeometryBounds& geometry, double alpha) {
  const double log_inv_alpha = rejection_threshold(alpha);
  if (kind == LowerBoundKind::Hoeffding) return geometry.D / std::sqrt(2.0 * log_inv_alpha);
  return 2.0 * geometry.B * log_inv_alpha;
}

}  // namespace savi
