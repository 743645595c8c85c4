#include <array>
#include <cmath>
#include <numbers>

#include "savi/experiments.hpp"

namespace savi {

namespace {

constexpr double kOneAxisNoise = 0.2;
constexpr double kSpiralNoise = 0.1;

[[noreturn]] void bad(const std::string& what) { throw ConfigError("stream: " + what); }

}  // namespace

std::string_view to_string(StreamFamily family) noexcept {
  switch (family) {
    case StreamFamily::OneAxis: return "one-axis";
    case StreamFamily::Spiral: return "spiral";
    case StreamFamily::ForecasterDiff: return "forecaster";
    case StreamFamily::Adversarial: return "adversarial";
    case StreamFamily::CenteredNull: return "centered-null";
  }
  return "unknown";
}

std::optional<StreamFamily> parse_stream_family(std::string_view name) noexcept {
  for (StreamFamily f : {StreamFamily::OneAxis, StreamFamily::Spiral, StreamFamily::ForecasterDiff,
                         StreamFamily::Adversarial, StreamFamily::CenteredNull}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

GeometryBounds StreamSpec::geometry() const {
  switch (family) {
    case StreamFamily::OneAxis: return {d, 0.7, 0.9};
    case StreamFamily::Spiral: return {2, 0.6, 1.2};
    case StreamFamily::ForecasterDiff: return {1, 1.0, 2.0};
    case StreamFamily::Adversarial: {
      GeometryBounds g = adversarial_geometry;
      g.d = 1;
      return g;
    }
    case StreamFamily::CenteredNull: return {d, radius, 2.0 * radius};
  }
  return {};
}

NullSpec StreamSpec::null() const {
  return family == StreamFamily::ForecasterDiff ? NullSpec::OneSidedMean : NullSpec::TwoSidedMean;
}

void StreamSpec::validate() const {
  if (T < 1) bad("T must be >= 1");
  switch (family) {
    case StreamFamily::OneAxis:
      if (!(m >= 0.0 && m < 0.5)) bad("m must lie in [0, 1/2)");
      if (!(a >= 0.0 && a < 1.0)) bad("a must lie in [0, 1)");
      if (!(b >= 0.0 && b < 1.0)) bad("b must lie in [0, 1)");
      if (d < 2) bad("d must be >= 2");
      break;
    case StreamFamily::Spiral:
      if (!(m >= 0.0 && m <= 0.5)) bad("m must lie in [0, 1/2]");
      if (!(a >= 0.0 && a < 1.0)) bad("a must lie in [0, 1)");
      if (M < 1) bad("M must be >= 1");
      break;
    case StreamFamily::ForecasterDiff:
      if (!std::isfinite(theta)) bad("theta must be finite");
      break;
    case StreamFamily::Adversarial: {
      const GeometryBounds g = geometry();
      g.validate();
      if (!(m > 0.0)) bad("m must be positive");
      if (m > g.B) bad("m must not exceed B");
      break;
    }
    case StreamFamily::CenteredNull:
      if (d < 1) bad("d must be >= 1");
      if (!(radius > 0.0)) bad("radius must be positive");
      break;
  }
}

StreamSpec one_axis_stream(double m, double a, double b, int d, std::uint64_t seed, std::size_t T) {
  StreamSpec spec;
  spec.family = StreamFamily::OneAxis;
  spec.m = m;
  spec.a = a;
  spec.b = b;
  spec.d = d;
  spec.seed = seed;
  spec.T = T;
  spec.validate();
  return spec;
}

StreamSpec spiral_stream(double m, double a, int M, std::uint64_t seed, std::size_t T) {
  StreamSpec spec;
  spec.family = StreamFamily::Spiral;
  spec.m = m;
  spec.a = a;
  spec.M = M;
  spec.d = 2;
  spec.seed = seed;
  spec.T = T;
  spec.validate();
  return spec;
}

StreamSpec forecaster_stream(double theta, std::uint64_t seed, std::size_t T) {
  StreamSpec spec;
  spec.family = StreamFamily::ForecasterDiff;
  spec.theta = theta;
  spec.d = 1;
  spec.seed = seed;
  spec.T = T;
  spec.validate();
  return spec;
}

StreamSpec adversarial_stream(AdversarialKind kind, double m, const GeometryBounds& geometry,
                              std::size_t T) {
  StreamSpec spec;
  spec.family = StreamFamily::Adversarial;
  spec.adversarial = kind;
  spec.m = m;
  spec.d = 1;
  spec.adversarial_geometry = geometry;
  spec.T = T;
  spec.validate();
  return spec;
}

StreamSpec centered_null_stream(int d, double radius, std::uint64_t seed, std::size_t T) {
  StreamSpec spec;
  spec.family = StreamFamily::CenteredNull;
  spec.d = d;
  spec.radius = radius;
  spec.seed = seed;
  spec.T = T;
  spec.validate();
  return spec;
}

Vector sample_uniform_ball(int d, double radius, Rng& rng) {
  if (d < 1) throw ConfigError("sample_uniform_ball: d must be >= 1");
  if (!(radius > 0.0)) throw ConfigError("sample_uniform_ball: radius must be positive");
  Vector direction(d);
  double norm = 0.0;
  do {
    for (int i = 0; i < d; ++i) direction(i) = rng.normal();
    norm = direction.norm();
  } while (!(norm > 0.0));
  const double scale = radius * std::pow(rng.uniform(), 1.0 / d);
  return direction * (scale / norm);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

std::vector<Observation> generate_stream(const StreamSpec& spec) {
  spec.validate();
  const GeometryBounds geometry = spec.geometry();
  const int d = geometry.d;
  std::vector<Observation> out;
  out.reserve(spec.T);
  Rng rng(spec.seed);

  switch (spec.family) {
    case StreamFamily::OneAxis: {
      for (std::size_t t = 1; t <= spec.T; ++t) {
        const double td = static_cast<double>(t);
        const double drift = spec.m * std::pow(td, -spec.a);
        const double noise_scale = std::pow(td, -spec.b);
        Observation obs;
        obs.cond_mean = Vector::Zero(d);
        obs.cond_mean(0) = drift;
        obs.x = obs.cond_mean + noise_scale * sample_uniform_ball(d, kOneAxisNoise, rng);
        const double sq = drift * drift + noise_scale * noise_scale * kOneAxisNoise * kOneAxisNoise;
        obs.cond_sq = {sq, sq};
        out.push_back(std::move(obs));
      }
      break;
    }
    case StreamFamily::Spiral: {
      for (std::size_t t = 1; t <= spec.T; ++t) {
        const double td = static_cast<double>(t);
        const double drift = spec.m * std::pow(td, -spec.a);
        const double noise_scale = std::pow(td, -2.0 * spec.a);
        const double angle = 2.0 * std::numbers::pi * td / spec.M;
        Observation obs;
        obs.cond_mean = Vector(2);
        obs.cond_mean << drift * std::cos(angle), drift * std::sin(angle);
        obs.x = obs.cond_mean + noise_scale * sample_uniform_ball(2, kSpiralNoise, rng);
        const double sq = drift * drift + noise_scale * noise_scale * kSpiralNoise * kSpiralNoise;
        obs.cond_sq = {sq, sq};
        out.push_back(std::move(obs));
      }
      break;
    }
    case StreamFamily::ForecasterDiff: {
      const double theta = spec.theta;
      const double p_scale = std::sqrt(1.0 + theta * theta);
      // lags[j] = eps_{t-1-j}; four burn-in innovations first.
      std::array<double, 4> lags{};
      for (int j = 3; j >= 0; --j) lags[j] = rng.normal();
      for (std::size_t t = 1; t <= spec.T; ++t) {
        const double eps = rng.normal();
        const double s3 = lags[1] + lags[2] + lags[3];
        const double s4 = lags[0] + s3;
        const double z = eps + theta * s4;
        Observation obs;
        obs.p = normal_cdf(theta * s3 / p_scale);
        obs.q = normal_cdf(theta * s4);
        obs.y = z > 0.0 ? 1 : 0;
        const double x1 = brier_diff(obs.p, obs.q, 1);
        const double x0 = brier_diff(obs.p, obs.q, 0);
        obs.x = Vector::Constant(1, obs.y == 1 ? x1 : x0);
        obs.cond_mean = Vector::Constant(1, obs.q * x1 + (1.0 - obs.q) * x0);
        const double sq = obs.q * x1 * x1 + (1.0 - obs.q) * x0 * x0;
        obs.cond_sq = {sq, sq};
        out.push_back(std::move(obs));
        lags = {eps, lags[0], lags[1], lags[2]};
      }
      break;
    }
    case StreamFamily::Adversarial: {
      const std::vector<double> values = adversarial_values(spec.adversarial, spec.m, spec.T);
      for (double v : values) {
        Observation obs;
        obs.x = Vector::Constant(1, v);
        obs.cond_mean = obs.x;
        obs.cond_sq = {v * v, v * v};
        out.push_back(std::move(obs));
      }
      break;
    }
    case StreamFamily::CenteredNull: {
      const double scale = spec.radius / std::sqrt(static_cast<double>(d));
      for (std::size_t t = 1; t <= spec.T; ++t) {
        Observation obs;
        obs.x = Vector(d);
        for (int i = 0; i < d; ++i) obs.x(i) = scale * rng.sign();
        obs.cond_mean = Vector::Zero(d);
        const double sq = spec.radius * spec.radius;
        obs.cond_sq = {sq, scale * scale};
        out.push_back(std::move(obs));
      }
      break;
    }
  }
  return out;
}

}  // namespace savi
