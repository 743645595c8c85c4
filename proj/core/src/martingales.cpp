#include "savi/martingales.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "savi/csv.hpp"

namespace savi {

double hoeffding_log_increment(const Vector& lambda, const Vector& x, double D) {
  if (!(D > 0.0)) throw ConfigError("hoeffding increment: D must be positive");
  return lambda.dot(x) - lambda.squaredNorm() * D * D / 8.0;
}

double capital_log_increment(const Vector& gamma, const Vector& x) {
  const double growth = 1.0 + gamma.dot(x);
  if (!(growth > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "capital increment: 1 + gamma^T x = " << growth << " <= 0 (bet outside Gamma)";
    throw DomainError(msg.str());
  }
  return std::log(growth);
}

double two_step_log_increment(double gamma, const Vector& eta, const Vector& x) {
  const double growth = 1.0 + gamma * eta.dot(x);
  if (!(growth > 0.0)) {
    throw DomainError("two-step increment: 1 + gamma eta^T x <= 0 (bet outside Gamma)");
  }
  return std::log(growth);
}

std::string_view to_string(WealthKind kind) noexcept {
  switch (kind) {
    case WealthKind::Hoeffding: return "hoeffding";
    case WealthKind::Capital: return "capital";
    case WealthKind::CapitalTwoStep: return "capital-2steps";
    case WealthKind::HoeffdingFunctional: return "hoeffding-functional";
    case WealthKind::CapitalFunctional: return "capital-functional";
  }
  return "unknown";
}

double functional_log_increment(WealthKind kind, double bet, double g) {
  check_functional_value(g);
  switch (kind) {
    case WealthKind::HoeffdingFunctional:
      return bet * g - bet * bet / 2.0;
    case WealthKind::CapitalFunctional: {
      const double growth = 1.0 + bet * g;
      if (!(growth > 0.0)) throw DomainError("functional increment: 1 + gamma g <= 0");
      return std::log(growth);
    }
    default:
      throw ConfigError("functional increment: kind must be a functional kind");
  }
}

double rejection_threshold(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1)");
  }
  return std::log(1.0 / alpha);
}

RejectionRecord rejection_time(std::span<const double> log_wealth_path, double alpha) {
  RejectionRecord record;
  record.alpha = alpha;
  record.threshold = rejection_threshold(alpha);
  record.horizon = log_wealth_path.size();
  for (std::size_t i = 0; i < log_wealth_path.size(); ++i) {
    if (log_wealth_path[i] >= record.threshold) {
      record.tau = i + 1;
      break;
    }
  }
  return record;
}

// WealthProcess ----------------------------------------------------------------

WealthProcess::WealthProcess(WealthKind kind, NullSpec null, const GeometryBounds& geometry,
                             AnyStrategy strategy, bool record_trajectory)
    : kind_(kind),
      null_(null),
      geometry_(geometry),
      strategy_(std::move(strategy)),
      record_(record_trajectory),
      last_bet_(Vector::Zero(geometry.d)) {
  geometry_.validate();
  const bool functional_kind =
      kind == WealthKind::HoeffdingFunctional || kind == WealthKind::CapitalFunctional;
  if (functional_kind != is_functional(null)) {
    throw ConfigError("wealth process: functional kinds require a functional null and vice versa");
  }
  if (functional_kind && (geometry_.d != 1 || geometry_.B != 1.0 || geometry_.D != 2.0)) {
    throw ConfigError("wealth process: functional kinds use g values in [-1, 1] (d=1, B=1, D=2)");
  }
  if ((kind == WealthKind::CapitalTwoStep) != std::holds_alternative<TwoStepStrategy>(strategy_)) {
    throw ConfigError("wealth process: the two-step kind pairs exactly with the two-step strategy");
  }
  if (kind == WealthKind::CapitalTwoStep && is_one_sided(null)) {
    throw ConfigError("wealth process: the two-step process is only defined for two-sided nulls");
  }
  if ((kind == WealthKind::Hoeffding || kind == WealthKind::HoeffdingFunctional) &&
      !(geometry_.D > 0.0)) {
    throw ConfigError("wealth process: Hoeffding kinds require D > 0");
  }
}

Vector WealthProcess::next_bet() const {
  Vector bet = bet_of(strategy_);
  if (is_one_sided(null_)) bet = bet.cwiseMax(0.0);
  return bet;
}

void WealthProcess::advance(double increment) {
  log_wealth_ += increment;
  ++t_;
  if (record_) trajectory_.push_back(log_wealth_);
  if (alpha_ && !tau_ && log_wealth_ >= rejection_threshold(*alpha_)) tau_ = t_;
}

void WealthProcess::step(const Vector& x) {
  if (kind_ == WealthKind::HoeffdingFunctional || kind_ == WealthKind::CapitalFunctional) {
    throw ConfigError("wealth process: use step_functional for functional kinds");
  }
  check_observation(x, geometry_);
  const Vector bet = next_bet();

  double increment = 0.0;
  switch (kind_) {
    case WealthKind::Hoeffding:
      increment = hoeffding_log_increment(bet, x, geometry_.D);
      break;
    case WealthKind::Capital:
      if (bet.norm() > (1.0 + 1e-9) / (2.0 * geometry_.B)) {
        throw DomainError("wealth process: capital bet outside the radius-1/(2B) ball");
      }
      increment = capital_log_increment(bet, x);
      break;
    case WealthKind::CapitalTwoStep: {
      const auto& two_step = std::get<TwoStepStrategy>(strategy_);
      increment = two_step_log_increment(two_step.size(), two_step.direction(), x);
      break;
    }
    default:
      break;
  }
  last_bet_ = bet;
  update_strategy(strategy_, x);
  advance(increment);
}

void WealthProcess::step_functional(double g) {
  if (kind_ != WealthKind::HoeffdingFunctional && kind_ != WealthKind::CapitalFunctional) {
    throw ConfigError("wealth process: step_functional requires a functional kind");
  }
  check_functional_value(g);
  const Vector bet = next_bet();
  if (kind_ == WealthKind::CapitalFunctional && std::abs(bet(0)) > 0.5 * (1.0 + 1e-9)) {
    throw DomainError("wealth process: functional capital bet outside [-1/2, 1/2]");
  }
  const double increment = functional_log_increment(kind_, bet(0), g);
  last_bet_ = bet;
  update_strategy(strategy_, Vector::Constant(1, g));
  advance(increment);
}

void WealthProcess::watch(double alpha) {
  const double threshold = rejection_threshold(alpha);
  alpha_ = alpha;
  tau_.reset();
  if (record_) {
    for (std::size_t i = 0; i < trajectory_.size(); ++i) {
      if (trajectory_[i] >= threshold) {
        tau_ = i + 1;
        break;
      }
    }
  } else if (t_ > 0 && log_wealth_ >= threshold) {
    tau_ = t_;
  }
}

RejectionRecord WealthProcess::rejection() const {
  if (!alpha_) throw ConfigError("wealth process: call watch(alpha) before rejection()");
  RejectionRecord record;
  record.alpha = *alpha_;
  record.threshold = rejection_threshold(*alpha_);
  record.tau = tau_;
  record.horizon = t_;
  return record;
}

// Factories ----------------------------------------------------------------------

WealthProcess make_hoeffding_ftl(const GeometryBounds& geometry, NullSpec null, bool record) {
  const WealthKind kind =
      is_functional(null) ? WealthKind::HoeffdingFunctional : WealthKind::Hoeffding;
  return WealthProcess(kind, null, geometry, FtlStrategy(geometry, is_one_sided(null)), record);
}

WealthProcess make_capital_ewa(const GeometryBounds& geometry, NullSpec null,
                               std::optional<double> eps, bool record) {
  const WealthKind kind =
      is_functional(null) ? WealthKind::CapitalFunctional : WealthKind::Capital;
  return WealthProcess(kind, null, geometry, EwaStrategy(geometry, is_one_sided(null), eps),
                       record);
}

WealthProcess make_capital_ons(const GeometryBounds& geometry, NullSpec null, bool record) {
  const WealthKind kind =
      is_functional(null) ? WealthKind::CapitalFunctional : WealthKind::Capital;
  return WealthProcess(kind, null, geometry, OnsStrategy(geometry, is_one_sided(null)), record);
}

WealthProcess make_capital_two_step(const GeometryBounds& geometry, bool record) {
  return WealthProcess(WealthKind::CapitalTwoStep, NullSpec::TwoSidedMean, geometry,
                       TwoStepStrategy(geometry), record);
}

void write_trajectory_csv(std::ostream& out, std::span<const double> log_wealth_path) {
  out << "step,logw\n";
  for (std::size_t i = 0; i < log_wealth_path.size(); ++i) {
    out << (i + 1) << ',' << format_real(log_wealth_path[i]) << '\n';
  }
}

}  // namespace savi
