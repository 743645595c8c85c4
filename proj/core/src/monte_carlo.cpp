#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "savi/csv.hpp"
#include "savi/experiments.hpp"

namespace savi {

namespace {

constexpr std::string_view kHenziPrefix = "henzi-";

double log_mean_exp(const std::vector<double>& values) {
  double top = -std::numeric_limits<double>::infinity();
  for (double v : values) top = std::max(top, v);
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - top);
  return top + std::log(sum) - std::log(static_cast<double>(values.size()));
}

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("henzi: beta must lie in [0, 1]");
}

}  // namespace

std::string ProcedureSpec::name() const {
  switch (kind) {
    case ProcedureKind::HoeffdingFtl: return "hoeffding-ftl";
    case ProcedureKind::CapitalEwa: return "capital-ewa";
    case ProcedureKind::CapitalOns: return "capital-ons";
    case ProcedureKind::CapitalTwoStep: return "capital-2steps";
    case ProcedureKind::HenziMixture: return "henzi-mix";
    case ProcedureKind::Henzi: {
      const double pct = 100.0 * beta;
      if (pct == std::round(pct)) return std::string(kHenziPrefix) + std::to_string(std::lround(pct));
      return std::string(kHenziPrefix) + format_real(pct);
    }
  }
  return "unknown";
}

std::optional<ProcedureSpec> parse_procedure(std::string_view name) {
  ProcedureSpec spec;
  if (name == "hoeffding-ftl") {
    spec.kind = ProcedureKind::HoeffdingFtl;
  } else if (name == "capital-ewa") {
    spec.kind = ProcedureKind::CapitalEwa;
  } else if (name == "capital-ons") {
    spec.kind = ProcedureKind::CapitalOns;
  } else if (name == "capital-2steps") {
    spec.kind = ProcedureKind::CapitalTwoStep;
  } else if (name == "henzi-mix") {
    spec.kind = ProcedureKind::HenziMixture;
  } else if (name.starts_with(kHenziPrefix)) {
    const std::string_view digits = name.substr(kHenziPrefix.size());
    double pct = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), pct);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      return std::nullopt;
    }
    if (!(pct >= 0.0 && pct <= 100.0)) return std::nullopt;
    spec.kind = ProcedureKind::Henzi;
    spec.beta = pct / 100.0;
  } else {
    return std::nullopt;
  }
  return spec;
}

std::vector<ProcedureSpec> default_mean_procedures() {
  return {{ProcedureKind::HoeffdingFtl},
          {ProcedureKind::CapitalEwa},
          {ProcedureKind::CapitalOns},
          {ProcedureKind::CapitalTwoStep}};
}

std::vector<ProcedureSpec> default_forecaster_procedures(const std::vector<double>& betas) {
  std::vector<ProcedureSpec> out;
  for (double beta : betas) {
    ProcedureSpec spec;
    spec.kind = ProcedureKind::Henzi;
    spec.beta = beta;
    out.push_back(spec);
  }
  ProcedureSpec mix;
  mix.kind = ProcedureKind::HenziMixture;
  mix.betas = betas;
  out.push_back(mix);
  out.push_back({ProcedureKind::CapitalEwa});
  out.push_back({ProcedureKind::CapitalOns});
  out.push_back({ProcedureKind::HoeffdingFtl});
  return out;
}

// Procedure -----------------------------------------------------------------------

Procedure::Procedure(const ProcedureSpec& spec, const StreamSpec& stream) : spec_(spec) {
  const GeometryBounds geometry = stream.geometry();
  const NullSpec null = stream.null();
  switch (spec.kind) {
    case ProcedureKind::HoeffdingFtl:
      process_.emplace(make_hoeffding_ftl(geometry, null));
      break;
    case ProcedureKind::CapitalEwa:
      process_.emplace(make_capital_ewa(geometry, null));
      break;
    case ProcedureKind::CapitalOns:
      process_.emplace(make_capital_ons(geometry, null));
      break;
    case ProcedureKind::CapitalTwoStep:
      if (is_one_sided(null)) {
        throw ConfigError("procedure capital-2steps is not defined for a one-sided null");
      }
      process_.emplace(make_capital_two_step(geometry));
      break;
    case ProcedureKind::Henzi:
    case ProcedureKind::HenziMixture: {
      if (stream.family != StreamFamily::ForecasterDiff) {
        throw ConfigError("procedure " + spec.name() + " requires the forecaster stream");
      }
      if (spec.kind == ProcedureKind::Henzi) {
        check_beta(spec.beta);
        component_log_wealth_.assign(1, 0.0);
      } else {
        if (spec.betas.empty()) throw ConfigError("procedure henzi-mix: empty beta grid");
        for (double beta : spec.betas) check_beta(beta);
        component_log_wealth_.assign(spec.betas.size(), 0.0);
      }
      break;
    }
  }
}

void Procedure::step(const Observation& obs) {
  if (process_) {
    process_->step(obs.x);
  } else {
    const double x = obs.x(0);
    const auto advance = [&](std::size_t k, double beta) {
      const double lambda = henzi_bet(obs.p, obs.q, beta * obs.p + (1.0 - beta) * obs.q);
      component_log_wealth_[k] += std::log1p(lambda * x);
    };
    if (spec_.kind == ProcedureKind::Henzi) {
      advance(0, spec_.beta);
    } else {
      for (std::size_t k = 0; k < spec_.betas.size(); ++k) advance(k, spec_.betas[k]);
    }
  }
  ++t_;
}

double Procedure::log_wealth() const {
  if (process_) return process_->log_wealth();
  if (spec_.kind == ProcedureKind::Henzi) return component_log_wealth_.front();
  return log_mean_exp(component_log_wealth_);
}

std::vector<double> log_wealth_path(const ProcedureSpec& procedure,
                                    const std::vector<Observation>& stream,
                                    const StreamSpec& spec) {
  Procedure run(procedure, spec);
  std::vector<double> path;
  path.reserve(stream.size());
  for (const Observation& obs : stream) {
    run.step(obs);
    path.push_back(run.log_wealth());
  }
  return path;
}

// Monte Carlo -----------------------------------------------------------------------

std::vector<TrialSummary> run_replicate(const StreamSpec& stream,
                                        const std::vector<ProcedureSpec>& procedures,
                                        double alpha, std::size_t replicate, std::uint64_t seed) {
  const double threshold = rejection_threshold(alpha);
  StreamSpec seeded = stream;
  seeded.seed = seed;
  const std::vector<Observation> observations = generate_stream(seeded);

  std::vector<TrialSummary> out;
  out.reserve(procedures.size());
  for (const ProcedureSpec& spec : procedures) {
    Procedure run(spec, seeded);
    TrialSummary trial;
    trial.strategy = spec.name();
    trial.replicate = replicate;
    trial.seed = seed;
    for (const Observation& obs : observations) {
      run.step(obs);
      if (run.log_wealth() >= threshold) {
        trial.rejected = true;
        break;
      }
    }
    trial.tau_truncated = run.steps();
    trial.final_logw = run.log_wealth();
    out.push_back(std::move(trial));
  }
  return out;
}

MonteCarloResult monte_carlo_tau(const StreamSpec& stream,
                                 const std::vector<ProcedureSpec>& procedures, double alpha,
                                 std::size_t replicates, std::uint64_t base_seed,
                                 unsigned threads) {
  if (replicates < 1) throw ConfigError("monte carlo: replicates must be >= 1");
  if (procedures.empty()) throw ConfigError("monte carlo: no procedures");
  stream.validate();
  (void)rejection_threshold(alpha);
  // Fail on an invalid procedure before spawning workers.
  for (const ProcedureSpec& spec : procedures) (void)Procedure(spec, stream);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, replicates));

  std::vector<std::vector<TrialSummary>> per_replicate(replicates);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t r = next++; r < replicates; r = next++) {
      try {
        per_replicate[r] = run_replicate(stream, procedures, alpha, r, base_seed + r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = replicates;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  MonteCarloResult result;
  result.trials.reserve(replicates * procedures.size());
  for (auto& rows : per_replicate) {
    for (auto& row : rows) result.trials.push_back(std::move(row));
  }
  result.aggregates = aggregate_trials(result.trials);
  return result;
}

std::vector<StrategyAggregate> aggregate_trials(const std::vector<TrialSummary>& trials) {
  std::vector<StrategyAggregate> out;
  std::vector<std::vector<const TrialSummary*>> groups;
  for (const TrialSummary& trial : trials) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const StrategyAggregate& a) { return a.strategy == trial.strategy; });
    if (it == out.end()) {
      out.push_back({trial.strategy});
      groups.emplace_back();
      it = out.end() - 1;
    }
    groups[static_cast<std::size_t>(it - out.begin())].push_back(&trial);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto& group = groups[k];
    const double n = static_cast<double>(group.size());
    double sum = 0.0;
    double rejected = 0.0;
    for (const TrialSummary* trial : group) {
      sum += static_cast<double>(trial->tau_truncated);
      rejected += trial->rejected ? 1.0 : 0.0;
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (const TrialSummary* trial : group) {
      const double dev = static_cast<double>(trial->tau_truncated) - mean;
      ss += dev * dev;
    }
    out[k].replicates = group.size();
    out[k].mean_tau = mean;
    out[k].stderr_tau = group.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    out[k].reject_rate = rejected / n;
  }
  return out;
}

}  // namespace savi
