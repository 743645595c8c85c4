#include "savi_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>

#include "params.hpp"
#include "savi/bounds.hpp"
#include "savi/csv.hpp"
#include "savi/experiments.hpp"
#include "savi_cli/io.hpp"
#include "savi_cli/svg.hpp"

namespace savi::cli {

namespace fs = std::filesystem;

namespace {

// Shortest round-trip text, used in labels only.
std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : format_real(v);
}

struct Common {
  std::string out = ".";
  std::uint64_t seed = 1;
  std::uint64_t replicates = 500;
  double alpha = 0.05;
  std::uint64_t horizon = 1000;
  int threads = 0;

  void bind(ParamSet& params, bool monte_carlo) {
    params.add("out", out, "Output directory");
    params.add("alpha", alpha, "Test level");
    params.add("horizon", horizon, "Horizon T");
    if (monte_carlo) {
      params.add("seed", seed, "Base seed; replicate r uses seed + r");
      params.add("replicates", replicates, "Monte Carlo replicates");
      params.add("threads", threads, "Worker threads (0: all cores)");
    }
  }
};

struct StreamOptions {
  std::string experiment = "one-axis";
  double m = 0.2;
  double a = 0.0;
  double b = 0.0;
  int d = 2;
  int M = 50;
  double theta = 0.7;
  std::string kind = "capital-const";
  double B = 1.0;
  double D = 2.0;
  double radius = 0.5;
  std::vector<std::string> strategies;
  std::vector<double> betas{0.0, 0.25, 0.5, 0.75, 1.0};

  void bind(ParamSet& params) {
    params.add("experiment", experiment,
               "one-axis | spiral | forecaster | adversarial | centered-null");
    params.add("m", m, "Mean scale m");
    params.add("a", a, "Mean decay exponent a");
    params.add("b", b, "Noise decay exponent b (one-axis)");
    params.add("d", d, "Dimension (one-axis, centered-null)");
    params.add("M", M, "Spiral period M");
    params.add("theta", theta, "Forecaster signal strength");
    params.add("kind", kind,
               "Adversarial stream: hoeffding-limit | hoeffding-const | capital-limit | capital-const");
    params.add("B", B, "Adversarial geometry: bound on |x|");
    params.add("D", D, "Adversarial geometry: diameter");
    params.add("radius", radius, "Centered-null amplitude");
    params.add("strategies", strategies, "Procedures (default depends on the experiment)");
    params.add("betas", betas, "Henzi beta grid");
  }

  [[nodiscard]] StreamSpec stream(std::uint64_t T) const {
    const auto family = parse_stream_family(experiment);
    if (!family) throw ConfigError("field 'experiment': unknown experiment '" + experiment + "'");
    StreamSpec spec;
    spec.family = *family;
    spec.m = m;
    spec.a = a;
    spec.b = b;
    spec.d = *family == StreamFamily::Spiral ? 2 : (*family == StreamFamily::ForecasterDiff ||
                                                    *family == StreamFamily::Adversarial)
                                                       ? 1
                                                       : d;
    spec.M = M;
    spec.theta = theta;
    spec.radius = radius;
    if (*family == StreamFamily::Adversarial) {
      const auto adv = parse_adversarial_kind(kind);
      if (!adv) throw ConfigError("field 'kind': unknown adversarial stream '" + kind + "'");
      spec.adversarial = *adv;
      spec.adversarial_geometry = {1, B, D};
    }
    spec.T = T;
    spec.validate();
    return spec;
  }

  [[nodiscard]] std::vector<ProcedureSpec> procedures(const StreamSpec& stream) const {
    if (strategies.empty()) {
      switch (stream.family) {
        case StreamFamily::ForecasterDiff:
          return default_forecaster_procedures(betas);
        case StreamFamily::Adversarial:
          if (stream.adversarial == AdversarialKind::HoeffdingLimit ||
              stream.adversarial == AdversarialKind::HoeffdingConst) {
            return {{ProcedureKind::HoeffdingFtl}};
          }
          return {{ProcedureKind::CapitalOns}};
        default:
          return default_mean_procedures();
      }
    }
    std::vector<ProcedureSpec> out;
    for (const std::string& name : strategies) {
      auto spec = parse_procedure(name);
      if (!spec) throw ConfigError("field 'strategies': unknown procedure '" + name + "'");
      if (spec->kind == ProcedureKind::HenziMixture) spec->betas = betas;
      out.push_back(*spec);
    }
    return out;
  }

  void set(const std::string& name, double value) {
    if (name == "m") {
      m = value;
    } else if (name == "a") {
      a = value;
    } else if (name == "b") {
      b = value;
    } else if (name == "ab") {
      a = value;
      b = value;
    } else if (name == "d") {
      d = static_cast<int>(value);
    } else if (name == "M") {
      M = static_cast<int>(value);
    } else if (name == "theta") {
      theta = value;
    } else {
      throw ConfigError("field 'sweep-param': cannot sweep '" + name + "'");
    }
  }
};

std::string trials_header() {
  return csv_row({"experiment", "strategy", "replicate", "seed", "tau_truncated", "rejected",
                  "final_logw"});
}

std::string trials_rows(const std::string& label, const std::vector<TrialSummary>& trials) {
  std::string out;
  for (const TrialSummary& t : trials) {
    out += csv_row({label, t.strategy, std::to_string(t.replicate), std::to_string(t.seed),
                    std::to_string(t.tau_truncated), t.rejected ? "1" : "0",
                    format_real(t.final_logw)});
  }
  return out;
}

std::string summary_csv(const std::vector<StrategyAggregate>& aggregates) {
  std::string out = csv_row({"strategy", "mean_tau", "stderr_tau", "reject_rate"});
  for (const StrategyAggregate& a : aggregates) {
    out += csv_row({a.strategy, format_real(a.mean_tau), format_real(a.stderr_tau),
                    format_real(a.reject_rate)});
  }
  return out;
}

std::string trajectories_csv(const StreamSpec& stream, const std::vector<ProcedureSpec>& procedures,
                             std::uint64_t seed) {
  StreamSpec seeded = stream;
  seeded.seed = seed;
  const std::vector<Observation> observations = generate_stream(seeded);
  std::vector<std::string> header{"step"};
  std::vector<std::vector<double>> paths;
  for (const ProcedureSpec& p : procedures) {
    header.push_back(p.name());
    paths.push_back(log_wealth_path(p, observations, seeded));
  }
  std::string out = csv_row(header);
  for (std::size_t t = 0; t < observations.size(); ++t) {
    std::vector<std::string> row{std::to_string(t + 1)};
    for (const auto& path : paths) row.push_back(format_real(path[t]));
    out += csv_row(row);
  }
  return out;
}

void wrote(std::ostream& out, const fs::path& path) { out << "wrote " << path.string() << '\n'; }

// Subcommands ---------------------------------------------------------------------

struct ExperimentCommand {
  Common common;
  StreamOptions stream;
  std::string sweep_param;
  std::vector<double> sweep_values;
  bool trajectories = false;

  void bind(ParamSet& params) {
    common.bind(params, true);
    stream.bind(params);
    params.add("sweep-param", sweep_param, "Parameter to sweep: m | a | b | ab | d | M | theta");
    params.add("sweep-values", sweep_values, "Values of the swept parameter");
    params.add_flag("trajectories", trajectories,
                    "Also write trajectories.csv (log-wealth of replicate 0)");
  }

  void run(const ParamSet& params, std::ostream& out) {
    if (stream.experiment == "adversarial" && !params.given("replicates")) common.replicates = 1;
    const fs::path dir(common.out);
    const auto threads = static_cast<unsigned>(std::max(0, common.threads));

    if (!sweep_param.empty()) {
      if (sweep_values.empty()) throw ConfigError("field 'sweep-values': empty sweep");
      std::string trials = trials_header();
      std::string sweep = csv_row({"parameter", "value", "strategy", "mean_tau", "stderr_tau",
                                   "reject_rate"});
      for (double value : sweep_values) {
        StreamOptions point = stream;
        point.set(sweep_param, value);
        const StreamSpec spec = point.stream(common.horizon);
        const auto result = monte_carlo_tau(spec, point.procedures(spec), common.alpha,
                                            common.replicates, common.seed, threads);
        trials += trials_rows(stream.experiment + ":" + sweep_param + "=" + shortest(value),
                              result.trials);
        for (const StrategyAggregate& a : result.aggregates) {
          sweep += csv_row({sweep_param, format_real(value), a.strategy, format_real(a.mean_tau),
                            format_real(a.stderr_tau), format_real(a.reject_rate)});
        }
      }
      write_file_atomic(dir / "trials.csv", trials);
      wrote(out, dir / "trials.csv");
      write_file_atomic(dir / "sweep.csv", sweep);
      wrote(out, dir / "sweep.csv");
      return;
    }

    const StreamSpec spec = stream.stream(common.horizon);
    const auto procedures = stream.procedures(spec);
    const auto result =
        monte_carlo_tau(spec, procedures, common.alpha, common.replicates, common.seed, threads);
    write_file_atomic(dir / "trials.csv",
                      trials_header() + trials_rows(stream.experiment, result.trials));
    wrote(out, dir / "trials.csv");
    write_file_atomic(dir / "summary.csv", summary_csv(result.aggregates));
    wrote(out, dir / "summary.csv");
    if (trajectories) {
      write_file_atomic(dir / "trajectories.csv", trajectories_csv(spec, procedures, common.seed));
      wrote(out, dir / "trajectories.csv");
    }
  }
};

struct CompareCommand {
  Common common;
  double theta = 0.7;
  std::vector<double> betas{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<std::string> strategies;
  bool trajectories = false;

  void bind(ParamSet& params) {
    common.bind(params, true);
    params.add("theta", theta, "Forecaster signal strength");
    params.add("betas", betas, "Henzi beta grid");
    params.add("strategies", strategies, "Procedures (default: Henzi grid, mixture, EWA, ONS, FTL)");
    params.add_flag("trajectories", trajectories,
                    "Also write trajectories.csv (log-wealth of replicate 0)");
  }

  void run(const ParamSet&, std::ostream& out) {
    ExperimentCommand inner;
    inner.common = common;
    inner.stream.experiment = "forecaster";
    inner.stream.theta = theta;
    inner.stream.betas = betas;
    inner.stream.strategies = strategies;
    inner.trajectories = trajectories;
    CLI::App dummy;
    ParamSet none(&dummy);
    inner.run(none, out);
  }
};

struct CalibrateCommand {
  Common common;
  std::string experiment = "one-axis";
  int d = 5;
  double a = 0.0;
  double b = 0.0;
  int M = 50;
  double radius = 0.5;
  std::vector<std::string> strategies;

  void bind(ParamSet& params) {
    common.bind(params, true);
    params.add("experiment", experiment, "Null stream: one-axis | spiral | centered-null (m = 0)");
    params.add("d", d, "Dimension");
    params.add("a", a, "Mean decay exponent (irrelevant at m = 0)");
    params.add("b", b, "Noise decay exponent (one-axis)");
    params.add("M", M, "Spiral period");
    params.add("radius", radius, "Centered-null amplitude");
    params.add("strategies", strategies, "Procedures (default: the four mean tests)");
  }

  void run(const ParamSet&, std::ostream& out) {
    StreamOptions options;
    options.experiment = experiment;
    if (experiment != "one-axis" && experiment != "spiral" && experiment != "centered-null") {
      throw ConfigError("field 'experiment': calibrate-null supports one-axis, spiral, centered-null");
    }
    options.m = 0.0;
    options.a = a;
    options.b = b;
    options.d = d;
    options.M = M;
    options.radius = radius;
    options.strategies = strategies;
    const StreamSpec spec = options.stream(common.horizon);
    const auto result = monte_carlo_tau(spec, options.procedures(spec), common.alpha,
                                        common.replicates, common.seed,
                                        static_cast<unsigned>(std::max(0, common.threads)));
    const fs::path dir(common.out);
    write_file_atomic(dir / "trials.csv", trials_header() + trials_rows(experiment, result.trials));
    wrote(out, dir / "trials.csv");

    // Ville: P[reject] <= alpha; the slack is three binomial standard errors.
    std::string csv = csv_row({"strategy", "replicates", "rejections", "reject_rate", "alpha",
                               "binomial_slack", "within_level"});
    const double n = static_cast<double>(common.replicates);
    const double slack = 3.0 * std::sqrt(common.alpha * (1.0 - common.alpha) / n);
    for (const StrategyAggregate& agg : result.aggregates) {
      const auto rejections = static_cast<std::uint64_t>(std::llround(agg.reject_rate * n));
      csv += csv_row({agg.strategy, std::to_string(agg.replicates), std::to_string(rejections),
                      format_real(agg.reject_rate), format_real(common.alpha), format_real(slack),
                      agg.reject_rate <= common.alpha + slack ? "1" : "0"});
    }
    write_file_atomic(dir / "calibration.csv", csv);
    wrote(out, dir / "calibration.csv");
  }
};

struct AdversarialCommand {
  Common common;
  std::string kind = "capital-const";
  double m = 0.1;
  double B = 1.0;
  double D = 2.0;
  std::vector<std::string> strategies;

  void bind(ParamSet& params) {
    common.horizon = 10000;
    common.bind(params, false);
    params.add("kind", kind,
               "hoeffding-limit | hoeffding-const | capital-limit | capital-const");
    params.add("m", m, "Stream scale m");
    params.add("B", B, "Bound on |x|");
    params.add("D", D, "Diameter of the observation set");
    params.add("strategies", strategies,
               "Procedures (default: hoeffding-ftl, or the three capital procedures)");
  }

  void run(const ParamSet&, std::ostream& out) {
    const auto adv = parse_adversarial_kind(kind);
    if (!adv) throw ConfigError("field 'kind': unknown adversarial stream '" + kind + "'");
    const GeometryBounds geometry{1, B, D};
    const StreamSpec spec = adversarial_stream(*adv, m, geometry, common.horizon);
    const bool hoeffding =
        *adv == AdversarialKind::HoeffdingLimit || *adv == AdversarialKind::HoeffdingConst;
    std::vector<ProcedureSpec> procedures;
    if (strategies.empty()) {
      if (hoeffding) {
        procedures = {{ProcedureKind::HoeffdingFtl}};
      } else {
        procedures = {{ProcedureKind::CapitalEwa}, {ProcedureKind::CapitalOns},
                      {ProcedureKind::CapitalTwoStep}};
      }
    } else {
      for (const std::string& name : strategies) {
        const auto p = parse_procedure(name);
        if (!p) throw ConfigError("field 'strategies': unknown procedure '" + name + "'");
        procedures.push_back(*p);
      }
    }
    const LowerBoundKind bound_kind = hoeffding ? LowerBoundKind::Hoeffding : LowerBoundKind::Capital;
    const bool constant = *adv == AdversarialKind::HoeffdingConst || *adv == AdversarialKind::CapitalConst;
    const std::string lower =
        constant ? format_real(std::ceil(lower_bound_tau(bound_kind, m, geometry, common.alpha))) : "";
    const std::string threshold = format_real(limit_threshold(bound_kind, geometry, common.alpha));

    const auto trials = run_replicate(spec, procedures, common.alpha, 0, 0);
    std::string csv = csv_row({"kind", "strategy", "m", "horizon", "rejected", "tau_truncated",
                               "final_logw", "lower_bound", "limit_threshold"});
    for (const TrialSummary& t : trials) {
      csv += csv_row({kind, t.strategy, format_real(m), std::to_string(common.horizon),
                      t.rejected ? "1" : "0", std::to_string(t.tau_truncated),
                      format_real(t.final_logw), lower, threshold});
    }
    const fs::path path = fs::path(common.out) / "adversarial.csv";
    write_file_atomic(path, csv);
    wrote(out, path);
  }
};

struct BoundsCommand {
  Common common;
  std::string family = "hoeffding";
  double m = 0.2;
  double m_rate = 0.0;
  double v = 0.08;
  double v_rate = 0.0;
  bool averaged = false;
  std::string regret = "auto";
  std::string stochastic_regret = "auto";
  double eps = 0.0;
  double B = 0.7;
  double D = 0.9;
  int d = 2;
  double rho = 0.0;
  std::uint64_t rows = 0;

  void bind(ParamSet& params) {
    common.horizon = 10000;
    common.bind(params, false);
    params.add("family", family,
               "hoeffding | capital-fixed-eps | capital-adaptive-eps | two-step | "
               "hoeffding-one-sided | capital-one-sided | hoeffding-functional | capital-functional");
    params.add("m", m, "m_n = m n^-m_rate");
    params.add("m-rate", m_rate, "Decay exponent of m_n");
    params.add("v", v, "v_n = v n^-v_rate");
    params.add("v-rate", v_rate, "Decay exponent of v_n");
    params.add_flag("averaged", averaged,
                    "Use running averages (1/n) sum_t m t^-m_rate (and likewise v_n)");
    params.add("regret", regret, "r_n: auto | ftl | ewa | ons | zero");
    params.add("stochastic-regret", stochastic_regret, "s_n: auto | oga | zero");
    params.add("eps", eps, "Fixed eps for capital-fixed-eps (0: 1/(2B))");
    params.add("B", B, "Bound on |x|");
    params.add("D", D, "Diameter");
    params.add("d", d, "Dimension");
    params.add("rho", rho, "Caller-supplied tail sums added to the bound");
    params.add("rows", rows, "Rows of u_n.csv (0: the whole horizon)");
  }

  [[nodiscard]] Sequence power(double scale, double rate) const {
    if (!averaged) {
      return [scale, rate](std::size_t n) { return scale * std::pow(static_cast<double>(n), -rate); };
    }
    auto prefix = std::make_shared<std::vector<double>>(1, 0.0);
    return [scale, rate, prefix](std::size_t n) {
      while (prefix->size() <= n) {
        const double t = static_cast<double>(prefix->size());
        prefix->push_back(prefix->back() + scale * std::pow(t, -rate));
      }
      return (*prefix)[n] / static_cast<double>(n);
    };
  }

  void run(const ParamSet&, std::ostream& out) {
    const auto fam = parse_bound_family(family);
    if (!fam) throw ConfigError("field 'family': unknown bound family '" + family + "'");
    PowerBoundSpec spec;
    spec.family = *fam;
    spec.geometry = {d, B, D};
    spec.m = power(m, m_rate);
    spec.v = power(v, v_rate);

    std::string r = regret;
    if (r == "auto") {
      switch (*fam) {
        case BoundFamily::HoeffdingTwoSided:
        case BoundFamily::HoeffdingOneSided:
        case BoundFamily::HoeffdingFunctional: r = "ftl"; break;
        case BoundFamily::CapitalFixedEps: r = "ewa"; break;
        case BoundFamily::CapitalAdaptiveEps:
        case BoundFamily::CapitalOneSided: r = "ons"; break;
        case BoundFamily::TwoStep:
        case BoundFamily::CapitalFunctional: r = "ons1"; break;
      }
    }
    if (r == "ftl") {
      spec.r = ftl_regret_bound();
    } else if (r == "ewa") {
      spec.r = ewa_regret_bound(d);
    } else if (r == "ons") {
      spec.r = ons_regret_bound(d);
    } else if (r == "ons1") {
      spec.r = ons_regret_bound(1);
    } else if (r == "zero") {
      spec.r = constant_sequence(0.0);
    } else {
      throw ConfigError("field 'regret': unknown regret sequence '" + regret + "'");
    }

    std::string s = stochastic_regret;
    if (s == "auto") s = *fam == BoundFamily::TwoStep ? "oga" : "zero";
    if (s == "oga") {
      spec.s = oga_stochastic_regret_bound();
    } else if (s == "zero") {
      spec.s = constant_sequence(0.0);
    } else {
      throw ConfigError("field 'stochastic-regret': unknown sequence '" + stochastic_regret + "'");
    }
    if (*fam == BoundFamily::CapitalFixedEps) spec.eps = eps > 0.0 ? eps : 1.0 / (2.0 * B);
    validate(spec);
    if (common.horizon < 1) throw ConfigError("field 'horizon': must be >= 1");

    const TauBound bound = expected_tau_bound(spec, rho, common.alpha, common.horizon);
    const std::uint64_t n_rows = rows == 0 ? common.horizon : std::min(rows, common.horizon);
    std::string table = csv_row({"n", "u_n"});
    for (std::uint64_t n = 1; n <= n_rows; ++n) {
      table += csv_row({std::to_string(n), format_real(u_n(spec, n))});
    }
    std::string summary = csv_row({"family", "alpha", "threshold", "horizon", "aleph", "constant",
                                   "expected_tau_bound"});
    summary += csv_row({family, format_real(common.alpha),
                        format_real(rejection_threshold(common.alpha)),
                        std::to_string(common.horizon),
                        bound.aleph ? std::to_string(*bound.aleph) : "beyond-horizon",
                        format_real(bound.constant),
                        bound.value() ? format_real(*bound.value()) : "beyond-horizon"});
    const fs::path dir(common.out);
    write_file_atomic(dir / "u_n.csv", table);
    wrote(out, dir / "u_n.csv");
    write_file_atomic(dir / "bounds_summary.csv", summary);
    wrote(out, dir / "bounds_summary.csv");
  }
};

struct PlotCommand {
  std::string input;
  std::string output;
  std::string kind = "trajectory";
  double alpha = 0.05;
  std::string title;

  void bind(ParamSet& params) {
    params.add("input", input, "Input CSV (trajectories.csv or sweep.csv)")->required();
    params.add("output", output, "Output SVG file")->required();
    params.add("kind", kind, "trajectory | sweep");
    params.add("alpha", alpha, "Level used for the threshold line log(1/alpha)");
    params.add("title", title, "Chart title");
  }

  void run(const ParamSet&, std::ostream& out) {
    const CsvTable table = read_csv(input);
    if (table.rows.empty()) throw ParseError(table.source + ":2: no data rows");
    LineChart chart;
    chart.title = title;
    if (kind == "trajectory") {
      const std::size_t step = table.column("step");
      chart.x_label = "t";
      chart.y_label = "log W_t";
      for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c == step) continue;
        Series s;
        s.name = table.header[c];
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
          s.x.push_back(table.number(r, step));
          s.y.push_back(table.number(r, c));
        }
        chart.series.push_back(std::move(s));
      }
      if (chart.series.empty()) throw ParseError(table.source + ":1: no trajectory columns");
      chart.threshold = HorizontalLine{rejection_threshold(alpha), "log(1/alpha)"};
    } else if (kind == "sweep") {
      const std::size_t param = table.column("parameter");
      const std::size_t value = table.column("value");
      const std::size_t strategy = table.column("strategy");
      const std::size_t mean = table.column("mean_tau");
      chart.x_label = table.rows.front()[param];
      chart.y_label = "mean tau ^ T";
      std::map<std::string, std::size_t> index;
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::string& name = table.rows[r][strategy];
        auto [it, inserted] = index.emplace(name, chart.series.size());
        if (inserted) chart.series.push_back(Series{name, {}, {}});
        chart.series[it->second].x.push_back(table.number(r, value));
        chart.series[it->second].y.push_back(table.number(r, mean));
      }
    } else {
      throw ConfigError("field 'kind': unknown plot kind '" + kind + "'");
    }
    write_file_atomic(output, render_svg(chart));
    wrote(out, output);
  }
};

template <class Command>
CLI::App* add_command(CLI::App& app, const char* name, const char* help,
                      std::vector<std::function<void(std::ostream&)>>& actions) {
  CLI::App* sub = app.add_subcommand(name, help);
  auto command = std::make_shared<Command>();
  auto params = std::make_shared<ParamSet>(sub);
  command->bind(*params);
  actions.push_back([sub, command, params](std::ostream& out) {
    if (!sub->parsed()) return;
    params->apply_config();
    command->run(*params, out);
  });
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anytime-valid sequential tests for bounded means", "savi"};
  app.require_subcommand(1);
  std::vector<std::function<void(std::ostream&)>> actions;
  add_command<ExperimentCommand>(app, "run-experiment", "Monte Carlo rejection times on a synthetic stream", actions);
  add_command<BoundsCommand>(app, "bounds", "u_n table, aleph and the expected rejection-time bound", actions);
  add_command<AdversarialCommand>(app, "adversarial", "Deterministic adversarial streams and lower bounds", actions);
  add_command<CompareCommand>(app, "compare-forecasters", "Brier-score forecaster comparison", actions);
  add_command<CalibrateCommand>(app, "calibrate-null", "Rejection rates on centered streams", actions);
  add_command<PlotCommand>(app, "plot", "Render a CSV as a standalone SVG", actions);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  try {
    for (auto& action : actions) action(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IngestionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace savi::cli
