#include <benchmark/benchmark.h>

#include "savi/experiments.hpp"
#include "savi/martingales.hpp"
#include "savi/projection.hpp"
#include "savi/regret.hpp"

namespace savi {
namespace {

std::vector<Vector> stream(int d, double B, std::size_t n) {
  Rng rng(42);
  std::vector<Vector> xs;
  for (std::size_t t = 0; t < n; ++t) xs.push_back(sample_uniform_ball(d, B, rng));
  return xs;
}

template <class Make>
void run_process(benchmark::State& state, Make make) {
  const int d = static_cast<int>(state.range(0));
  const GeometryBounds g{d, 1.0, 2.0};
  const auto xs = stream(d, 1.0, 1000);
  for (auto _ : state) {
    WealthProcess p = make(g);
    for (const Vector& x : xs) p.step(x);
    benchmark::DoNotOptimize(p.log_wealth());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}

void BM_HoeffdingFtl(benchmark::State& s) { run_process(s, [](const auto& g) { return make_hoeffding_ftl(g); }); }
void BM_CapitalEwa(benchmark::State& s) { run_process(s, [](const auto& g) { return make_capital_ewa(g); }); }
void BM_CapitalOns(benchmark::State& s) { run_process(s, [](const auto& g) { return make_capital_ons(g); }); }
void BM_CapitalTwoStep(benchmark::State& s) { run_process(s, [](const auto& g) { return make_capital_two_step(g); }); }

BENCHMARK(BM_HoeffdingFtl)->Arg(2)->Arg(20);
BENCHMARK(BM_CapitalEwa)->Arg(2)->Arg(20);
BENCHMARK(BM_CapitalOns)->Arg(2)->Arg(20);
BENCHMARK(BM_CapitalTwoStep)->Arg(2)->Arg(20);

void BM_ANormProjection(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(7);
  Matrix A = Matrix::Identity(d, d);
  for (const Vector& z : stream(d, 3.0, 50)) A += z * z.transpose();
  const Vector x = sample_uniform_ball(d, 1.0, rng).normalized() * 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(a_norm_ball_projection(A, x, 0.5));
}
BENCHMARK(BM_ANormProjection)->Arg(2)->Arg(5)->Arg(20);

void BM_CapitalBallOracle(benchmark::State& state) {
  const auto xs = stream(3, 1.0, 1000);
  for (auto _ : state) {
    CapitalBallOracle oracle(3, BallSet{0.5});
    for (const Vector& x : xs) oracle.add(x);
    benchmark::DoNotOptimize(oracle.max_log_wealth());
  }
}
BENCHMARK(BM_CapitalBallOracle);

void BM_MonteCarloOneAxis(benchmark::State& state) {
  const StreamSpec spec = one_axis_stream(0.2, 0.0, 0.0, 5, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_tau(spec, default_mean_procedures(), 0.05, 20, 1, 1));
  }
}
BENCHMARK(BM_MonteCarloOneAxis)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace savi

BENCHMARK_MAIN();
