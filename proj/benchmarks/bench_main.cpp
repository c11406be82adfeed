#include <benchmark/benchmark.h>

#include <cmath>

#include "kirchhoff/branches.hpp"
#include "kirchhoff/constants.hpp"
#include "kirchhoff/fibering.hpp"
#include "kirchhoff/nonauto1d.hpp"
#include "kirchhoff/probes.hpp"

using namespace kirchhoff;

static void BM_GroundState(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const double p = N <= 4 ? 3.0 : 2.5;
  for (auto _ : state) benchmark::DoNotOptimize(compute_unit_ground_state(N, p));
}
BENCHMARK(BM_GroundState)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

static void BM_BranchDiagram(benchmark::State& state) {
  const ProblemParams q = ProblemParams::autonomous(5, 2.5, 0.0);
  const GroundState gs = find_ground_state(q);
  const double ac = a_crit_high_dim(5, 1.0, gs.G);
  std::vector<double> grid;
  for (int k = 1; k <= 100; ++k) grid.push_back(ac * 0.02 * k);
  for (auto _ : state) benchmark::DoNotOptimize(branch_diagram(q, gs, grid));
}
BENCHMARK(BM_BranchDiagram)->Unit(benchmark::kMicrosecond);

static void BM_CriticalPoints(benchmark::State& state) {
  const FunctionData d = FunctionData::from(1.0, 1.0, 20.0, 1.0);
  const ProblemParams q = ProblemParams::autonomous(3, 3.0, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(critical_points(d, q));
}
BENCHMARK(BM_CriticalPoints);

static void BM_Thresholds(benchmark::State& state) {
  const ProblemParams q = ProblemParams::autonomous(5, 2.5, 1e-6);
  const GroundState gs = find_ground_state(q.with_a(0.0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_thresholds(q, gs));
}
BENCHMARK(BM_Thresholds);

static void BM_MinimizeM1(benchmark::State& state) {
  const CoefficientSpec f = CoefficientSpec::gaussian(1.0, 0.2);
  const double lam = lambda(ProblemParams::autonomous(1, 3.0, 0.0),
                            closed_form_1d(3.0, 1.0).S_p_pow);
  const ProblemParams q = f.params(3.0, 0.5 * lam);
  MinimizeOptions opt;
  opt.h = 1.0 / static_cast<double>(state.range(0));
  opt.record_history = false;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_m1(q, f, opt));
}
BENCHMARK(BM_MinimizeM1)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_LandscapeTable(benchmark::State& state) {
  std::vector<ProblemParams> rows;
  for (int N = 1; N <= 6; ++N) rows.push_back(ProblemParams::autonomous(N, N <= 4 ? 3.0 : 2.5, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(landscape_table(rows));
}
BENCHMARK(BM_LandscapeTable)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
