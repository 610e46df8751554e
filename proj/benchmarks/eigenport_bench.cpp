#include <vector>

#include <benchmark/benchmark.h>

#include "eigenport/embedding.hpp"
#include "eigenport/spectral.hpp"
#include "eigenport/transport.hpp"

namespace {

using namespace eigenport;

void BM_Eigendecompose(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Eigen::MatrixXd l = laplacian(build_grid(side, side));
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(l));
  state.SetLabel(std::to_string(side * side) + " nodes");
}
BENCHMARK(BM_Eigendecompose)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

// Fiedler pmf to the highest-frequency pmf: a long-range transport.
void BM_SolveBalanceLp(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = build_grid(side, side);
  const auto pmfs = spectrum_pmfs(eigendecompose(laplacian(g)));
  const auto inc = incidence_matrices(g);
  int pivots = 0;
  for (auto _ : state) {
    const TransportPlan plan = solve_balance_lp(inc, pmfs[1], pmfs.back());
    pivots = plan.stats.iterations;
    benchmark::DoNotOptimize(plan.objective_l1);
  }
  state.counters["pivots"] = pivots;
}
BENCHMARK(BM_SolveBalanceLp)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_DistanceMatrixGrid7x3(benchmark::State& state) {
  const Graph g = build_grid(7, 3);
  const auto pmfs = spectrum_pmfs(eigendecompose(laplacian(g)));
  const auto inc = incidence_matrices(g);
  const DistanceOptions options{LpObjective::kUnit, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(inc, pmfs, 0.5, options));
}
BENCHMARK(BM_DistanceMatrixGrid7x3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DistanceMatrixStarTree(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const std::vector<int> branches{len, len, len, len};
  const Graph g = build_starlike_tree(branches);
  const auto pmfs = spectrum_pmfs(eigendecompose(laplacian(g)));
  const auto inc = incidence_matrices(g);
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(inc, pmfs, 0.5));
  state.SetLabel(std::to_string(g.node_count()) + " nodes");
}
BENCHMARK(BM_DistanceMatrixStarTree)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ClassicalMds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd x = Eigen::MatrixXd::Random(n, 3);
  const Eigen::MatrixXd d = pairwise_distances(x);
  for (auto _ : state) benchmark::DoNotOptimize(classical_mds_auto(d));
}
BENCHMARK(BM_ClassicalMds)->Arg(21)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
