// Serial reference vs OpenMP kernels on the lattice workloads.

#include <benchmark/benchmark.h>

#include "edgecond/domain.hpp"
#include "edgecond/grid.hpp"
#include "edgecond/solver.hpp"

using namespace edgecond;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(mode(state) == Execution::Serial ? "serial" : "parallel");
}

void BM_SampleEdgeSystem(benchmark::State& state) {
  const auto p = normalize_params(4, 7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const GridSpec grid{domain_for(p), n, n};
  for (auto _ : state) benchmark::DoNotOptimize(sample_edge_system(p, grid, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
  label(state);
}

void BM_SampleResiduals(benchmark::State& state) {
  const auto p = normalize_params(4, 7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const GridSpec grid{domain_for(p), n, n};
  for (auto _ : state) benchmark::DoNotOptimize(sample_residuals(p, grid, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
  label(state);
}

void BM_GridOracle(benchmark::State& state) {
  const auto p = normalize_params(2, 3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grid_oracle(p, constraint_box(p), n, mode(state)));
  label(state);
}

void BM_EstimateContraction(benchmark::State& state) {
  const auto p = normalize_params(5, 9);
  const DomainBox box = domain_for(p);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Gains k = auto_gains(p, box, n, Execution::Serial);
  const EdgeResidual f = edge_residual(p);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_contraction(f, box, k, n, mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_SampleEdgeSystem)->ArgsProduct({{200, 800}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleResiduals)->ArgsProduct({{200, 800}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridOracle)->ArgsProduct({{200, 400}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EstimateContraction)->ArgsProduct({{200}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
