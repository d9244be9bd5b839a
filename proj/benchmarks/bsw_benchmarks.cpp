#include <benchmark/benchmark.h>

#include "bsw/heterogeneous.hpp"
#include "bsw/homogeneous.hpp"
#include "bsw/partitions.hpp"
#include "bsw/simulator.hpp"
#include "bsw/solver.hpp"

namespace {

bsw::ContactRateView full(std::size_t n, std::size_t copies) {
  return bsw::validate_spec(
      bsw::NetworkSpec::full_contact(n, 200.0, 0, n - 1, copies));
}

void BM_EnumeratePartitions(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bsw::enumerate_partitions(k));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CountPartitions(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bsw::count_partitions(k));
}
BENCHMARK(BM_CountPartitions)->Arg(8)->Arg(16)->Arg(30);

void BM_HomogeneousBuild(benchmark::State& state) {
  const auto view = full(300, std::size_t{1} << state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bsw::build_homogeneous_chain(view));
}
BENCHMARK(BM_HomogeneousBuild)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_HeterogeneousBuild(benchmark::State& state) {
  const auto view = full(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(bsw::build_heterogeneous_chain(view));
  state.counters["states"] =
      static_cast<double>(bsw::build_heterogeneous_chain(view).chain.size());
}
BENCHMARK(BM_HeterogeneousBuild)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SolveCdf(benchmark::State& state) {
  const auto view = full(300, std::size_t{1} << state.range(0));
  const auto chain = bsw::build_homogeneous_chain(view).chain;
  const auto grid = bsw::default_grid(view.min_mean(), view.max_mean());
  for (auto _ : state) benchmark::DoNotOptimize(bsw::solve_cdf(chain, grid));
  state.counters["states"] = static_cast<double>(chain.size());
}
BENCHMARK(BM_SolveCdf)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  auto spec = bsw::NetworkSpec::full_contact(
      static_cast<std::size_t>(state.range(0)), 200.0, 0,
      static_cast<bsw::NodeId>(state.range(0) - 1), 16);
  bsw::SimConfig cfg;
  cfg.n_messages = 1000;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(bsw::simulate(spec, cfg));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Simulate)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
