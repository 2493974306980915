// Serial reference vs OpenMP kernels on generated graphs.

#include <benchmark/benchmark.h>

#include <map>

#include "orbitflow/census.hpp"
#include "orbitflow/graph_metrics.hpp"
#include "orbitflow/synthetic.hpp"
#include "orbitflow/transitions.hpp"

namespace {

using namespace orbitflow;

const StaticGraph& graph_of(std::int64_t n) {
  static std::map<std::int64_t, StaticGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, synth::erdos_renyi(n, 8.0 / static_cast<double>(n), 42)).first;
  return it->second;
}

const SnapshotSeries& series_of(std::int64_t n) {
  static std::map<std::int64_t, SnapshotSeries> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    const auto edges = static_cast<std::size_t>(2 * n);
    const auto el = synth::random_churn(n, {edges, edges, edges, edges}, 10, 7);
    it = cache.emplace(n, build_snapshots(el, {SnapshotMode::ActiveEdge, 10, 4, {}})).first;
  }
  return it->second;
}

void BM_CensusSerial(benchmark::State& state) {
  const auto& g = graph_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::run_census(g, 4));
}

void BM_CensusOpenMP(benchmark::State& state) {
  const auto& g = graph_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(g, 4));
}

void BM_TransitionsSerial(benchmark::State& state) {
  const auto& s = series_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::accumulate_series(s, 4));
}

void BM_TransitionsOpenMP(benchmark::State& state) {
  const auto& s = series_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(accumulate_series(s, 4));
}

void BM_PathLengthSerial(benchmark::State& state) {
  const auto& g = graph_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::characteristic_path_length(g));
}

void BM_PathLengthOpenMP(benchmark::State& state) {
  const auto& g = graph_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_path_length(g));
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusOpenMP)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransitionsSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransitionsOpenMP)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathLengthSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathLengthOpenMP)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
