#include <benchmark/benchmark.h>

#include <map>

#include "ikg/canon.hpp"
#include "ikg/harness.hpp"

namespace {

const std::vector<ikg::Graph>& graphs(int n) {
  static std::map<int, std::vector<ikg::Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, ikg::enumerate_graphs(n)).first;
  return it->second;
}

ikg::GraphOutcome check(const ikg::Graph& g) {
  ikg::SuiteOptions options;
  options.poset_sweep = false;
  return ikg::theorem_checks(g, options);
}

void BM_SweepSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ikg::sweep_serial("bench", n, graphs(n), check));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs(n).size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ikg::sweep_parallel("bench", n, graphs(n), check, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs(n).size()));
}

void BM_ConjectureSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ikg::sweep_serial("bench", n, graphs(n), ikg::conjecture_checks));
}

void BM_ConjectureParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(ikg::sweep_parallel("bench", n, graphs(n), ikg::conjecture_checks, jobs));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Args({5, 2})->Args({6, 2})->Args({6, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjectureSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjectureParallel)->Args({7, 2})->Args({7, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
