// Serial reference vs OpenMP kernel for the exact nonincidence search.
// Thread count for the parallel runs comes from the benchmark argument.

#include <benchmark/benchmark.h>

#include "sts/constructions.hpp"
#include "sts/search.hpp"

namespace {

const sts::Design& design_for(std::uint32_t v) {
  static const sts::Design d15 = sts::bose(15);
  static const sts::Design d19 = sts::doubling(sts::bose(9)).design;
  static const sts::Design d21 = sts::embed_subsystem(9, 21, 1).design;
  static const sts::Design d25 = sts::construct_design(25, 1);
  switch (v) {
    case 15: return d15;
    case 19: return d19;
    case 21: return d21;
    default: return d25;
  }
}

void BM_ExactSerial(benchmark::State& state) {
  const sts::Design& d = design_for(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto report = sts::exact_max_nonincident_serial(d, 1'000'000'000);
    benchmark::DoNotOptimize(report.best_s);
    state.counters["nodes"] = static_cast<double>(report.nodes_visited);
  }
}

void BM_ExactParallel(benchmark::State& state) {
  const sts::Design& d = design_for(static_cast<std::uint32_t>(state.range(0)));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto report = sts::exact_max_nonincident_parallel(d, 1'000'000'000, threads);
    benchmark::DoNotOptimize(report.best_s);
    state.counters["nodes"] = static_cast<double>(report.nodes_visited);
  }
}

void BM_Greedy(benchmark::State& state) {
  const sts::Design& d = design_for(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sts::greedy_max_nonincident(d, 1).best_s);
}

void BM_BruteForce(benchmark::State& state) {
  const sts::Design& d = design_for(15);
  for (auto _ : state) benchmark::DoNotOptimize(sts::brute_force_max_nonincident(d));
}

}  // namespace

BENCHMARK(BM_ExactSerial)->Arg(15)->Arg(19)->Arg(21)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactParallel)
    ->ArgsProduct({{15, 19, 21, 25}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Greedy)->Arg(15)->Arg(21)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
