// Serial direct and Gray engines against the chunked parallel walk.
//   ./mindist_bench --benchmark_counters_tabular=true

#include <benchmark/benchmark.h>

#include "cwc/mindist.hpp"
#include "cwc/random.hpp"

namespace {

cwc::GeneratorMatrix code_for(const benchmark::State& state) {
  cwc::Rng rng(static_cast<std::uint64_t>(state.range(0)));
  return cwc::random_full_rank(static_cast<std::size_t>(2 * state.range(0)), static_cast<std::size_t>(state.range(0)),
                               rng);
}

void set_counters(benchmark::State& state, const cwc::DistanceReport& r) {
  state.counters["row_ops"] = static_cast<double>(r.xor_row_ops);
  state.counters["words/s"] =
      benchmark::Counter(static_cast<double>(r.codewords_enumerated), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Direct(benchmark::State& state) {
  const auto m = code_for(state);
  cwc::DistanceReport r;
  for (auto _ : state) benchmark::DoNotOptimize(r = cwc::min_distance_direct(m));
  set_counters(state, r);
}

void BM_Gray(benchmark::State& state) {
  const auto m = code_for(state);
  cwc::DistanceReport r;
  for (auto _ : state) benchmark::DoNotOptimize(r = cwc::min_distance_gray(m));
  set_counters(state, r);
}

void BM_Parallel(benchmark::State& state) {
  const auto m = code_for(state);
  const int workers = static_cast<int>(state.range(1));
  cwc::DistanceReport r;
  for (auto _ : state) benchmark::DoNotOptimize(r = cwc::min_distance_parallel(m, workers));
  set_counters(state, r);
}

}  // namespace

BENCHMARK(BM_Direct)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gray)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{12, 16, 20}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
