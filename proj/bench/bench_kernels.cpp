#include <benchmark/benchmark.h>

#include "mfact/chain.hpp"
#include "mfact/surjection.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(mfact::enumerate_sigma_serial(n, k));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(mfact::enumerate_sigma(n, k));
}

void BM_VerifySerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mfact::verify_serial(static_cast<int>(state.range(0))));
}

void BM_VerifyParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mfact::verify(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Args({7, 4})->Args({8, 4})->Args({8, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Args({7, 4})->Args({8, 4})->Args({8, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
