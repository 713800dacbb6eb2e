// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "mna/assoc.hpp"
#include "mna/charset.hpp"
#include "mna/weil.hpp"

namespace {

using namespace mna;

void BM_CounterD_Serial(benchmark::State& st) {
  const Field F(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::sigma_count_D(F));
}

void BM_CounterD_Parallel(benchmark::State& st) {
  const Field F(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sigma_count_D(F, static_cast<int>(st.range(1))));
}

void BM_LinearSolve_Serial(benchmark::State& st) {
  const Field F(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::sigma_count(F, Method::C));
}

void BM_LinearSolve_Parallel(benchmark::State& st) {
  const Field F(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(sigma_count(F, Method::C, static_cast<int>(st.range(1))));
}

void BM_SliceLists(benchmark::State& st) {
  const Field F(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(verify_slice_lists(F, static_cast<int>(st.range(1))));
}

}  // namespace

BENCHMARK(BM_CounterD_Serial)->Arg(1031)->Arg(4099)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CounterD_Parallel)->Args({1031, 1})->Args({1031, 4})->Args({4099, 1})->Args({4099, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearSolve_Serial)->Arg(127)->Arg(243)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearSolve_Parallel)->Args({127, 1})->Args({127, 4})->Args({243, 1})->Args({243, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SliceLists)->Args({199, 1})->Args({199, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
