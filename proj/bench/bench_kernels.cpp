// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "mdslab/codes.hpp"
#include "mdslab/kernels.hpp"
#include "mdslab/parallel.hpp"

using namespace mdslab;

namespace {

// Extended RS codes are MDS, so every scan runs to the end.
Matrix mds_input(std::uint32_t q, std::size_t k) { return extended_rs(Field::of_order(q), k).generator; }

void BM_HeavyCombination(benchmark::State& state) {
  const Matrix m = mds_input(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_heavy_combination(m, m.rows()));
}

void BM_HeavyCombinationSerial(benchmark::State& state) {
  const Matrix m = mds_input(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_heavy_combination_serial(m, m.rows()));
}

void BM_DependentSubset(benchmark::State& state) {
  const Matrix m = mds_input(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_dependent_subset(m));
}

void BM_DependentSubsetSerial(benchmark::State& state) {
  const Matrix m = mds_input(static_cast<std::uint32_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_dependent_subset_serial(m));
}

void BM_ScanMatrices(benchmark::State& state) {
  auto f = Field::of_order(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_all_matrices(f, 2, 5));
}

void BM_ScanMatricesSerial(benchmark::State& state) {
  auto f = Field::of_order(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_all_matrices_serial(f, 2, 5));
}

}  // namespace

BENCHMARK(BM_HeavyCombination)->Args({13, 5})->Args({11, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeavyCombinationSerial)->Args({13, 5})->Args({11, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DependentSubset)->Args({13, 5})->Args({11, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DependentSubsetSerial)->Args({13, 5})->Args({11, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanMatrices)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanMatricesSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
