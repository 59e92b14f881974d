// Serial reference vs OpenMP histogram kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "fyperm/kernels.hpp"
#include "fyperm/statistics.hpp"

using namespace fyperm;

namespace {

std::size_t moves_of_top(const TriangularCode&, const Permutation& p) {
  return static_cast<std::size_t>(chi(p, static_cast<Symbol>(p.degree()), StatKind::moves));
}

std::size_t fy_cell(RandomSource& rng) { return static_cast<std::size_t>(inversion_rank(fisher_yates(6, rng).perm)); }

void BM_CodeSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial_code_histogram(n, false, moves_of_top));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(code_space_size(n, false)));
}

void BM_CodeParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel_code_histogram(n, false, moves_of_top));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(code_space_size(n, false)));
}

void BM_SampleSerial(benchmark::State& state) {
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial_sample_histogram(samples, kDefaultSeed, fy_cell));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleParallel(benchmark::State& state) {
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel_sample_histogram(samples, kDefaultSeed, fy_cell));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void thread_sweep(benchmark::internal::Benchmark* b, std::int64_t size) {
  const int max_threads = omp_get_max_threads();
  for (int t = 1; t <= max_threads; t *= 2) b->Args({size, t});
  if ((max_threads & (max_threads - 1)) != 0) b->Args({size, max_threads});
}

}  // namespace

BENCHMARK(BM_CodeSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CodeParallel)
    ->Apply([](benchmark::internal::Benchmark* b) {
      thread_sweep(b, 8);
      thread_sweep(b, 9);
    })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_SampleSerial)->Arg(1000000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleParallel)
    ->Apply([](benchmark::internal::Benchmark* b) { thread_sweep(b, 1000000); })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
