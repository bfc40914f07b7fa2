// Serial reference path against the OpenMP path for the parallel kernels.
// Arg 0 = serial, 1 = OpenMP.

#include <benchmark/benchmark.h>

#include "normcomm/catalog.hpp"
#include "normcomm/commutators.hpp"
#include "normcomm/verify.hpp"

using namespace normcomm;

namespace {

parallel::Mode mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? parallel::Mode::Serial : parallel::Mode::OpenMP;
}

void BM_ValidateA6(benchmark::State& state) {
  const auto& a6 = catalog_entry("A6").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(validate(a6, mode_of(state)));
}
BENCHMARK(BM_ValidateA6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TheoremSuite(benchmark::State& state) {
  verify::SuiteConfig cfg;
  cfg.mode = mode_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify::suite_theorem(cfg));
}
BENCHMARK(BM_TheoremSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CommutatorSuite(benchmark::State& state) {
  verify::SuiteConfig cfg;
  cfg.mode = mode_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify::suite_commutator_algebra(cfg));
}
BENCHMARK(BM_CommutatorSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OracleA5(benchmark::State& state) {
  const auto& e = catalog_entry("A5");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        diamond_image_oracle(e.algebra, e.subset("H"), e.subset("K"), {10, 2, 10'000'000}));
}
BENCHMARK(BM_OracleA5)->Unit(benchmark::kMillisecond);

void BM_HuqA6(benchmark::State& state) {
  const auto& e = catalog_entry("A6");
  const auto h = normalization(e.algebra, e.subset("H"));
  const auto k = normalization(e.algebra, e.subset("K"));
  for (auto _ : state) benchmark::DoNotOptimize(huq_commutator(e.algebra, h, k));
}
BENCHMARK(BM_HuqA6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
