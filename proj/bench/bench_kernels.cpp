// Serial against OpenMP execution of the parallel kernels. Argument 0 runs
// the serial reference, 1 the parallel path.

#include <benchmark/benchmark.h>

#include "bergman/carleson.hpp"
#include "bergman/hankel.hpp"
#include "bergman/series.hpp"

namespace {

bergman::Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? bergman::Exec::parallel : bergman::Exec::serial;
}

void BM_AverageOrder(benchmark::State& state) {
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(bergman::average_order_ratio(1.5, 1'000'000, exec));
}
BENCHMARK(BM_AverageOrder)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SquarefreeZeta(benchmark::State& state) {
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(bergman::squarefree_zeta_residual(2.0, 1'000'000, exec));
}
BENCHMARK(BM_SquarefreeZeta)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DualityTail(benchmark::State& state) {
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(bergman::duality_tail(1.5, 200'000, exec));
}
BENCHMARK(BM_DualityTail)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BergmanHankel(benchmark::State& state) {
  const auto exec = exec_of(state);
  const auto sym = bergman::hilbert_type_symbol(400 * 400);
  for (auto _ : state) benchmark::DoNotOptimize(bergman::build_bergman_hankel(sym, 400, exec));
}
BENCHMARK(BM_BergmanHankel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Carleson2(benchmark::State& state) {
  const auto exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(bergman::carleson2_ratio(0.1, 3, 1'000'000, exec));
}
BENCHMARK(BM_Carleson2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
