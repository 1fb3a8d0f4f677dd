// Parallel series kernels against the serial references, on random models of
// growing top degree.

#include <benchmark/benchmark.h>

#include "thom/random_models.hpp"
#include "thom/reference.hpp"
#include "thom/verify.hpp"

using namespace thom;

namespace {

struct Operands {
  TotalClass u;
  BetaSeries s, t;
};

Operands make_operands(int top) {
  ModelGenerator g(99, static_cast<std::uint64_t>(top));
  AlgebraPtr a = g.algebra(Field::Rat, top);
  // make sure the requested size is actually reached
  for (int tries = 0; a->top_degree() < top && tries < 50; ++tries) a = g.algebra(Field::Rat, top);
  const ClassKind kind = ClassKind::Pontrjagin;
  return {g.total_class(a, kind, a->top_degree()), g.series(a, kind, 0), g.series(a, kind, 0)};
}

void BM_series_mul_parallel(benchmark::State& state) {
  auto ops = make_operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_mul_general(ops.s, ops.t));
}

void BM_series_mul_serial(benchmark::State& state) {
  auto ops = make_operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::series_mul(ops.s, ops.t));
}

void BM_beta_parallel(benchmark::State& state) {
  auto ops = make_operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(beta_of(ops.u));
}

void BM_beta_serial(benchmark::State& state) {
  auto ops = make_operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::beta_of(ops.u));
}

void BM_suite(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("product-multi", 1, 32, parallel));
}

}  // namespace

BENCHMARK(BM_series_mul_parallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_series_mul_serial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_beta_parallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_beta_serial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_suite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
