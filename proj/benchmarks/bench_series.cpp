#include <benchmark/benchmark.h>

#include "cuspforms/qseries.hpp"

namespace {

void BM_EtaSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto series = cuspforms::eta_series(order);
    benchmark::DoNotOptimize(series.coeff.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_EtaPower24(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto series = cuspforms::eta_power_series(24, order);
    benchmark::DoNotOptimize(series.coeff.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_SeriesMulDense(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  auto a = cuspforms::eta_power_series(12, order);
  auto b = cuspforms::eta_power_series(13, order);
  for (auto _ : state) {
    auto product = cuspforms::series_mul(a, b, order);
    benchmark::DoNotOptimize(product.coeff.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_JacobiCube(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto series = cuspforms::jacobi_cube_series(order);
    benchmark::DoNotOptimize(series.coeff.data());
  }
}

}  // namespace

BENCHMARK(BM_EtaSeries)->Arg(1 << 12)->Arg(1 << 14)->Arg(1 << 16)->Complexity();
BENCHMARK(BM_EtaPower24)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)->Complexity();
BENCHMARK(BM_SeriesMulDense)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)->Complexity();
BENCHMARK(BM_JacobiCube)->Arg(1 << 14)->Arg(1 << 16);

BENCHMARK_MAIN();
