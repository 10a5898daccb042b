#include <benchmark/benchmark.h>

#include "cuspforms/dioph.hpp"
#include "cuspforms/satotate.hpp"

namespace {

cuspforms::WeierstrassCurve reference_model() {
  using cuspforms::Rat;
  return {Rat(-4), Rat(20), Rat(-40), Rat(4), Rat(0)};
}

void BM_Eliminate(benchmark::State& state) {
  const long t = state.range(0);
  for (auto _ : state) {
    auto cubic = cuspforms::eliminate(cuspforms::Int(t));
    benchmark::DoNotOptimize(cubic.x3.get_mpz_t());
  }
}

void BM_IntegralPoints(benchmark::State& state) {
  const auto bound = static_cast<long>(state.range(0));
  auto cubic = cuspforms::general_cubic(cuspforms::Int(2));
  for (auto _ : state) {
    auto points = cuspforms::integral_points(cubic, cuspforms::Int(bound));
    benchmark::DoNotOptimize(points.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_PointCount(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  auto curve = reference_model();
  for (auto _ : state) {
    auto count = cuspforms::ec_point_count(curve, p);
    benchmark::DoNotOptimize(count);
  }
  state.SetComplexityN(state.range(0));
}

void BM_BsdProduct(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  auto curve = reference_model();
  for (auto _ : state) {
    auto result = cuspforms::bsd_product(curve, bound);
    benchmark::DoNotOptimize(result.loglog_slope);
  }
}

}  // namespace

BENCHMARK(BM_Eliminate)->Arg(2)->Arg(-24)->Arg(1000);
BENCHMARK(BM_IntegralPoints)->Arg(1 << 8)->Arg(1 << 10)->Arg(1 << 12)->Complexity();
BENCHMARK(BM_PointCount)->Arg(10007)->Arg(100003)->Arg(1000003)->Complexity();
BENCHMARK(BM_BsdProduct)->Arg(1 << 10)->Arg(1 << 12);
