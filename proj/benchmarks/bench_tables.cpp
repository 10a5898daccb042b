#include <benchmark/benchmark.h>

#include "cuspforms/cuspform.hpp"
#include "cuspforms/scan.hpp"

namespace {

void BM_TauTableWeight12(benchmark::State& state) {
  const auto order = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto table = cuspforms::build_tau_table(12, order);
    benchmark::DoNotOptimize(table.coeff.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_TauTableWeight26(benchmark::State& state) {
  const auto order = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto table = cuspforms::build_tau_table(26, order);
    benchmark::DoNotOptimize(table.coeff.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_CongruenceSuite(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  cuspforms::tau_table_at_least(12, limit);
  for (auto _ : state) {
    auto report = cuspforms::congruence_check(12, limit);
    benchmark::DoNotOptimize(report.counters);
  }
}

void BM_LehmerScan(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  cuspforms::tau_table_at_least(12, limit);
  for (auto _ : state) {
    auto report = cuspforms::lehmer_scan(12, limit);
    benchmark::DoNotOptimize(report.counters);
  }
}

}  // namespace

BENCHMARK(BM_TauTableWeight12)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)->Complexity();
BENCHMARK(BM_TauTableWeight26)->Arg(1 << 10)->Arg(1 << 12)->Complexity();
BENCHMARK(BM_CongruenceSuite)->Arg(1 << 10)->Arg(1 << 12);
BENCHMARK(BM_LehmerScan)->Arg(1 << 12)->Arg(1 << 14);
