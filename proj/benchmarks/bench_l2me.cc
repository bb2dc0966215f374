#include <benchmark/benchmark.h>

#include "rigiditykit/l2me.hpp"

namespace {

using namespace rigiditykit;

void bench_me_witness(benchmark::State& state) {
  const auto s1 = FreeProductSpec::from_factors({{2, 2}, {2, 2}});
  const auto s2 = FreeProductSpec::from_factors({{3, 2}, {2, 2}, {2, 2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(me_witness(s1, s2));
  }
}
BENCHMARK(bench_me_witness);

void bench_verify_action(benchmark::State& state) {
  const auto s1 = FreeProductSpec::from_factors({{2, 2}, {3, 4}});
  const auto s2 = FreeProductSpec::from_factors({{2, 4}, {3, 3}});
  const MEVerdict verdict = me_witness(s1, s2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_and_verify_action(s1, s2, *verdict.witness));
  }
}
BENCHMARK(bench_verify_action);

void bench_large_betti(benchmark::State& state) {
  std::vector<std::vector<long long>> factors;
  for (int i = 0; i < 40; ++i) factors.push_back({2 + i % 5, 2 + (i * 7) % 5, 2 + (i * 3) % 4});
  const auto spec = FreeProductSpec::from_factors(std::move(factors));
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti_vector(spec));
    benchmark::DoNotOptimize(euler_characteristic(spec));
  }
}
BENCHMARK(bench_large_betti);

}  // namespace
