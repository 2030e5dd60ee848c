#include <benchmark/benchmark.h>

#include <spectral_cs/transforms.hpp>

#include "bench_common.hpp"

namespace spectral_cs {
namespace {

void BM_FundamentalSolutions(benchmark::State& state) {
  const auto coeffs = bench::random_operator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_solutions(coeffs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FundamentalSolutions)->RangeMultiplier(4)->Range(16, 512)->Complexity(benchmark::oN);

void BM_JacobiToCanonical(benchmark::State& state) {
  const auto coeffs = bench::random_operator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_to_canonical(coeffs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiToCanonical)->RangeMultiplier(4)->Range(16, 512)->Complexity(benchmark::oN);

void BM_CanonicalToJacobi(benchmark::State& state) {
  const auto phase =
      jacobi_to_canonical(bench::random_operator(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_to_jacobi(phase));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CanonicalToJacobi)->RangeMultiplier(4)->Range(16, 512)->Complexity(benchmark::oN);

}  // namespace
}  // namespace spectral_cs
