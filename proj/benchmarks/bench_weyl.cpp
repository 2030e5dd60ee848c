#include <benchmark/benchmark.h>

#include <spectral_cs/transforms.hpp>
#include <spectral_cs/weyl.hpp>

#include "bench_common.hpp"

namespace spectral_cs {
namespace {

void BM_MJacobi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto coeffs = bench::random_operator(n);
  for (auto _ : state) benchmark::DoNotOptimize(m_jacobi(coeffs, Complex(0.5, 1.0), n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MJacobi)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_MCanonical(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto phase = jacobi_to_canonical(bench::random_operator(n));
  for (auto _ : state) benchmark::DoNotOptimize(m_canonical(phase, Complex(0.5, 1.0), n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MCanonical)->RangeMultiplier(4)->Range(64, 512)->Complexity(benchmark::oN);

void BM_DefaultGrid(benchmark::State& state) {
  const auto coeffs = bench::random_operator(500);
  const auto phase = jacobi_to_canonical(coeffs);
  const auto zs = default_grid();
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(m_grid(coeffs, zs, 500, threads));
    benchmark::DoNotOptimize(m_grid(phase, zs, 500, threads));
  }
}
BENCHMARK(BM_DefaultGrid)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
}  // namespace spectral_cs
