#include <benchmark/benchmark.h>

#include <spectral_cs/weak_star.hpp>

namespace spectral_cs {
namespace {

void BM_Certificate(benchmark::State& state) {
  const auto target = counterexample_phase();
  const auto resolution = static_cast<std::size_t>(state.range(0));
  const auto threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        nondensity_certificate(target, resolution, PairingConvention::weighted, threads));
}
BENCHMARK(BM_Certificate)->Args({10000, 1})->Args({10000, 4})->UseRealTime();

}  // namespace
}  // namespace spectral_cs
