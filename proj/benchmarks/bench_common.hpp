#pragma once

#include <random>

#include <spectral_cs/operator_core.hpp>

namespace spectral_cs::bench {

inline JacobiCoefficients random_operator(std::size_t n_max, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> off(-3.0, -0.5), diag(-3.0, 3.0);
  std::vector<double> a(n_max + 1), b(n_max);
  a[0] = -1.0;
  for (std::size_t n = 1; n <= n_max; ++n) a[n] = off(rng);
  for (auto& v : b) v = diag(rng);
  return {std::move(a), std::move(b), 3.0};
}

}  // namespace spectral_cs::bench
