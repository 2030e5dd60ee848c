#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <spectral_cs/errors.hpp>
#include <spectral_cs/transforms.hpp>
#include <spectral_cs/weak_star.hpp>

#include "support/oracles.hpp"
#include "support/random.hpp"

namespace spectral_cs {
namespace {

constexpr double kPi = std::numbers::pi;

double max_coefficient_error(const JacobiCoefficients& x, const JacobiCoefficients& y) {
  EXPECT_EQ(x.size(), y.size());
  double err = 0.0;
  for (std::size_t n = 0; n <= x.size(); ++n) err = std::max(err, std::abs(x.a(n) - y.a(n)));
  for (std::size_t n = 1; n <= x.size(); ++n) err = std::max(err, std::abs(x.b(n) - y.b(n)));
  return err;
}

TEST(JacobiToCanonical, FreeOperator) {
  const auto phase = jacobi_to_canonical(JacobiCoefficients::free(8));
  ASSERT_EQ(phase.size(), 9u);
  for (std::size_t n = 1; n <= phase.size(); ++n) {
    EXPECT_NEAR(phase.breakpoint(n), static_cast<double>(n), 1e-15);
    EXPECT_NEAR(phase.angle(n), static_cast<double>(n) * kPi / 2, 1e-14);
  }
}

TEST(JacobiToCanonical, MatchesExactPolarForm) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto coeffs = testing::random_jacobi(rng, 40, 3.0);
    const auto phase = jacobi_to_canonical(coeffs);
    const auto ref = testing::exact_phase(
        testing::exact_solutions(coeffs.a_values(), coeffs.b_values()));
    ASSERT_EQ(phase.size(), ref.angles.size());
    for (std::size_t n = 1; n <= phase.size(); ++n) {
      EXPECT_NEAR(phase.breakpoint(n), ref.breakpoints[n - 1], 1e-14 * ref.breakpoints[n - 1]);
      EXPECT_NEAR(phase.angle(n), ref.angles[n - 1], 1e-12);
    }
  }
}

TEST(JacobiToCanonical, InitialIntervalIsExactlyZeroOne) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto phase = jacobi_to_canonical(testing::random_jacobi(rng, 10, 3.0));
    EXPECT_EQ(phase.angle(1), kPi / 2);
    EXPECT_EQ(phase.breakpoint(1), 1.0);
    // The singular interval does not extend past 1.
    EXPECT_GT(std::abs(std::sin(phase.angle(2) - kPi / 2)), 0.0);
  }
}

TEST(JacobiToCanonical, SinIdentity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto coeffs = testing::random_jacobi(rng, 40, 3.0);
    const auto phase = jacobi_to_canonical(coeffs);
    for (std::size_t n = 1; n < phase.size(); ++n) {
      const double lhs = std::sqrt(phase.length(n) * phase.length(n + 1)) * phase.turn(n).sin;
      EXPECT_NEAR(lhs, -1.0 / coeffs.a(n), 1e-12 * std::abs(1.0 / coeffs.a(n)));
    }
  }
}

TEST(CanonicalToJacobi, FreePhase) {
  std::vector<double> l, phi;
  for (int n = 1; n <= 10; ++n) {
    l.push_back(n);
    phi.push_back(n * kPi / 2);
  }
  const auto coeffs = canonical_to_jacobi(StepPhase::from_breakpoints(l, phi));
  EXPECT_EQ(coeffs.size(), 9u);
  EXPECT_LE(max_coefficient_error(coeffs, JacobiCoefficients::free(9)), 1e-15);
}

TEST(CanonicalToJacobi, RejectsNonJacobiPhase) {
  const std::vector<double> l{2.0, 3.0}, phi{kPi / 2, kPi};
  EXPECT_THROW(canonical_to_jacobi(StepPhase::from_breakpoints(l, phi)), ValidationError);
  const std::vector<double> l2{1.0, 2.0}, phi2{kPi / 2, 3 * kPi / 2};
  EXPECT_THROW(canonical_to_jacobi(StepPhase::from_breakpoints(l2, phi2)), ValidationError);
}

TEST(Roundtrip, CoefficientsThroughPhase) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 40);
    const auto coeffs = testing::random_jacobi(rng, size(rng), 3.0);
    EXPECT_LE(max_coefficient_error(canonical_to_jacobi(jacobi_to_canonical(coeffs)), coeffs),
              1e-10);
  }
}

TEST(Roundtrip, PhaseThroughCoefficients) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const auto phase = testing::random_jacobi_phase(rng, 12, 0.3);
    const auto back = jacobi_to_canonical(canonical_to_jacobi(phase));
    ASSERT_EQ(back.size(), phase.size());
    for (std::size_t n = 1; n <= phase.size(); ++n) {
      EXPECT_NEAR(back.breakpoint(n), phase.breakpoint(n), 1e-10 * phase.breakpoint(n));
      EXPECT_NEAR(back.angle(n), phase.angle(n), 1e-10);
    }
  }
}

TEST(NormalizePhase, UniqueRepresentative) {
  std::mt19937_64 rng(26);
  std::uniform_int_distribution<int> shift(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto phase = testing::random_jacobi_phase(rng, 10);
    PolarSolutionData polar;
    for (std::size_t n = 1; n <= phase.size(); ++n) {
      polar.radius.push_back(std::sqrt(phase.length(n)));
      polar.raw_angle.push_back(phase.angle(n) + shift(rng) * kPi);
    }
    const auto normalized = normalize_phase(polar);
    EXPECT_NEAR(normalized.angle(1), kPi / 2, 1e-12);
    for (std::size_t n = 1; n <= phase.size(); ++n) {
      EXPECT_NEAR(normalized.angle(n), phase.angle(n), 1e-11);
      EXPECT_NEAR(normalized.breakpoint(n), phase.breakpoint(n), 1e-12 * phase.breakpoint(n));
    }
    for (std::size_t n = 1; n < phase.size(); ++n) {
      const double delta = normalized.angle(n + 1) - normalized.angle(n);
      EXPECT_GT(delta, 0.0);
      EXPECT_LT(delta, kPi);
    }
  }
}

TEST(NormalizePhase, RejectsTurnOfPi) {
  PolarSolutionData polar{{1.0, 1.0}, {kPi / 2, 3 * kPi / 2}};
  EXPECT_THROW(normalize_phase(polar), ValidationError);
  PolarSolutionData zero{{1.0, 0.0}, {kPi / 2, kPi}};
  EXPECT_THROW(normalize_phase(zero), ValidationError);
}

TEST(PolarData, RadiusMatchesSolutions) {
  std::mt19937_64 rng(27);
  const auto coeffs = testing::random_jacobi(rng, 20, 3.0);
  const auto sol = fundamental_solutions(coeffs);
  const auto polar = polar_data(sol);
  for (std::size_t n = 1; n <= sol.last_index(); ++n) {
    EXPECT_NEAR(polar.radius[n - 1] * polar.radius[n - 1], sol.radius_squared(n),
                1e-13 * sol.radius_squared(n));
    EXPECT_NEAR(polar.radius[n - 1] * std::cos(polar.raw_angle[n - 1]), sol.c(n),
                1e-12 * polar.radius[n - 1]);
  }
}

TEST(DsConstraint, KnownValues) {
  const auto free_phase = jacobi_to_canonical(JacobiCoefficients::free(5));
  for (std::size_t n = 1; n < free_phase.size(); ++n)
    EXPECT_NEAR(ds_constraint_residual(free_phase, n), 0.0, 1e-15);

  const std::vector<double> l{1.0, 3.0}, phi{kPi / 2, 3 * kPi / 4};
  EXPECT_NEAR(ds_constraint_residual(StepPhase::from_breakpoints(l, phi), 1), 0.0, 1e-15);
  const std::vector<double> l1{1.0, 2.0};
  EXPECT_NEAR(ds_constraint_residual(StepPhase::from_breakpoints(l1, phi), 1),
              std::sqrt(2.0) / 2 - 1.0, 1e-15);
  EXPECT_NEAR(ds_constraint_residual(counterexample_phase(), 1), -0.5, 1e-15);
  EXPECT_THROW(ds_constraint_residual(free_phase, 0), RangeError);
  EXPECT_THROW(ds_constraint_residual(free_phase, free_phase.size()), RangeError);
}

TEST(DsToSchrodinger, FreeAndConstantPotential) {
  const auto free_b = ds_to_schrodinger(jacobi_to_canonical(JacobiCoefficients::free(6)));
  for (double b : free_b) EXPECT_NEAR(b, 0.0, 1e-15);

  const auto ones = JacobiCoefficients::discrete_schrodinger(std::vector<double>(30, 1.0), 1.0);
  const auto b = ds_to_schrodinger(jacobi_to_canonical(ones));
  ASSERT_EQ(b.size(), 30u);
  for (double v : b) EXPECT_NEAR(v, 1.0, 1e-10);
}

TEST(DsToSchrodinger, RandomPotentials) {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 50; ++trial) {
    const auto coeffs = testing::random_schrodinger(rng, 30, 3.0);
    const auto phase = jacobi_to_canonical(coeffs);
    const auto b = ds_to_schrodinger(phase);
    for (std::size_t n = 1; n <= coeffs.size(); ++n) EXPECT_NEAR(b[n - 1], coeffs.b(n), 1e-10);
    const auto back = canonical_to_jacobi(phase);
    for (std::size_t n = 0; n <= back.size(); ++n) EXPECT_NEAR(back.a(n), -1.0, 1e-10);
  }
}

TEST(DsToSchrodinger, RejectsCounterexample) {
  try {
    ds_to_schrodinger(counterexample_phase());
    FAIL();
  } catch (const NotDiscreteSchrodingerError& e) {
    // Step 1 gives -1/2; step 2 is worse: sqrt(1/2 * 1/2) sin(pi/4) - 1.
    EXPECT_EQ(e.index(), 2u);
    EXPECT_NEAR(e.worst_residual(), 0.5 * std::sqrt(0.5) - 1.0, 1e-15);
  }
}

TEST(DsToSchrodinger, NextLengthFollowsFromHistory) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> turn(0.3, kPi - 0.3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> angles{kPi / 2};
    for (int k = 0; k < 8; ++k) angles.push_back(angles.back() + turn(rng));
    const auto phase = discrete_schrodinger_phase(angles);
    for (std::size_t n = 1; n < phase.size(); ++n) {
      const double r_next =
          1.0 / (std::sqrt(phase.length(n)) * std::sin(angles[n] - angles[n - 1]));
      EXPECT_NEAR(phase.length(n + 1), r_next * r_next, 1e-12 * r_next * r_next);
      EXPECT_NEAR(ds_constraint_residual(phase, n), 0.0, 1e-12);
    }
    EXPECT_NO_THROW(ds_to_schrodinger(phase));
  }
}

TEST(DsSecondStepLength, Values) {
  EXPECT_NEAR(ds_second_step_length(kPi), 2.0, 1e-15);
  EXPECT_NEAR(ds_second_step_length(3 * kPi / 4), 3.0, 1e-14);
  EXPECT_GT(ds_second_step_length(kPi / 2 + 1e-6), 1e11);
  EXPECT_THROW(ds_second_step_length(kPi / 2), DomainError);
  EXPECT_THROW(ds_second_step_length(3 * kPi / 2), DomainError);
  std::mt19937_64 rng(30);
  std::uniform_real_distribution<double> psi(kPi / 2 + 1e-3, 3 * kPi / 2 - 1e-3);
  for (int k = 0; k < 100; ++k) EXPECT_GE(ds_second_step_length(psi(rng)), 2.0);
}

}  // namespace
}  // namespace spectral_cs
