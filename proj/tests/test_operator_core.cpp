#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <spectral_cs/errors.hpp>
#include <spectral_cs/operator_core.hpp>

#include "support/oracles.hpp"
#include "support/random.hpp"

namespace spectral_cs {
namespace {

using testing::exact_solutions;

TEST(JacobiCoefficients, AcceptsValidInput) {
  const JacobiCoefficients j({-1.0, -2.0}, {3.0}, 3.0);
  EXPECT_EQ(j.size(), 1u);
  EXPECT_EQ(j.a(1), -2.0);
  EXPECT_EQ(j.b(1), 3.0);
  EXPECT_FALSE(j.is_discrete_schrodinger());
  EXPECT_TRUE(JacobiCoefficients::free(4).is_discrete_schrodinger());
}

TEST(JacobiCoefficients, RejectsBrokenInvariants) {
  const auto invariant_of = [](auto&& make) {
    try {
      make();
    } catch (const ValidationError& e) {
      return e.invariant();
    }
    return std::string("none");
  };
  EXPECT_EQ(invariant_of([] { JacobiCoefficients({-2.0, -1.0}, {0.0}, 3.0); }), "a_0 = -1");
  EXPECT_EQ(invariant_of([] { JacobiCoefficients({-1.0, 0.5}, {0.0}, 3.0); }), "a_n < 0");
  EXPECT_EQ(invariant_of([] { JacobiCoefficients({-1.0, 0.0}, {0.0}, 3.0); }), "a_n < 0");
  EXPECT_EQ(invariant_of([] { JacobiCoefficients({-1.0, -1.0}, {4.0}, 3.0); }), "bounded");
  EXPECT_EQ(invariant_of([] { JacobiCoefficients({-1.0, -4.0}, {0.0}, 3.0); }), "bounded");
  EXPECT_EQ(invariant_of([] { JacobiCoefficients({-1.0}, {0.0}, 3.0); }), "length");
  EXPECT_EQ(invariant_of([] { JacobiCoefficients({-1.0}, {}, 3.0); }), "length");
}

TEST(JacobiCoefficients, TailRepeatsLastPair) {
  const JacobiCoefficients j({-1.0, -2.0, -0.5}, {1.0, 2.0}, 3.0);
  EXPECT_EQ(j.a_extended(7), -0.5);
  EXPECT_EQ(j.b_extended(7), 2.0);
  const JacobiCoefficients r = j.resized(5);
  EXPECT_EQ(r.size(), 5u);
  EXPECT_EQ(r.a(5), -0.5);
  EXPECT_EQ(r.b(4), 2.0);
  EXPECT_EQ(r.a(1), -2.0);
}

TEST(TransferMatrix, FreeOperatorAtZero) {
  const auto m = transfer_matrix(JacobiCoefficients::free(3), 1, 0.0);
  EXPECT_EQ(m(0, 0), Complex(0.0));
  EXPECT_EQ(m(0, 1), Complex(1.0));
  EXPECT_EQ(m(1, 0), Complex(-1.0));
  EXPECT_EQ(m(1, 1), Complex(0.0));
}

TEST(TransferMatrix, FreeOperatorAtI) {
  const auto m = transfer_matrix(JacobiCoefficients::free(3), 1, Complex(0.0, 1.0));
  EXPECT_EQ(m(1, 0), Complex(-1.0));
  EXPECT_EQ(m(1, 1), Complex(0.0, -1.0));
}

TEST(TransferMatrix, HandEvaluation) {
  const auto m = transfer_matrix(JacobiCoefficients({-1.0, -2.0}, {3.0}, 3.0), 1, 0.0);
  EXPECT_DOUBLE_EQ(m(1, 0).real(), -0.5);
  EXPECT_DOUBLE_EQ(m(1, 1).real(), 1.5);
}

TEST(TransferMatrix, OutOfRange) {
  const auto j = JacobiCoefficients::free(3);
  EXPECT_THROW(transfer_matrix(j, 0, 0.0), RangeError);
  EXPECT_THROW(transfer_matrix(j, 4, 0.0), RangeError);
}

TEST(TransferMatrix, DeterminantAndPropagationMatchRecurrence) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto j = testing::random_jacobi(rng, 20, 3.0);
    const Complex z = testing::random_complex(rng, 5.0);
    // Direct recurrence from y_0 = 1, y_1 = 0.5 + i.
    std::vector<Complex> y{1.0, Complex(0.5, 1.0)};
    for (std::size_t n = 1; n <= j.size(); ++n)
      y.push_back(((z - j.b(n)) * y[n] - j.a(n - 1) * y[n - 1]) / j.a(n));
    Eigen::Vector2cd v(y[0], y[1]);
    for (std::size_t n = 1; n <= j.size(); ++n) {
      const auto m = transfer_matrix(j, n, z);
      EXPECT_NEAR(std::abs(m.determinant() - j.a(n - 1) / j.a(n)), 0.0, 1e-12);
      v = m * v;
      const double scale = std::max(1.0, std::abs(y[n + 1]));
      EXPECT_LE(std::abs(v(0) - y[n]) / scale, 1e-12);
      EXPECT_LE(std::abs(v(1) - y[n + 1]) / scale, 1e-12);
    }
  }
}

TEST(FundamentalSolutions, FreeOperatorSequences) {
  const auto sol = fundamental_solutions(JacobiCoefficients::free(6));
  // y_{n+1} = -y_{n-1}.
  std::vector<double> c{1.0, 0.0}, s{0.0, 1.0};
  for (std::size_t n = 1; n <= 6; ++n) {
    c.push_back(-c[n - 1]);
    s.push_back(-s[n - 1]);
  }
  ASSERT_EQ(sol.last_index(), 7u);
  for (std::size_t n = 0; n <= 7; ++n) {
    EXPECT_EQ(sol.c(n), c[n]) << n;
    EXPECT_EQ(sol.s(n), s[n]) << n;
  }
}

TEST(FundamentalSolutions, InitialConditions) {
  std::mt19937_64 rng(3);
  const auto sol = fundamental_solutions(testing::random_jacobi(rng, 5, 3.0));
  EXPECT_EQ(sol.c(0), 1.0);
  EXPECT_EQ(sol.c(1), 0.0);
  EXPECT_EQ(sol.s(0), 0.0);
  EXPECT_EQ(sol.s(1), 1.0);
  const std::vector<double> bad_c{1.0, 1.0}, s{0.0, 1.0};
  EXPECT_THROW(FundamentalSolutions(bad_c, s), ValidationError);
}

TEST(FundamentalSolutions, SingleStepByHand) {
  // a_0 c_0 + a_1 c_2 + b_1 c_1 = 0 gives c_2 = -1; likewise s_2 = 2.
  const JacobiCoefficients j({-1.0, -1.0}, {2.0}, 2.0);
  const auto sol = fundamental_solutions(j);
  EXPECT_DOUBLE_EQ(sol.c(2), -1.0);
  EXPECT_DOUBLE_EQ(sol.s(2), 2.0);
  EXPECT_DOUBLE_EQ(j.a(1) * sol.wronskian(1), -1.0);
  EXPECT_DOUBLE_EQ(recover_b(sol, j.a_values(), 0), 2.0);
}

TEST(FundamentalSolutions, MatchesExactRecurrence) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto j = testing::random_jacobi(rng, 60, 5.0);
    const auto sol = fundamental_solutions(j);
    const auto ref = exact_solutions(j.a_values(), j.b_values());
    for (std::size_t n = 0; n <= sol.last_index(); ++n) {
      const double rc = static_cast<double>(ref.c[n]);
      const double rs = static_cast<double>(ref.s[n]);
      EXPECT_LE(std::abs(sol.c(n) - rc), 1e-14 * std::max(1.0, std::abs(rc)));
      EXPECT_LE(std::abs(sol.s(n) - rs), 1e-14 * std::max(1.0, std::abs(rs)));
    }
  }
}

TEST(FundamentalSolutions, WronskianIdentity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto j = testing::random_jacobi(rng, 100, 5.0);
    const auto sol = fundamental_solutions(j);
    for (std::size_t n = 0; n <= j.size(); ++n)
      EXPECT_NEAR(j.a(n) * sol.wronskian(n), -1.0, 1e-12) << "n = " << n;
  }
}

TEST(FundamentalSolutions, SchrodingerWronskianIsOne) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sol = fundamental_solutions(testing::random_schrodinger(rng, 50, 3.0));
    for (std::size_t n = 0; n + 1 <= sol.last_index(); ++n)
      EXPECT_NEAR(sol.wronskian(n), 1.0, 1e-12);
  }
}

TEST(Recover, FreeOperator) {
  const auto j = JacobiCoefficients::free(4);
  const auto sol = fundamental_solutions(j);
  EXPECT_EQ(recover_a(sol, 0), -1.0);
  EXPECT_EQ(recover_a(sol, 1), -1.0);
  EXPECT_EQ(recover_b(sol, j.a_values(), 0), 0.0);
}

TEST(Recover, RoundtripRandom) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 100);
    const auto j = testing::random_jacobi(rng, size(rng), 5.0);
    const auto sol = fundamental_solutions(j);
    for (std::size_t n = 0; n <= j.size(); ++n) EXPECT_NEAR(recover_a(sol, n), j.a(n), 1e-10);
    for (std::size_t n = 0; n + 1 <= j.size(); ++n)
      EXPECT_NEAR(recover_b(sol, j.a_values(), n), j.b(n + 1), 1e-10);
  }
}

TEST(Recover, DegenerateAndRange) {
  const std::vector<double> c{1.0, 0.0, 0.0}, s{0.0, 1.0, 0.0};
  const FundamentalSolutions sol(c, s);
  EXPECT_THROW(recover_a(sol, 1), DegenerateInputError);
  EXPECT_THROW(recover_a(sol, 2), RangeError);
  const std::vector<double> a{-1.0, -1.0};
  EXPECT_THROW(recover_b(sol, a, 1), RangeError);
}

}  // namespace
}  // namespace spectral_cs
