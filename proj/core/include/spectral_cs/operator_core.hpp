#pragma once

// Jacobi and discrete Schrodinger coefficient data, the three-term
// recurrence
//
//     a_{n-1} y_{n-1} + a_n y_{n+1} + b_n y_n = z y_n,   n >= 1,
//
// its one-step transfer matrices, and the zero-energy fundamental solutions
// c, s together with the recovery of (a, b) from them.
//
// Sequences keep the usual subscripts: a_n for n = 0..N (a_0 = -1 is the
// boundary coefficient), b_n for n = 1..N, c_n and s_n for n = 0..N+1.

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace spectral_cs {

using Complex = std::complex<double>;
using TransferMatrix = Eigen::Matrix2cd;

class JacobiCoefficients {
 public:
  /// `a` holds a_0..a_N, `b` holds b_1..b_N. Throws ValidationError unless
  /// a_0 == -1, every a_n < 0, N >= 1 and max(|a_n|, |b_n|) <= bound.
  JacobiCoefficients(std::vector<double> a, std::vector<double> b, double bound);

  /// a_n == -1 for n = 0..N; `b` holds the potential b_1..b_N.
  static JacobiCoefficients discrete_schrodinger(std::vector<double> b, double bound);

  /// The free operator: a == -1, b == 0, truncated at N.
  static JacobiCoefficients free(std::size_t n_max);

  std::size_t size() const noexcept { return b_.size(); }
  double bound() const noexcept { return bound_; }

  double a(std::size_t n) const;
  double b(std::size_t n) const;

  std::span<const double> a_values() const noexcept { return a_; }
  std::span<const double> b_values() const noexcept { return b_; }

  // Beyond N the last stored pair (a_N, b_N) is repeated.
  double a_extended(std::size_t n) const noexcept;
  double b_extended(std::size_t n) const;

  /// Copy truncated or tail-extended to length n_max.
  JacobiCoefficients resized(std::size_t n_max) const;

  bool is_discrete_schrodinger() const noexcept;

 private:
  std::vector<double> a_;
  std::vector<double> b_;
  double bound_;
};

/// M_n(z) = [[0, 1], [-a_{n-1}/a_n, (z - b_n)/a_n]], so that
/// (y_n, y_{n+1})^t = M_n(z) (y_{n-1}, y_n)^t. Requires 1 <= n <= N.
TransferMatrix transfer_matrix(const JacobiCoefficients& coeffs, std::size_t n, Complex z);

/// Zero-energy solutions with c_0 = s_1 = 1, c_1 = s_0 = 0.
///
/// Both solutions generally grow exponentially, so c_n s_{n+1} - c_{n+1} s_n
/// loses every digit to cancellation in double precision long before N
/// reaches desk-scale sizes. Values are therefore held in extended precision
/// and rounded to double only on access.
class FundamentalSolutions {
 public:
  /// Wraps given values of c_0..c_{N+1}, s_0..s_{N+1}. Throws ValidationError
  /// when the initial conditions or the lengths do not match.
  FundamentalSolutions(std::span<const double> c, std::span<const double> s);

  /// Index of the last stored entry (N + 1).
  std::size_t last_index() const noexcept;

  double c(std::size_t n) const;
  double s(std::size_t n) const;

  /// c_n s_{n+1} - c_{n+1} s_n, evaluated before rounding.
  double wronskian(std::size_t n) const;
  /// c_n s_{n+2} - c_{n+2} s_n, evaluated before rounding.
  double skip_wronskian(std::size_t n) const;
  /// c_n c_{n+1} + s_n s_{n+1}, evaluated before rounding.
  double inner_product(std::size_t n) const;
  /// c_n^2 + s_n^2.
  double radius_squared(std::size_t n) const;

  /// Rounded copies of the stored sequences.
  std::vector<double> c_values() const;
  std::vector<double> s_values() const;

  struct Impl;
  explicit FundamentalSolutions(std::shared_ptr<const Impl> impl);
  const Impl& impl() const noexcept { return *impl_; }

 private:
  std::shared_ptr<const Impl> impl_;
};

FundamentalSolutions fundamental_solutions(const JacobiCoefficients& coeffs);

/// a_n = -1 / (c_n s_{n+1} - c_{n+1} s_n). Throws DegenerateInputError on a
/// vanishing Wronskian and RangeError when n + 1 is not stored.
double recover_a(const FundamentalSolutions& sol, std::size_t n);

/// b_{n+1} = a_n a_{n+1} (c_n s_{n+2} - c_{n+2} s_n), with `a` indexed from 0.
double recover_b(const FundamentalSolutions& sol, std::span<const double> a, std::size_t n);

}  // namespace spectral_cs
