#pragma once

// Reference computations that share no code path with the library: a
// separate multiprecision backend for the zero-energy recurrence, dense
// linear algebra for resolvents and matrix exponentials, and Riemann sums
// for pairings.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <spectral_cs/canonical_core.hpp>
#include <spectral_cs/operator_core.hpp>
#include <spectral_cs/weak_star.hpp>

namespace spectral_cs::testing {

using Exact = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<500>,
                                            boost::multiprecision::et_off>;

struct ExactSolutions {
  std::vector<Exact> c, s;  // indices 0..N+1
};

// a_{n-1} y_{n-1} + a_n y_{n+1} + b_n y_n = 0, solved forward.
inline ExactSolutions exact_solutions(std::span<const double> a, std::span<const double> b) {
  const std::size_t n_max = b.size();
  ExactSolutions out{std::vector<Exact>(n_max + 2), std::vector<Exact>(n_max + 2)};
  out.c[0] = 1;
  out.s[1] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Exact an1 = a[n - 1], an = a[n], bn = b[n - 1];
    out.c[n + 1] = -(an1 * out.c[n - 1] + bn * out.c[n]) / an;
    out.s[n + 1] = -(an1 * out.s[n - 1] + bn * out.s[n]) / an;
  }
  return out;
}

// L_n and unwrapped phi_n from c + is = R e^{i phi}, with phi_1 = pi/2 and
// each increment taken in (0, pi).
struct ExactPhase {
  std::vector<double> breakpoints;  // L_1..L_{N+1}
  std::vector<double> angles;       // phi_1..phi_{N+1}
};

inline ExactPhase exact_phase(const ExactSolutions& sol) {
  ExactPhase out;
  Exact total = 0;
  double prev = 0.0;
  for (std::size_t n = 1; n < sol.c.size(); ++n) {
    total += sol.c[n] * sol.c[n] + sol.s[n] * sol.s[n];
    out.breakpoints.push_back(static_cast<double>(total));
    const Exact r = boost::multiprecision::sqrt(sol.c[n] * sol.c[n] + sol.s[n] * sol.s[n]);
    double raw = std::atan2(static_cast<double>(sol.s[n] / r), static_cast<double>(sol.c[n] / r));
    if (n == 1) {
      prev = raw;
    } else {
      while (raw <= prev) raw += std::numbers::pi;
      while (raw > prev + std::numbers::pi) raw -= std::numbers::pi;
      prev = raw;
    }
    out.angles.push_back(prev);
  }
  return out;
}

// <delta_1, (J_N - z)^{-1} delta_1> for the N x N truncated Jacobi matrix.
inline Complex resolvent_m(const JacobiCoefficients& coeffs, Complex z, std::size_t n_max) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_max, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    m(n - 1, n - 1) = coeffs.b_extended(n) - z;
    if (n < n_max) {
      m(n - 1, n) = coeffs.a_extended(n);
      m(n, n - 1) = coeffs.a_extended(n);
    }
  }
  Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(n_max);
  e1(0) = 1.0;
  return m.partialPivLu().solve(e1)(0);
}

// Root of w^2 + z w + 1 = 0 inside the unit disk: the free m-function.
inline Complex free_m(Complex z) {
  const Complex d = std::sqrt(z * z - 4.0);
  const Complex r1 = (-z + d) / 2.0;
  const Complex r2 = (-z - d) / 2.0;
  return std::abs(r1) < 1.0 ? r1 : r2;
}

// Pade scaling-and-squaring exponential of -z w J P_phi in extended
// precision, rounded to double at the end.
inline Eigen::Matrix2cd expm_propagator(double weight, double phi, Complex z) {
  using Ext = long double;
  using ExtComplex = std::complex<Ext>;
  Eigen::Matrix<Ext, 2, 2> j;
  j << 0, -1, 1, 0;
  const Eigen::Matrix<Ext, 2, 1> e(std::cos(static_cast<Ext>(phi)), std::sin(static_cast<Ext>(phi)));
  const Eigen::Matrix<Ext, 2, 2> p = e * e.transpose();
  const ExtComplex zw = ExtComplex(z.real(), z.imag()) * static_cast<Ext>(weight);
  const Eigen::Matrix<ExtComplex, 2, 2> gen = -zw * (j * p).template cast<ExtComplex>();
  const Eigen::Matrix<ExtComplex, 2, 2> ex = gen.exp();
  Eigen::Matrix2cd out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out(r, c) = Complex(static_cast<double>(ex(r, c).real()), static_cast<double>(ex(r, c).imag()));
  return out;
}

// Midpoint sum of f^T H f on a uniform grid of the support.
inline double riemann_pairing(const TraceNormedHamiltonian& h, const TestFunction& f,
                              std::size_t cells_per_unit) {
  double total = 0.0;
  for (const TestPiece& piece : f.pieces()) {
    const auto cells = static_cast<std::size_t>(
        std::ceil((piece.end - piece.begin) * static_cast<double>(cells_per_unit)));
    const double dt = (piece.end - piece.begin) / static_cast<double>(cells);
    for (std::size_t k = 0; k < cells; ++k) {
      const double t = piece.begin + (static_cast<double>(k) + 0.5) * dt;
      total += dt * piece.value.dot(h(t) * piece.value);
    }
  }
  return total;
}

}  // namespace spectral_cs::testing
