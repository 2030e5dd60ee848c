#pragma once

// Weyl-Titchmarsh m-functions of Jacobi operators and of step-phase canonical
// systems, evaluated by two independent routes:
//
//  * m_jacobi shoots the three-term recurrence down from the Dirichlet
//    terminal condition y_{N+1} = 0, y_N = 1 and returns -y_1 / (a_0 y_0);
//  * m_canonical starts from the vector that the same terminal condition
//    induces at L_N and undoes the singular-interval propagators back to 0,
//    returning u^2(0) / u^1(0).
//
// Both converge geometrically in N for Im z > 0.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "spectral_cs/canonical_core.hpp"
#include "spectral_cs/operator_core.hpp"
#include "spectral_cs/parallel.hpp"

namespace spectral_cs {

/// Requires Im z > 0 and N >= 1. Coefficients past the stored range follow
/// the tail rule of JacobiCoefficients (last pair repeated).
Complex m_jacobi(const JacobiCoefficients& coeffs, Complex z, std::size_t n_max);

/// Requires Im z > 0 and 1 <= N < K: the terminal vector at L_N is built from
/// the angle of step N + 1.
Complex m_canonical(const StepPhase& phase, Complex z, std::size_t n_max);

/// Largest truncation m_canonical accepts for a phase, K - 1.
std::size_t max_truncation(const StepPhase& phase);

enum class MSource { jacobi, canonical };

struct MPoint {
  Complex z;
  Complex m;
};

struct MGrid {
  std::vector<MPoint> points;
  MSource source = MSource::jacobi;
  std::size_t truncation = 0;
  /// max |m_N(z) - m_{N/2}(z)| over the grid, a convergence estimate.
  double tolerance = 0.0;
};

/// z = x + iy for x in {-4, -3.5, ..., 4}, y in {0.5, 1, 2, 4}; x varies fastest.
std::vector<Complex> default_grid();

/// Inclusive uniform grid; x varies fastest. Throws DomainError on a
/// non-positive step, an empty range, or y0 <= 0.
std::vector<Complex> rectangular_grid(double x0, double x1, double dx, double y0, double y1,
                                      double dy);

MGrid m_grid(const JacobiCoefficients& coeffs, std::span<const Complex> zs, std::size_t n_max,
             std::size_t threads = default_thread_count());
MGrid m_grid(const StepPhase& phase, std::span<const Complex> zs, std::size_t n_max,
             std::size_t threads = default_thread_count());

struct HerglotzReport {
  bool passed = true;
  double min_im_m = 0.0;
  Complex worst_z;
  std::size_t worst_index = 0;
};

/// Checks Im z > 0 and Im m > 0 at every point; reports the smallest Im m.
HerglotzReport herglotz_check(const MGrid& grid);

/// Large-y reading of m(iy) ~ a + i rho(R) / y, against the values
/// a = -cot(phi_1), rho(R) = 1 / (L_1 sin^2 phi_1) predicted by the initial
/// singular interval (0, L_1). The sign of a follows from J u' = z H u with
/// H = P_phi and m = u^2(0) / u^1(0): across (0, L_1) the solution picks up
/// a multiple of J e_phi = (-sin phi, cos phi), so m(iy) -> -cot(phi_1).
struct AsymptoticEstimate {
  double a_est = 0.0;
  double mass_est = 0.0;
  double y_used = 0.0;
  double a_predicted = 0.0;
  double mass_predicted = 0.0;
};

/// Requires y >= 100. Throws InapplicableError when phi_1 is a multiple of pi.
AsymptoticEstimate finite_measure_asymptotics(const StepPhase& phase, double y,
                                              std::size_t n_max);
AsymptoticEstimate finite_measure_asymptotics(const StepPhase& phase, double y);

}  // namespace spectral_cs
