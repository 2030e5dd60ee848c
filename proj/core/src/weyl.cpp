#include "spectral_cs/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectral_cs/errors.hpp"

namespace spectral_cs {

namespace {

void require_upper_half_plane(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(z.imag() > 0.0))
    throw DomainError("m-functions are evaluated for Im z > 0");
}

template <class Evaluate>
MGrid evaluate_grid(MSource source, std::span<const Complex> zs, std::size_t n_max,
                    std::size_t threads, Evaluate&& evaluate) {
  MGrid grid;
  grid.source = source;
  grid.truncation = n_max;
  grid.points.resize(zs.size());
  std::vector<double> change(zs.size(), 0.0);
  const std::size_t half = std::max<std::size_t>(1, n_max / 2);
  parallel_for(zs.size(), threads, [&](std::size_t i) {
    const Complex m = evaluate(zs[i], n_max);
    grid.points[i] = {zs[i], m};
    change[i] = std::abs(m - evaluate(zs[i], half));
  });
  for (double d : change) grid.tolerance = std::max(grid.tolerance, d);
  return grid;
}

}  // namespace

Complex m_jacobi(const JacobiCoefficients& coeffs, Complex z, std::size_t n_max) {
  require_upper_half_plane(z);
  if (n_max < 1) throw RangeError("truncation N must be at least 1");

  // ratio = y_n / y_{n-1}, starting from y_{N+1} / y_N = 0 and using
  // a_{n-1} y_{n-1} = (z - b_n) y_n - a_n y_{n+1}.
  Complex ratio = 0.0;
  for (std::size_t n = n_max; n >= 1; --n) {
    const Complex denom = (z - coeffs.b_extended(n)) - coeffs.a_extended(n) * ratio;
    if (denom == 0.0)
      throw NumericalError("y_0 = 0 encountered at N = " + std::to_string(n_max) +
                           "; increase N");
    ratio = coeffs.a_extended(n - 1) / denom;
  }
  return -ratio / coeffs.a(0);
}

std::size_t max_truncation(const StepPhase& phase) { return phase.size() - 1; }

Complex m_canonical(const StepPhase& phase, Complex z, std::size_t n_max) {
  require_upper_half_plane(z);
  if (n_max < 1 || n_max > max_truncation(phase))
    throw RangeError("truncation N = " + std::to_string(n_max) + " outside [1, " +
                     std::to_string(max_truncation(phase)) + "] for a " +
                     std::to_string(phase.size()) + "-step phase");

  // y_{N+1} = 0 means u(L_N) lies in the kernel of P_{phi_{N+1}}.
  const double terminal = phase.angle(n_max + 1);
  Vector2c u(std::sin(terminal), -std::cos(terminal));
  for (std::size_t n = n_max; n >= 1; --n) {
    // (I - z w J P)^{-1} = I + z w J P.
    u = propagate_singular(u, phase.length(n), phase.angle(n), -z);
    const double scale = std::max(std::abs(u(0)), std::abs(u(1)));
    if (!(scale > 0.0) || !std::isfinite(scale))
      throw NumericalError("canonical propagation broke down at step " + std::to_string(n));
    u /= scale;
  }
  if (u(0) == 0.0)
    throw NumericalError("u^1(0) = 0 encountered at N = " + std::to_string(n_max) +
                         "; increase N");
  return u(1) / u(0);
}

std::vector<Complex> default_grid() {
  std::vector<Complex> zs;
  for (double y : {0.5, 1.0, 2.0, 4.0})
    for (int k = -8; k <= 8; ++k) zs.emplace_back(0.5 * k, y);
  return zs;
}

std::vector<Complex> rectangular_grid(double x0, double x1, double dx, double y0, double y1,
                                      double dy) {
  for (double v : {x0, x1, dx, y0, y1, dy})
    if (!std::isfinite(v)) throw DomainError("grid parameters must be finite");
  if (!(dx > 0.0) || !(dy > 0.0)) throw DomainError("grid steps must be positive");
  if (x1 < x0 || y1 < y0) throw DomainError("grid ranges must be non-empty");
  if (!(y0 > 0.0)) throw DomainError("grid must lie in the upper half plane");

  // Inclusive ends with slack for representation error in the step.
  const auto count = [](double lo, double hi, double step) {
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  };
  const std::size_t nx = count(x0, x1, dx);
  const std::size_t ny = count(y0, y1, dy);
  std::vector<Complex> zs;
  zs.reserve(nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      zs.emplace_back(x0 + static_cast<double>(i) * dx, y0 + static_cast<double>(j) * dy);
  return zs;
}

MGrid m_grid(const JacobiCoefficients& coeffs, std::span<const Complex> zs, std::size_t n_max,
             std::size_t threads) {
  return evaluate_grid(MSource::jacobi, zs, n_max, threads,
                       [&](Complex z, std::size_t n) { return m_jacobi(coeffs, z, n); });
}

MGrid m_grid(const StepPhase& phase, std::span<const Complex> zs, std::size_t n_max,
             std::size_t threads) {
  return evaluate_grid(MSource::canonical, zs, n_max, threads,
                       [&](Complex z, std::size_t n) { return m_canonical(phase, z, n); });
}

HerglotzReport herglotz_check(const MGrid& grid) {
  HerglotzReport report;
  if (grid.points.empty()) return report;
  report.min_im_m = grid.points.front().m.imag();
  report.worst_z = grid.points.front().z;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const MPoint& p = grid.points[i];
    if (!(p.z.imag() > 0.0) || !(p.m.imag() > 0.0)) report.passed = false;
    if (!(p.m.imag() >= report.min_im_m)) {
      report.min_im_m = p.m.imag();
      report.worst_z = p.z;
      report.worst_index = i;
    }
  }
  return report;
}

AsymptoticEstimate finite_measure_asymptotics(const StepPhase& phase, double y,
                                              std::size_t n_max) {
  if (!(y >= 100.0)) throw DomainError("asymptotic evaluation height must be at least 100");
  const double phi = phase.angle(1);
  const double s = std::sin(phi);
  if (std::abs(s) <= 1e-12)
    throw InapplicableError("phi = 0 on the first interval is the z-term case, not a finite measure");

  const Complex m = m_canonical(phase, Complex(0.0, y), n_max);
  AsymptoticEstimate est;
  est.y_used = y;
  est.a_est = m.real();
  est.mass_est = y * m.imag();
  est.a_predicted = -std::cos(phi) / s;
  est.mass_predicted = 1.0 / (phase.length(1) * s * s);
  return est;
}

AsymptoticEstimate finite_measure_asymptotics(const StepPhase& phase, double y) {
  return finite_measure_asymptotics(phase, y, max_truncation(phase));
}

}  // namespace spectral_cs
