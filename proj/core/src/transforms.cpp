#include "spectral_cs/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "high_precision.hpp"
#include "spectral_cs/errors.hpp"

namespace spectral_cs {

using detail::HighReal;

namespace {

constexpr double kPi = std::numbers::pi;

double reduce_mod_pi(double angle) { return angle - kPi * std::floor(angle / kPi); }

// sin(x + y) from the unit vectors of x and y; no angle is ever formed, so a
// sum close to pi keeps the relative precision of the small sines.
double sin_of_sum(const Turn& x, const Turn& y) { return x.sin * y.cos + x.cos * y.sin; }

// Turn from phi_0 = 0 to phi_1.
Turn initial_turn(const StepPhase& phase) { return Turn::from_angle(phase.angle(1)); }

}  // namespace

PolarSolutionData polar_data(const FundamentalSolutions& sol) {
  const auto& c = sol.impl().c;
  const auto& s = sol.impl().s;
  PolarSolutionData polar;
  for (std::size_t n = 1; n < c.size(); ++n) {
    const HighReal r = boost::multiprecision::sqrt(c[n] * c[n] + s[n] * s[n]);
    if (r == 0) throw DegenerateInputError("R_" + std::to_string(n) + " vanishes");
    polar.radius.push_back(static_cast<double>(r));
    polar.raw_angle.push_back(
        std::atan2(static_cast<double>(s[n] / r), static_cast<double>(c[n] / r)));
  }
  return polar;
}

StepPhase normalize_phase(const PolarSolutionData& polar) {
  if (polar.radius.empty() || polar.radius.size() != polar.raw_angle.size())
    throw ValidationError("length", "radius and raw angle sequences must match and be non-empty");

  std::vector<double> lengths;
  lengths.reserve(polar.radius.size());
  for (double r : polar.radius) {
    if (!std::isfinite(r) || !(r > 0.0)) throw ValidationError("R_n > 0", "non-positive radius");
    lengths.push_back(r * r);
  }

  const double first = reduce_mod_pi(polar.raw_angle.front());
  std::vector<Turn> turns;
  double current = first;
  for (std::size_t k = 1; k < polar.raw_angle.size(); ++k) {
    const double delta = reduce_mod_pi(polar.raw_angle[k] - current);
    if (!(delta > 0.0 && delta < kPi))
      throw ValidationError("increasing steps",
                            "turn into step " + std::to_string(k + 1) + " is a multiple of pi");
    turns.push_back(Turn::from_angle(delta));
    current += delta;
  }
  return StepPhase::from_steps(first, std::move(lengths), std::move(turns));
}

StepPhase jacobi_to_canonical(const JacobiCoefficients& coeffs) {
  const FundamentalSolutions sol = fundamental_solutions(coeffs);
  const auto& c = sol.impl().c;
  const auto& s = sol.impl().s;
  const std::size_t steps = sol.last_index();  // N + 1

  std::vector<HighReal> radius_sq(steps + 1);
  std::vector<double> lengths(steps);
  for (std::size_t n = 1; n <= steps; ++n) {
    radius_sq[n] = c[n] * c[n] + s[n] * s[n];
    lengths[n - 1] = static_cast<double>(radius_sq[n]);
    if (!std::isfinite(lengths[n - 1]))
      throw NumericalError("step length R_" + std::to_string(n) + "^2 overflows a double");
    if (!(lengths[n - 1] > 0.0)) throw DegenerateInputError("R_" + std::to_string(n) + " vanishes");
  }

  std::vector<Turn> turns(steps - 1);
  for (std::size_t n = 1; n < steps; ++n) {
    const HighReal rr = boost::multiprecision::sqrt(radius_sq[n] * radius_sq[n + 1]);
    const HighReal w = c[n] * s[n + 1] - c[n + 1] * s[n];
    const HighReal d = c[n] * c[n + 1] + s[n] * s[n + 1];
    Turn t{static_cast<double>(d / rr), static_cast<double>(w / rr)};
    if (!(t.sin > 0.0))
      throw ValidationError("increasing steps",
                            "turn after step " + std::to_string(n) + " is not in (0, pi)");
    turns[n - 1] = t;
  }

  // c_1 = 0, s_1 = 1: the first step is exactly (0, 1) at pi/2.
  return StepPhase::from_steps(kPi / 2, std::move(lengths), std::move(turns));
}

JacobiCoefficients canonical_to_jacobi(const StepPhase& phase) {
  phase.require_jacobi_normalized();
  const std::size_t steps = phase.size();
  if (steps < 2)
    throw ValidationError("length", "at least two steps are needed to determine a_1 and b_1");

  // Index 0 carries R_0 = 1 and the turn from phi_0 = 0 to phi_1.
  std::vector<double> radius(steps + 1, 1.0);
  std::vector<Turn> turn(steps);
  turn[0] = initial_turn(phase);
  for (std::size_t n = 1; n <= steps; ++n) radius[n] = std::sqrt(phase.length(n));
  for (std::size_t n = 1; n < steps; ++n) turn[n] = phase.turn(n);

  std::vector<double> a(steps);
  for (std::size_t n = 0; n < steps; ++n) {
    const double w = radius[n] * radius[n + 1] * turn[n].sin;
    if (!(w > 0.0)) throw DegenerateInputError("vanishing Wronskian at n = " + std::to_string(n));
    a[n] = -1.0 / w;
  }
  a[0] = -1.0;

  std::vector<double> b(steps - 1);
  for (std::size_t n = 0; n + 1 < steps; ++n)
    b[n] = a[n] * a[n + 1] * radius[n] * radius[n + 2] * sin_of_sum(turn[n], turn[n + 1]);

  double bound = 1.0;
  for (double v : a) bound = std::max(bound, std::abs(v));
  for (double v : b) bound = std::max(bound, std::abs(v));
  if (!std::isfinite(bound)) throw NumericalError("recovered coefficients are not finite");
  return {std::move(a), std::move(b), bound};
}

double ds_constraint_residual(const StepPhase& phase, std::size_t n) {
  if (n < 1 || n >= phase.size())
    throw RangeError("constraint index " + std::to_string(n) + " outside [1, " +
                     std::to_string(phase.size() - 1) + "]");
  return std::sqrt(phase.length(n) * phase.length(n + 1)) * phase.turn(n).sin - 1.0;
}

std::vector<double> ds_to_schrodinger(const StepPhase& phase, double tol) {
  phase.require_jacobi_normalized();
  const std::size_t steps = phase.size();
  if (steps < 2)
    throw ValidationError("length", "at least two steps are needed to determine b_1");

  double worst = 0.0;
  std::size_t worst_index = 0;
  for (std::size_t n = 1; n < steps; ++n) {
    const double r = ds_constraint_residual(phase, n);
    if (!(std::abs(r) <= std::abs(worst))) {
      worst = r;
      worst_index = n;
    }
  }
  if (!(std::abs(worst) <= tol)) throw NotDiscreteSchrodingerError(worst, worst_index);

  std::vector<double> b(steps - 1);
  for (std::size_t n = 0; n + 1 < steps; ++n) {
    const double r_n = n == 0 ? 1.0 : std::sqrt(phase.length(n));
    const double r_n2 = std::sqrt(phase.length(n + 2));
    const Turn first = n == 0 ? initial_turn(phase) : phase.turn(n);
    b[n] = r_n * r_n2 * sin_of_sum(first, phase.turn(n + 1));
  }
  return b;
}

double ds_second_step_length(double phi2) {
  const double x = phi2 - kPi / 2;
  if (!(x > 0.0 && x < kPi)) throw DomainError("phi_2 - pi/2 must lie in (0, pi)");
  const double s = std::sin(x);
  return 1.0 + 1.0 / (s * s);
}

StepPhase discrete_schrodinger_phase(std::span<const double> angles) {
  if (angles.empty()) throw ValidationError("length", "at least one angle is required");
  if (std::abs(angles.front() - kPi / 2) > 1e-12)
    throw ValidationError("phi_1 = pi/2", "first angle must be pi/2");

  std::vector<double> lengths{1.0};
  std::vector<Turn> turns;
  double radius = 1.0;
  for (std::size_t k = 0; k + 1 < angles.size(); ++k) {
    const double delta = angles[k + 1] - angles[k];
    if (!(delta > 0.0 && delta < kPi))
      throw ValidationError("increasing steps",
                            "phi_" + std::to_string(k + 2) + " - phi_" + std::to_string(k + 1) +
                                " is not in (0, pi)");
    const Turn t = Turn::from_angle(delta);
    radius = 1.0 / (radius * t.sin);
    turns.push_back(t);
    lengths.push_back(radius * radius);
  }
  return StepPhase::from_steps(kPi / 2, std::move(lengths), std::move(turns));
}

}  // namespace spectral_cs
