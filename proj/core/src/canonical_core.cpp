#include "spectral_cs/canonical_core.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "spectral_cs/errors.hpp"

namespace spectral_cs {

Eigen::Matrix2d symplectic_j() {
  Eigen::Matrix2d j;
  j << 0.0, -1.0, 1.0, 0.0;
  return j;
}

Eigen::Matrix2d projection(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Eigen::Matrix2d p;
  p << c * c, c * s, c * s, s * s;
  return p;
}

StepPhase StepPhase::from_breakpoints(std::span<const double> breakpoints,
                                      std::span<const double> angles) {
  if (breakpoints.empty() || breakpoints.size() != angles.size())
    throw ValidationError("length", "L and phi must be non-empty and of equal length");

  StepPhase phase;
  phase.lengths_.reserve(breakpoints.size());
  double previous = 0.0;
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    const double l = breakpoints[k];
    if (!std::isfinite(l) || !(l > previous))
      throw ValidationError("strictly increasing breakpoints",
                            "L_" + std::to_string(k + 1) + " does not exceed L_" +
                                std::to_string(k));
    phase.lengths_.push_back(l - previous);
    previous = l;
  }

  for (std::size_t k = 0; k < angles.size(); ++k)
    if (!std::isfinite(angles[k]))
      throw ValidationError("finite angles", "phi_" + std::to_string(k + 1) + " is not finite");
  phase.turns_.reserve(angles.size() - 1);
  for (std::size_t k = 0; k + 1 < angles.size(); ++k) {
    const double delta = angles[k + 1] - angles[k];
    if (!(delta > 0.0 && delta < std::numbers::pi))
      throw ValidationError("increasing steps",
                            "phi_" + std::to_string(k + 2) + " - phi_" + std::to_string(k + 1) +
                                " is not in (0, pi)");
    phase.turns_.push_back(Turn::from_angle(delta));
  }

  phase.first_angle_ = angles.front();
  phase.breakpoints_.assign(1, 0.0);
  phase.breakpoints_.insert(phase.breakpoints_.end(), breakpoints.begin(), breakpoints.end());
  phase.angles_.assign(angles.begin(), angles.end());
  return phase;
}

StepPhase StepPhase::from_steps(double first_angle, std::vector<double> lengths,
                                std::vector<Turn> turns) {
  if (lengths.empty() || turns.size() + 1 != lengths.size())
    throw ValidationError("length", "expected K step lengths and K - 1 turns");
  if (!std::isfinite(first_angle)) throw ValidationError("finite angles", "phi_1 is not finite");
  for (std::size_t k = 0; k < lengths.size(); ++k)
    if (!std::isfinite(lengths[k]) || !(lengths[k] > 0.0))
      throw ValidationError("strictly increasing breakpoints",
                            "step " + std::to_string(k + 1) + " has non-positive length");
  for (std::size_t k = 0; k < turns.size(); ++k)
    if (!std::isfinite(turns[k].cos) || !std::isfinite(turns[k].sin) || !(turns[k].sin > 0.0))
      throw ValidationError("increasing steps",
                            "turn after step " + std::to_string(k + 1) + " is not in (0, pi)");

  StepPhase phase;
  phase.first_angle_ = first_angle;
  phase.lengths_ = std::move(lengths);
  phase.turns_ = std::move(turns);
  phase.rebuild_cumulative();
  return phase;
}

void StepPhase::rebuild_cumulative() {
  breakpoints_.resize(lengths_.size() + 1);
  breakpoints_[0] = 0.0;
  for (std::size_t k = 0; k < lengths_.size(); ++k)
    breakpoints_[k + 1] = breakpoints_[k] + lengths_[k];

  angles_.resize(lengths_.size());
  angles_[0] = first_angle_;
  for (std::size_t k = 0; k < turns_.size(); ++k) angles_[k + 1] = angles_[k] + turns_[k].angle();
}

double StepPhase::breakpoint(std::size_t n) const {
  if (n > size())
    throw RangeError("breakpoint index " + std::to_string(n) + " outside [0, " +
                     std::to_string(size()) + "]");
  return breakpoints_[n];
}

double StepPhase::angle(std::size_t n) const {
  if (n < 1 || n > size())
    throw RangeError("angle index " + std::to_string(n) + " outside [1, " +
                     std::to_string(size()) + "]");
  return angles_[n - 1];
}

double StepPhase::length(std::size_t n) const {
  if (n < 1 || n > size())
    throw RangeError("step index " + std::to_string(n) + " outside [1, " +
                     std::to_string(size()) + "]");
  return lengths_[n - 1];
}

Turn StepPhase::turn(std::size_t n) const {
  if (n < 1 || n >= size())
    throw RangeError("turn index " + std::to_string(n) + " outside [1, " +
                     std::to_string(size() - 1) + "]");
  return turns_[n - 1];
}

std::size_t StepPhase::step_at(double t) const {
  if (!(t >= 0.0) || !(t < extent()))
    throw RangeError("t = " + std::to_string(t) + " outside the phase range [0, L_K)");
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return static_cast<std::size_t>(it - breakpoints_.begin());
}

bool StepPhase::is_jacobi_normalized(double tol) const noexcept {
  return std::abs(angles_.front() - std::numbers::pi / 2) <= tol &&
         std::abs(breakpoints_[1] - 1.0) <= tol;
}

void StepPhase::require_jacobi_normalized(double tol) const {
  if (std::abs(angles_.front() - std::numbers::pi / 2) > tol)
    throw ValidationError("phi_1 = pi/2", "first step angle is " + std::to_string(angles_.front()));
  if (std::abs(breakpoints_[1] - 1.0) > tol)
    throw ValidationError("L_1 = 1", "first breakpoint is " + std::to_string(breakpoints_[1]));
}

Vector2c propagate_singular(const Vector2c& u, double weight, double phi, Complex z) {
  if (!std::isfinite(weight) || weight < 0.0)
    throw DomainError("singular-interval weight must be finite and non-negative");
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  // J P_phi u = (e . u) J e with e = (cos phi, sin phi), J e = (-sin phi, cos phi).
  const Complex along = z * weight * (c * u(0) + s * u(1));
  return Vector2c(u(0) + along * s, u(1) - along * c);
}

DiscreteCanonicalState propagate_phase(const StepPhase& phase, const Vector2c& u0, Complex z,
                                       std::size_t upto) {
  if (upto > phase.size())
    throw RangeError("cannot propagate across " + std::to_string(upto) + " steps of a " +
                     std::to_string(phase.size()) + "-step phase");
  DiscreteCanonicalState state{{u0}, z};
  state.u.reserve(upto + 1);
  for (std::size_t n = 1; n <= upto; ++n)
    state.u.push_back(propagate_singular(state.u.back(), phase.length(n), phase.angle(n), z));
  return state;
}

double h_integral(const StepPhase& phase, const DiscreteCanonicalState& state) {
  if (state.u.empty()) return 0.0;
  const std::size_t upto = state.u.size() - 1;
  if (upto > phase.size())
    throw RangeError("state extends beyond the " + std::to_string(phase.size()) + "-step phase");
  double total = 0.0;
  for (std::size_t n = 1; n <= upto; ++n) {
    const double phi = phase.angle(n);
    const Complex along = std::cos(phi) * state.u[n](0) + std::sin(phi) * state.u[n](1);
    total += phase.length(n) * std::norm(along);
  }
  return total;
}

}  // namespace spectral_cs
