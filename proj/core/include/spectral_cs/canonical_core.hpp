#pragma once

// Trace-normed canonical systems J u' = z H u whose Hamiltonian is a
// piecewise-constant projection H(t) = P_{phi(t)}. Each constant piece is a
// singular interval, across which the system is solved exactly.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace spectral_cs {

using Complex = std::complex<double>;
using Vector2c = Eigen::Vector2cd;

/// The rotation between two consecutive step angles, stored as a unit vector
/// so that turns close to 0 and close to pi both keep full relative precision
/// in sin. A normalized phase has sin > 0, i.e. a turn in (0, pi).
struct Turn {
  double cos = 1.0;
  double sin = 0.0;

  static Turn from_angle(double angle) { return {std::cos(angle), std::sin(angle)}; }
  double angle() const { return std::atan2(sin, cos); }
};

/// J = [[0, -1], [1, 0]].
Eigen::Matrix2d symplectic_j();

/// P_phi, the orthogonal projection onto (cos phi, sin phi)^t.
Eigen::Matrix2d projection(double phi);

/// Non-decreasing right-continuous step function phi on (0, L_K):
///   phi(t) = phi_1 on (0, L_1),  phi(t) = phi_{n+1} on [L_n, L_{n+1}).
///
/// Angles are unwrapped (cumulative) and every turn phi_{n+1} - phi_n lies in
/// (0, pi). Step lengths and turns are the primary data; the cumulative
/// breakpoints L_n and angles phi_n are derived from them, so phases with
/// exponentially growing steps keep their small steps exact.
class StepPhase {
 public:
  /// From breakpoints L_1 < L_2 < ... (L_0 = 0 implicit) and angles
  /// phi_1, phi_2, ...; both of length K >= 1.
  static StepPhase from_breakpoints(std::span<const double> breakpoints,
                                    std::span<const double> angles);

  /// From phi_1, the step lengths L_n - L_{n-1} (n = 1..K) and the K - 1 turns.
  static StepPhase from_steps(double first_angle, std::vector<double> lengths,
                              std::vector<Turn> turns);

  /// Number of steps K.
  std::size_t size() const noexcept { return lengths_.size(); }

  /// L_n for n = 0..K.
  double breakpoint(std::size_t n) const;
  /// phi_n for n = 1..K.
  double angle(std::size_t n) const;
  /// L_n - L_{n-1} for n = 1..K.
  double length(std::size_t n) const;
  /// phi_{n+1} - phi_n for n = 1..K-1.
  Turn turn(std::size_t n) const;

  /// Right end of the represented range, L_K.
  double extent() const noexcept { return breakpoints_.back(); }

  /// Index n of the step whose angle phi_n is in force at t in (0, L_K).
  std::size_t step_at(double t) const;
  double angle_at(double t) const { return angle(step_at(t)); }

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> angles() const noexcept { return angles_; }
  std::span<const double> lengths() const noexcept { return lengths_; }

  /// phi_1 = pi/2 and L_1 = 1 within `tol`, i.e. a phase that can come from a
  /// Jacobi operator.
  bool is_jacobi_normalized(double tol = 1e-12) const noexcept;
  /// Throws ValidationError naming the failed invariant.
  void require_jacobi_normalized(double tol = 1e-12) const;

 private:
  StepPhase() = default;
  void rebuild_cumulative();

  double first_angle_ = 0.0;
  std::vector<double> lengths_;
  std::vector<Turn> turns_;
  std::vector<double> breakpoints_;  // L_0..L_K
  std::vector<double> angles_;       // phi_1..phi_K
};

/// H(t) = P_{phi(t)} for a step phase.
class TraceNormedHamiltonian {
 public:
  explicit TraceNormedHamiltonian(StepPhase phase) : phase_(std::move(phase)) {}

  const StepPhase& phase() const noexcept { return phase_; }
  double extent() const noexcept { return phase_.extent(); }
  Eigen::Matrix2d operator()(double t) const { return projection(phase_.angle_at(t)); }

 private:
  StepPhase phase_;
};

/// Solution of the discrete canonical system
///   J (u_{n+1} - u_n) = z (L_{n+1} - L_n) P_{phi_{n+1}} u_n,
/// with u_n = u(L_n); u[0] is the value at t = 0.
struct DiscreteCanonicalState {
  std::vector<Vector2c> u;
  Complex z;
};

/// (I - z * weight * J P_phi) u. Exact across a singular interval of
/// integrated weight `weight` >= 0, since (J P_phi)^2 = 0.
Vector2c propagate_singular(const Vector2c& u, double weight, double phi, Complex z);

/// Propagates u0 from t = 0 across the first `upto` steps.
DiscreteCanonicalState propagate_phase(const StepPhase& phase, const Vector2c& u0, Complex z,
                                       std::size_t upto);

/// sum_{n=1}^{M} u_n^* (L_n - L_{n-1}) P_{phi_n} u_n over the propagated range,
/// the integral of u^* H u over (0, L_M).
double h_integral(const StepPhase& phase, const DiscreteCanonicalState& state);

}  // namespace spectral_cs
