#pragma once

// Jacobi operators <-> trace-normed canonical systems with step phases.
//
// With c_n + i s_n = R_n e^{i phi_n}, a Jacobi operator becomes the canonical
// system with steps of length R_n^2 at angle phi_n (phi_1 = pi/2, L_1 = 1),
// and the two share their m-function. The converse reads (a, b) back off
// the phase through
//
//   a_n     = -1 / (R_n R_{n+1} sin(phi_{n+1} - phi_n)),
//   b_{n+1} = a_n a_{n+1} R_n R_{n+2} sin(phi_{n+2} - phi_n),
//
// with R_0 = 1, phi_0 = 0 from c_0 = 1, s_0 = 0.

#include <cstddef>
#include <span>
#include <vector>

#include "spectral_cs/canonical_core.hpp"
#include "spectral_cs/operator_core.hpp"

namespace spectral_cs {

/// Default absolute tolerance on the discrete Schrodinger constraint residual.
inline constexpr double kDiscreteSchrodingerTolerance = 1e-9;

/// Polar form c_n + i s_n = R_n e^{i phi_n} for n = 1..N+1, before the angles
/// are normalized (each raw angle is only meaningful modulo pi).
struct PolarSolutionData {
  std::vector<double> radius;     // R_1, R_2, ...
  std::vector<double> raw_angle;  // phi_1, phi_2, ... (any representative)
};

PolarSolutionData polar_data(const FundamentalSolutions& sol);

/// Lifts raw angles to the unique representative with phi_1 in [0, pi) and
/// every turn in (0, pi); step lengths are R_n^2. A turn that is a multiple of
/// pi throws ValidationError.
StepPhase normalize_phase(const PolarSolutionData& polar);

/// The canonical system sharing the operator's m-function. An N-truncated
/// operator (a_0..a_N, b_1..b_N) determines c, s up to index N + 1 and hence
/// a phase with N + 1 steps.
StepPhase jacobi_to_canonical(const JacobiCoefficients& coeffs);

/// Inverse of jacobi_to_canonical: a K-step Jacobi-normalized phase yields
/// a_0..a_{K-1} and b_1..b_{K-1}. The declared bound is max(|a_n|, |b_n|).
JacobiCoefficients canonical_to_jacobi(const StepPhase& phase);

/// R_n R_{n+1} sin(phi_{n+1} - phi_n) - 1 for 1 <= n < K; zero exactly when
/// step n is compatible with a_n = -1.
double ds_constraint_residual(const StepPhase& phase, std::size_t n);

/// Potential b_1..b_{K-1} of the discrete Schrodinger operator behind a
/// Jacobi-normalized phase, b_{n+1} = R_n R_{n+2} sin(phi_{n+2} - phi_n).
/// Throws NotDiscreteSchrodingerError (worst residual, its index) when some
/// |ds_constraint_residual| exceeds `tol`.
std::vector<double> ds_to_schrodinger(const StepPhase& phase,
                                      double tol = kDiscreteSchrodingerTolerance);

/// L_2 = 1 + csc^2(phi_2 - pi/2), the forced end of the second step of every
/// discrete Schrodinger phase. Requires phi_2 - pi/2 in (0, pi).
double ds_second_step_length(double phi2);

/// The unique discrete Schrodinger phase with the given angles
/// (phi_1 = pi/2 first): each step length follows from the previous one and
/// the turn, R_{n+1} = 1 / (R_n sin(phi_{n+1} - phi_n)).
StepPhase discrete_schrodinger_phase(std::span<const double> angles);

}  // namespace spectral_cs
