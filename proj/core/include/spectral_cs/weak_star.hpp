#pragma once

// Weak-* pairings of step Hamiltonians against piecewise-constant test
// functions, and a brute-force certificate that a Jacobi phase stays away
// from every discrete Schrodinger phase in that topology.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "spectral_cs/canonical_core.hpp"
#include "spectral_cs/parallel.hpp"

namespace spectral_cs {

/// One constant piece f(t) = value on [begin, end).
struct TestPiece {
  double begin = 0.0;
  double end = 0.0;
  Eigen::Vector2d value = Eigen::Vector2d::Zero();
};

/// Piecewise-constant R^2-valued function with compact support in [0, inf).
class TestFunction {
 public:
  /// Throws ValidationError on empty, reversed, negative or overlapping pieces.
  explicit TestFunction(std::vector<TestPiece> pieces);

  /// value * chi_[begin, end).
  static TestFunction indicator(double begin, double end, const Eigen::Vector2d& value);

  std::span<const TestPiece> pieces() const noexcept { return pieces_; }
  double support_end() const noexcept;

 private:
  std::vector<TestPiece> pieces_;
};

enum class PairingConvention {
  /// The integral of f^T H f dt.
  weighted,
  /// Each piece's contribution divided by the piece length, i.e. the mean of
  /// f^T H f over the piece; coincides with the bare integrand value when the
  /// piece sits inside one step.
  unnormalized,
};

/// Exact evaluation, piece by step overlap. Throws RangeError when f is
/// supported beyond the end of the Hamiltonian.
double pairing(const TraceNormedHamiltonian& h, const TestFunction& f,
               PairingConvention convention = PairingConvention::weighted);

/// max over f in `tests` of |pairing(h1, f) - pairing(h2, f)|.
double weak_star_discrepancy(const TraceNormedHamiltonian& h1, const TraceNormedHamiltonian& h2,
                             std::span<const TestFunction> tests,
                             PairingConvention convention = PairingConvention::weighted);

/// Jacobi phase with phi = 3pi/4 on [1, 3/2), pi on [3/2, 2) and 3pi/2 on
/// [2, 3): two distinct values inside [1, 2).
StepPhase counterexample_phase();

/// Discrete Schrodinger Hamiltonian truncated after its second step:
/// pi/2 on (0, 1), psi on [1, 1 + csc^2(psi - pi/2)). Every discrete
/// Schrodinger phase with phi_2 = psi agrees with it on [1, 2).
TraceNormedHamiltonian discrete_schrodinger_head(double psi);

struct NonDensityCertificate {
  StepPhase target;
  std::vector<TestFunction> test_set;
  PairingConvention convention = PairingConvention::weighted;
  std::size_t resolution = 0;
  double infimum = 0.0;
  double argmin_psi = 0.0;
  /// (psi, discrepancy) for every swept psi, in increasing psi.
  std::vector<std::pair<double, double>> curve;

  bool separated() const noexcept { return infimum > 0.0; }
};

/// Offset of the psi sweep from the endpoints pi/2 and 3pi/2.
inline constexpr double kSweepMargin = 1e-6;

/// Sweeps psi uniformly over [pi/2 + margin, 3pi/2 - margin] (`resolution`
/// points) and takes the minimum discrepancy between `target` and the
/// discrete Schrodinger head with phi_2 = psi. The test set is
/// {(chi_I, 0)^t} over the pieces I of `target` inside [1, 2); for the
/// counterexample these are chi_[1, 3/2) and chi_[3/2, 2). Ties resolve to
/// the smallest psi.
///
/// Throws ValidationError unless `target` is Jacobi-normalized and reaches 2,
/// InapplicableError when it is constant on [1, 2), DomainError when
/// resolution < 2.
NonDensityCertificate nondensity_certificate(
    const StepPhase& target, std::size_t resolution,
    PairingConvention convention = PairingConvention::weighted,
    std::size_t threads = default_thread_count());

}  // namespace spectral_cs
