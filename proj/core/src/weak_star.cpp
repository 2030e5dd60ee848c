#include "spectral_cs/weak_star.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spectral_cs/errors.hpp"
#include "spectral_cs/transforms.hpp"

namespace spectral_cs {

namespace {
constexpr double kPi = std::numbers::pi;
}

TestFunction::TestFunction(std::vector<TestPiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw ValidationError("compact support", "test function has no pieces");
  for (const auto& p : pieces_) {
    if (!std::isfinite(p.begin) || !std::isfinite(p.end) || !(p.begin >= 0.0) ||
        !(p.end > p.begin))
      throw ValidationError("compact support", "piece intervals must be bounded, in [0, inf)");
    if (!p.value.allFinite()) throw ValidationError("finite values", "piece value is not finite");
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const TestPiece& x, const TestPiece& y) { return x.begin < y.begin; });
  for (std::size_t k = 1; k < pieces_.size(); ++k)
    if (pieces_[k].begin < pieces_[k - 1].end)
      throw ValidationError("disjoint pieces", "test function pieces overlap");
}

TestFunction TestFunction::indicator(double begin, double end, const Eigen::Vector2d& value) {
  return TestFunction({TestPiece{begin, end, value}});
}

double TestFunction::support_end() const noexcept { return pieces_.back().end; }

double pairing(const TraceNormedHamiltonian& h, const TestFunction& f,
               PairingConvention convention) {
  const StepPhase& phase = h.phase();
  if (f.support_end() > phase.extent())
    throw RangeError("test function support ends at " + std::to_string(f.support_end()) +
                     ", beyond the Hamiltonian's range " + std::to_string(phase.extent()));

  double total = 0.0;
  for (const TestPiece& piece : f.pieces()) {
    double piece_total = 0.0;
    for (std::size_t n = phase.step_at(piece.begin); n <= phase.size(); ++n) {
      const double lo = std::max(piece.begin, phase.breakpoint(n - 1));
      const double hi = std::min(piece.end, phase.breakpoint(n));
      if (hi <= lo) break;
      const double phi = phase.angle(n);
      const double along = std::cos(phi) * piece.value(0) + std::sin(phi) * piece.value(1);
      piece_total += (hi - lo) * along * along;
    }
    if (convention == PairingConvention::unnormalized) piece_total /= piece.end - piece.begin;
    total += piece_total;
  }
  return total;
}

double weak_star_discrepancy(const TraceNormedHamiltonian& h1, const TraceNormedHamiltonian& h2,
                             std::span<const TestFunction> tests, PairingConvention convention) {
  if (tests.empty()) throw ValidationError("test set", "discrepancy needs at least one test function");
  double worst = 0.0;
  for (const auto& f : tests)
    worst = std::max(worst, std::abs(pairing(h1, f, convention) - pairing(h2, f, convention)));
  return worst;
}

StepPhase counterexample_phase() {
  const double breakpoints[] = {1.0, 1.5, 2.0, 3.0};
  const double angles[] = {kPi / 2, 3 * kPi / 4, kPi, 3 * kPi / 2};
  return StepPhase::from_breakpoints(breakpoints, angles);
}

TraceNormedHamiltonian discrete_schrodinger_head(double psi) {
  const double breakpoints[] = {1.0, ds_second_step_length(psi)};
  const double angles[] = {kPi / 2, psi};
  return TraceNormedHamiltonian(StepPhase::from_breakpoints(breakpoints, angles));
}

NonDensityCertificate nondensity_certificate(const StepPhase& target, std::size_t resolution,
                                             PairingConvention convention,
                                             std::size_t threads) {
  target.require_jacobi_normalized();
  if (target.extent() < 2.0)
    throw ValidationError("covers [1, 2)", "target phase must be defined on [1, 2)");
  if (resolution < 2) throw DomainError("sweep resolution must be at least 2");

  NonDensityCertificate cert{target, {}, convention, resolution, 0.0, 0.0, {}};
  const Eigen::Vector2d e1(1.0, 0.0);
  for (std::size_t n = target.step_at(1.0); n <= target.size(); ++n) {
    const double lo = std::max(1.0, target.breakpoint(n - 1));
    const double hi = std::min(2.0, target.breakpoint(n));
    if (hi <= lo) break;
    cert.test_set.push_back(TestFunction::indicator(lo, hi, e1));
  }
  if (cert.test_set.size() < 2)
    throw InapplicableError("target phase is constant on [1, 2); no discrete Schrodinger separation");

  const TraceNormedHamiltonian h_target(target);
  const double lo = kPi / 2 + kSweepMargin;
  const double hi = 3 * kPi / 2 - kSweepMargin;
  const double step = (hi - lo) / static_cast<double>(resolution - 1);
  cert.curve.resize(resolution);
  parallel_for(resolution, threads, [&](std::size_t k) {
    const double psi = lo + static_cast<double>(k) * step;
    cert.curve[k] = {psi, weak_star_discrepancy(h_target, discrete_schrodinger_head(psi),
                                                cert.test_set, convention)};
  });

  cert.infimum = cert.curve.front().second;
  cert.argmin_psi = cert.curve.front().first;
  for (const auto& [psi, d] : cert.curve)
    if (d < cert.infimum) {
      cert.infimum = d;
      cert.argmin_psi = psi;
    }
  return cert;
}

}  // namespace spectral_cs
