#include "spectral_cs/errors.hpp"

#include <sstream>

namespace spectral_cs {

ValidationError::ValidationError(std::string invariant, const std::string& detail)
    : Error("invariant '" + invariant + "' violated: " + detail),
      invariant_(std::move(invariant)) {}

namespace {

std::string describe_residual(double worst_residual, std::size_t index) {
  std::ostringstream os;
  os.precision(17);
  os << "not a discrete Schrodinger system: constraint residual " << worst_residual
     << " at step " << index;
  return os.str();
}

}  // namespace

NotDiscreteSchrodingerError::NotDiscreteSchrodingerError(double worst_residual,
                                                         std::size_t index)
    : Error(describe_residual(worst_residual, index)),
      worst_residual_(worst_residual),
      index_(index) {}

}  // namespace spectral_cs
