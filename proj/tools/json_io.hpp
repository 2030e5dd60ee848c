#pragma once

// File formats shared with other tools:
//   JacobiCoefficients  {"a": [a_0, ..., a_N], "b": [b_1, ..., b_N], "bound": B}
//   StepPhase           {"L": [L_1, L_2, ...], "phi": [phi_1, phi_2, ...]}  (L_0 = 0 implicit)
// Angles are radians. Numbers are written in shortest round-trip form.

#include <stdexcept>
#include <string>
#include <variant>

#include "spectral_cs/canonical_core.hpp"
#include "spectral_cs/operator_core.hpp"

namespace spectral_cs::cli {

/// Malformed JSON or a document that does not match either schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SpectralObject = std::variant<JacobiCoefficients, StepPhase>;

/// Parses either schema, told apart by their keys. Invariant violations in
/// well-formed documents surface as spectral_cs::ValidationError.
SpectralObject parse_spectral_object(const std::string& text);

std::string to_json(const JacobiCoefficients& coeffs);
std::string to_json(const StepPhase& phase);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

}  // namespace spectral_cs::cli
