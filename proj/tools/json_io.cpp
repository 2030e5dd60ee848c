#include "json_io.hpp"

#include <array>
#include <charconv>
#include <vector>

#include <json.hpp>

namespace spectral_cs::cli {

using nlohmann::json;

namespace {

std::vector<double> number_array(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string("missing key \"") + key + "\"");
  if (!it->is_array()) throw SchemaError(std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number()) throw SchemaError(std::string("\"") + key + "\" must hold numbers only");
    out.push_back(v.get<double>());
  }
  return out;
}

void reject_unknown_keys(const json& doc, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw SchemaError("unexpected key \"" + key + "\"");
  }
}

// nlohmann writes doubles in shortest round-trip form already; this keeps the
// CSV writer on the same footing.
std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

SpectralObject parse_spectral_object(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("top-level JSON value must be an object");

  if (doc.contains("a") || doc.contains("b")) {
    reject_unknown_keys(doc, {"a", "b", "bound"});
    const auto bound = doc.find("bound");
    if (bound == doc.end() || !bound->is_number()) throw SchemaError("missing numeric \"bound\"");
    return JacobiCoefficients(number_array(doc, "a"), number_array(doc, "b"),
                              bound->get<double>());
  }
  if (doc.contains("L") || doc.contains("phi")) {
    reject_unknown_keys(doc, {"L", "phi"});
    const auto breakpoints = number_array(doc, "L");
    const auto angles = number_array(doc, "phi");
    return StepPhase::from_breakpoints(breakpoints, angles);
  }
  throw SchemaError("expected Jacobi coefficients {a, b, bound} or a step phase {L, phi}");
}

std::string to_json(const JacobiCoefficients& coeffs) {
  json doc;
  doc["a"] = std::vector<double>(coeffs.a_values().begin(), coeffs.a_values().end());
  doc["b"] = std::vector<double>(coeffs.b_values().begin(), coeffs.b_values().end());
  doc["bound"] = coeffs.bound();
  return dump(doc);
}

std::string to_json(const StepPhase& phase) {
  json doc;
  const auto breakpoints = phase.breakpoints();
  doc["L"] = std::vector<double>(breakpoints.begin() + 1, breakpoints.end());
  doc["phi"] = std::vector<double>(phase.angles().begin(), phase.angles().end());
  return dump(doc);
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace spectral_cs::cli
