#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_io.hpp"
#include "spectral_cs/errors.hpp"
#include "spectral_cs/transforms.hpp"
#include "spectral_cs/weak_star.hpp"
#include "spectral_cs/weyl.hpp"

namespace spectral_cs::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown after the output has been written when the result itself signals
/// failure (Herglotz violation, failed verification, no separation).
class ResultFailure : public std::runtime_error {
 public:
  ResultFailure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

struct RunConfig {
  std::string verb;
  std::string input;
  std::string output;
  std::string curve;
  std::optional<std::size_t> truncation;
  double tol = kDiscreteSchrodingerTolerance;
  std::string grid;
  bool grid_given = false;
  std::string to;
  std::string source;
  std::size_t resolution = 10000;
  std::string convention = "weighted";
  bool paper_example = false;
};

// Verification tolerances.
constexpr double kWronskianTol = 1e-12;
constexpr double kRoundtripTol = 1e-10;
constexpr double kMEqualityTol = 1e-8;
constexpr double kAsymptoticY = 1e4;
constexpr double kAsymptoticTol = 1e-3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw IoError("error writing '" + path + "'");
}

SpectralObject load_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw CLI::ValidationError("input", "an input file is required");
  return parse_spectral_object(read_file(cfg.input));
}

std::vector<Complex> parse_grid(const std::string& text) {
  const auto fail = [&] {
    return CLI::ValidationError("--grid", "expected \"x0:x1:dx,y0:y1:dy\", got \"" + text + "\"");
  };
  const auto comma = text.find(',');
  if (text.empty() || comma == std::string::npos) throw fail();
  const auto parse_axis = [&](const std::string& axis) {
    std::array<double, 3> v{};
    std::size_t pos = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto next = k < 2 ? axis.find(':', pos) : axis.size();
      if (next == std::string::npos) throw fail();
      const std::string field = axis.substr(pos, next - pos);
      std::size_t used = 0;
      try {
        v[k] = std::stod(field, &used);
      } catch (const std::exception&) {
        throw fail();
      }
      if (used != field.size()) throw fail();
      pos = next + 1;
    }
    return v;
  };
  const auto x = parse_axis(text.substr(0, comma));
  const auto y = parse_axis(text.substr(comma + 1));
  return rectangular_grid(x[0], x[1], x[2], y[0], y[1], y[2]);
}

std::vector<Complex> grid_points(const RunConfig& cfg) {
  return cfg.grid_given ? parse_grid(cfg.grid) : default_grid();
}

PairingConvention parse_convention(const std::string& name) {
  return name == "unnormalized" ? PairingConvention::unnormalized : PairingConvention::weighted;
}

const char* convention_name(PairingConvention c) {
  return c == PairingConvention::weighted ? "weighted" : "unnormalized";
}

// ---------------------------------------------------------------------------

int cmd_convert(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SpectralObject input = load_input(cfg);
  std::string text;
  if (cfg.to == "canonical") {
    const auto* coeffs = std::get_if<JacobiCoefficients>(&input);
    if (!coeffs) throw SchemaError("--to canonical expects Jacobi coefficients {a, b, bound}");
    text = to_json(jacobi_to_canonical(*coeffs));
    // Turns of long operators can fall below the resolution of the
    // cumulative angles the JSON format carries.
    try {
      parse_spectral_object(text);
    } catch (const ValidationError& e) {
      err << "warning: written phase does not re-read exactly (" << e.what()
          << "); use the coefficient file for further computation\n";
    }
  } else {
    const auto* phase = std::get_if<StepPhase>(&input);
    if (!phase) throw SchemaError("--to jacobi expects a step phase {L, phi}");
    text = to_json(canonical_to_jacobi(*phase));
  }
  write_output(cfg.output, text, out);
  return kOk;
}

int cmd_mfunc(const RunConfig& cfg, std::ostream& out) {
  const SpectralObject input = load_input(cfg);
  const std::vector<Complex> zs = grid_points(cfg);

  const bool is_jacobi = std::holds_alternative<JacobiCoefficients>(input);
  const MSource source = cfg.source.empty()
                             ? (is_jacobi ? MSource::jacobi : MSource::canonical)
                             : (cfg.source == "jacobi" ? MSource::jacobi : MSource::canonical);

  MGrid grid;
  if (is_jacobi) {
    const auto& coeffs = std::get<JacobiCoefficients>(input);
    const std::size_t n_max = cfg.truncation.value_or(coeffs.size());
    if (source == MSource::jacobi) {
      grid = m_grid(coeffs, zs, n_max);
    } else {
      const auto extended = n_max > coeffs.size() ? coeffs.resized(n_max) : coeffs;
      grid = m_grid(jacobi_to_canonical(extended), zs, n_max);
    }
  } else {
    const auto& phase = std::get<StepPhase>(input);
    const std::size_t n_max = cfg.truncation.value_or(max_truncation(phase));
    if (source == MSource::canonical)
      grid = m_grid(phase, zs, n_max);
    else
      grid = m_grid(canonical_to_jacobi(phase), zs, n_max);
  }

  const char* source_name = source == MSource::jacobi ? "jacobi" : "canonical";
  std::ostringstream csv;
  csv << "re_z,im_z,re_m,im_m,N,source\n";
  for (const MPoint& p : grid.points)
    csv << format_double(p.z.real()) << ',' << format_double(p.z.imag()) << ','
        << format_double(p.m.real()) << ',' << format_double(p.m.imag()) << ',' << grid.truncation
        << ',' << source_name << '\n';
  const HerglotzReport report = herglotz_check(grid);
  csv << "# herglotz " << (report.passed ? "pass" : "FAIL")
      << " min_im_m=" << format_double(report.min_im_m)
      << " at z=" << format_double(report.worst_z.real()) << "+" << format_double(report.worst_z.imag())
      << "i tolerance=" << format_double(grid.tolerance) << '\n';
  write_output(cfg.output, csv.str(), out);

  if (!report.passed)
    throw ResultFailure(kNumericalFailure,
                        "Herglotz check failed: Im m = " + format_double(report.min_im_m) +
                            " at z = " + format_double(report.worst_z.real()) + "+" +
                            format_double(report.worst_z.imag()) + "i");
  return kOk;
}

// --- verify ----------------------------------------------------------------

class Checklist {
 public:
  void record(const std::string& name, bool ok, double value, double tol) {
    all_ok_ = all_ok_ && ok;
    text_ << (ok ? "PASS " : "FAIL ") << name << " value=" << format_double(value)
          << " tol=" << format_double(tol) << '\n';
  }
  bool all_ok() const { return all_ok_; }
  std::string str() const { return text_.str(); }

 private:
  std::ostringstream text_;
  bool all_ok_ = true;
};

void verify_jacobi(const JacobiCoefficients& coeffs, const RunConfig& cfg, Checklist& checks) {
  const FundamentalSolutions sol = fundamental_solutions(coeffs);
  double wronskian = 0.0;
  for (std::size_t n = 0; n <= coeffs.size(); ++n)
    wronskian = std::max(wronskian, std::abs(coeffs.a(n) * sol.wronskian(n) + 1.0));
  checks.record("wronskian a_n(c_n s_{n+1} - c_{n+1} s_n) = -1", wronskian <= kWronskianTol,
                wronskian, kWronskianTol);

  const StepPhase phase = jacobi_to_canonical(coeffs);
  checks.record("first step pi/2 on (0,1)", phase.is_jacobi_normalized(),
                std::abs(phase.breakpoint(1) - 1.0), 1e-12);

  double sin_identity = 0.0;
  for (std::size_t n = 1; n < phase.size(); ++n) {
    const double lhs = std::sqrt(phase.length(n) * phase.length(n + 1)) * phase.turn(n).sin;
    sin_identity = std::max(sin_identity, std::abs(lhs * -coeffs.a(n) - 1.0));
  }
  checks.record("sin identity R_n R_{n+1} sin(dphi) = -1/a_n", sin_identity <= kRoundtripTol,
                sin_identity, kRoundtripTol);

  const JacobiCoefficients back = canonical_to_jacobi(phase);
  double roundtrip = 0.0;
  for (std::size_t n = 0; n <= coeffs.size(); ++n)
    roundtrip = std::max(roundtrip, std::abs(back.a(n) - coeffs.a(n)));
  for (std::size_t n = 1; n <= coeffs.size(); ++n)
    roundtrip = std::max(roundtrip, std::abs(back.b(n) - coeffs.b(n)));
  checks.record("roundtrip jacobi -> canonical -> jacobi", roundtrip <= kRoundtripTol, roundtrip,
                kRoundtripTol);

  const std::size_t n_max = cfg.truncation.value_or(coeffs.size());
  const std::vector<Complex> zs = grid_points(cfg);
  const JacobiCoefficients extended = n_max > coeffs.size() ? coeffs.resized(n_max) : coeffs;
  const MGrid mj = m_grid(extended, zs, n_max);
  const MGrid mc = m_grid(n_max > coeffs.size() ? jacobi_to_canonical(extended) : phase, zs, n_max);
  double m_diff = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i)
    m_diff = std::max(m_diff, std::abs(mj.points[i].m - mc.points[i].m));
  checks.record("m_jacobi = m_canonical on grid", m_diff <= kMEqualityTol, m_diff, kMEqualityTol);

  const HerglotzReport hj = herglotz_check(mj);
  const HerglotzReport hc = herglotz_check(mc);
  checks.record("herglotz Im m > 0 (jacobi)", hj.passed, hj.min_im_m, 0.0);
  checks.record("herglotz Im m > 0 (canonical)", hc.passed, hc.min_im_m, 0.0);

  const Complex m_far = m_jacobi(extended, Complex(0.0, kAsymptoticY), n_max);
  checks.record("asymptotic Re m(iy) -> 0", std::abs(m_far.real()) <= kAsymptoticTol,
                std::abs(m_far.real()), kAsymptoticTol);
  checks.record("asymptotic y Im m(iy) -> 1",
                std::abs(kAsymptoticY * m_far.imag() - 1.0) <= kAsymptoticTol,
                std::abs(kAsymptoticY * m_far.imag() - 1.0), kAsymptoticTol);

  if (coeffs.is_discrete_schrodinger()) {
    double worst = 0.0;
    for (std::size_t n = 1; n < phase.size(); ++n)
      worst = std::max(worst, std::abs(ds_constraint_residual(phase, n)));
    checks.record("discrete Schrodinger constraint", worst <= cfg.tol, worst, cfg.tol);
    if (worst <= cfg.tol) {
      const auto b = ds_to_schrodinger(phase, cfg.tol);
      double diff = 0.0;
      for (std::size_t n = 1; n <= coeffs.size(); ++n)
        diff = std::max(diff, std::abs(b[n - 1] - coeffs.b(n)));
      checks.record("potential b_{n+1} = R_n R_{n+2} sin(phi_{n+2} - phi_n)",
                    diff <= kRoundtripTol, diff, kRoundtripTol);
    }
  }
}

void verify_phase(const StepPhase& phase, const RunConfig& cfg, Checklist& checks) {
  phase.require_jacobi_normalized();
  const JacobiCoefficients coeffs = canonical_to_jacobi(phase);
  const StepPhase back = jacobi_to_canonical(coeffs);
  double diff = 0.0;
  for (std::size_t n = 1; n <= phase.size(); ++n) {
    diff = std::max(diff, std::abs(back.length(n) - phase.length(n)) / phase.length(n));
    diff = std::max(diff, std::abs(back.angle(n) - phase.angle(n)));
  }
  checks.record("roundtrip canonical -> jacobi -> canonical", diff <= kRoundtripTol, diff,
                kRoundtripTol);
  verify_jacobi(coeffs, cfg, checks);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const SpectralObject input = load_input(cfg);
  Checklist checks;
  if (const auto* coeffs = std::get_if<JacobiCoefficients>(&input))
    verify_jacobi(*coeffs, cfg, checks);
  else
    verify_phase(std::get<StepPhase>(input), cfg, checks);
  write_output(cfg.output, checks.str(), out);
  if (!checks.all_ok()) throw ResultFailure(kInvariantViolation, "verification failed");
  return kOk;
}

// --- certify ---------------------------------------------------------------

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  StepPhase target = counterexample_phase();
  if (!cfg.paper_example) {
    const SpectralObject input = load_input(cfg);
    const auto* phase = std::get_if<StepPhase>(&input);
    if (!phase) throw SchemaError("certify expects a step phase {L, phi}");
    target = *phase;
  }

  const PairingConvention convention = parse_convention(cfg.convention);
  const PairingConvention other = convention == PairingConvention::weighted
                                      ? PairingConvention::unnormalized
                                      : PairingConvention::weighted;
  const NonDensityCertificate cert = nondensity_certificate(target, cfg.resolution, convention);
  const NonDensityCertificate alt = nondensity_certificate(target, cfg.resolution, other);

  nlohmann::json doc;
  doc["infimum"] = cert.infimum;
  doc["argmin_psi"] = cert.argmin_psi;
  doc["resolution"] = cert.resolution;
  doc["convention"] = convention_name(convention);
  doc["separated"] = cert.separated();
  nlohmann::json tests = nlohmann::json::array();
  for (const auto& f : cert.test_set)
    for (const auto& piece : f.pieces())
      tests.push_back({{"begin", piece.begin},
                       {"end", piece.end},
                       {"value", {piece.value(0), piece.value(1)}}});
  doc["test_set"] = tests;
  doc["alternate"] = {{"convention", convention_name(other)},
                      {"infimum", alt.infimum},
                      {"argmin_psi", alt.argmin_psi}};
  write_output(cfg.output, doc.dump(2) + "\n", out);

  if (!cfg.curve.empty()) {
    std::ostringstream csv;
    csv << "psi,discrepancy\n";
    for (const auto& [psi, d] : cert.curve) csv << format_double(psi) << ',' << format_double(d) << '\n';
    write_output(cfg.curve, csv.str(), out);
  }

  if (!cert.separated())
    throw ResultFailure(kInapplicable, "no separation found: sweep infimum is 0");
  return kOk;
}

void add_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "Input JSON file (Jacobi coefficients or step phase)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Jacobi operators, step-phase canonical systems and their m-functions",
               "spectral_cs"};
  app.require_subcommand(1);

  auto* convert = app.add_subcommand("convert", "Convert between Jacobi coefficients and a step phase");
  add_input(convert, cfg);
  convert->add_option("--to", cfg.to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"canonical", "jacobi"}));
  convert->add_option("-o", cfg.output, "Output path (default stdout)");

  auto* mfunc = app.add_subcommand("mfunc", "Evaluate the m-function on a grid (CSV)");
  add_input(mfunc, cfg);
  mfunc->add_option("--source", cfg.source, "Evaluator")->check(CLI::IsMember({"jacobi", "canonical"}));
  mfunc->add_option("--grid", cfg.grid, "Grid \"x0:x1:dx,y0:y1:dy\"");
  mfunc->add_option("-N", cfg.truncation, "Truncation length")->check(CLI::PositiveNumber);
  mfunc->add_option("-o", cfg.output, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite on an input");
  add_input(verify, cfg);
  verify->add_option("--grid", cfg.grid, "Grid \"x0:x1:dx,y0:y1:dy\"");
  verify->add_option("-N", cfg.truncation, "Truncation length")->check(CLI::PositiveNumber);
  verify->add_option("--tol", cfg.tol, "Discrete Schrodinger constraint tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("-o", cfg.output, "Report path (default stdout)");

  auto* certify = app.add_subcommand("certify", "Non-density certificate for a Jacobi phase");
  add_input(certify, cfg);
  certify->add_flag("--paper-example", cfg.paper_example, "Use the built-in counterexample phase");
  certify->add_option("--resolution", cfg.resolution, "Number of swept psi values")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  certify->add_option("--convention", cfg.convention, "Pairing convention")
      ->check(CLI::IsMember({"weighted", "unnormalized"}));
  certify->add_option("-o", cfg.output, "Certificate JSON path (default stdout)");
  certify->add_option("--curve", cfg.curve, "CSV path for the (psi, discrepancy) sweep");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    cfg.grid_given = app.get_subcommand_ptr("mfunc")->count("--grid") > 0 ||
                     app.get_subcommand_ptr("verify")->count("--grid") > 0;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (convert->parsed()) return cmd_convert(cfg, out, err);
    if (mfunc->parsed()) return cmd_mfunc(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_certify(cfg, out);
  } catch (const ResultFailure& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InapplicableError& e) {
    err << "error: " << e.what() << '\n';
    return kInapplicable;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    // ValidationError, DegenerateInputError, NotDiscreteSchrodingerError.
    err << "error: " << e.what() << '\n';
    return kInvariantViolation;
  }
}

}  // namespace spectral_cs::cli
