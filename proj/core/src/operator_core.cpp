#include "spectral_cs/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "high_precision.hpp"
#include "spectral_cs/errors.hpp"

namespace spectral_cs {

using detail::HighReal;

namespace {

std::string index_message(const char* what, std::size_t n, std::size_t lo, std::size_t hi) {
  return std::string(what) + " index " + std::to_string(n) + " outside [" + std::to_string(lo) +
         ", " + std::to_string(hi) + "]";
}

}  // namespace

JacobiCoefficients::JacobiCoefficients(std::vector<double> a, std::vector<double> b,
                                       double bound)
    : a_(std::move(a)), b_(std::move(b)), bound_(bound) {
  if (!std::isfinite(bound_) || bound_ <= 0.0)
    throw ValidationError("bounded", "declared bound must be finite and positive");
  if (b_.empty()) throw ValidationError("length", "at least one diagonal entry b_1 is required");
  if (a_.size() != b_.size() + 1)
    throw ValidationError("length", "expected " + std::to_string(b_.size() + 1) +
                                        " off-diagonal entries a_0..a_N, got " +
                                        std::to_string(a_.size()));
  if (a_[0] != -1.0) throw ValidationError("a_0 = -1", "boundary coefficient a_0 must be -1");
  for (std::size_t n = 0; n < a_.size(); ++n) {
    if (!std::isfinite(a_[n]) || !(a_[n] < 0.0))
      throw ValidationError("a_n < 0", "a_" + std::to_string(n) + " is not negative");
    if (std::abs(a_[n]) > bound_)
      throw ValidationError("bounded", "|a_" + std::to_string(n) + "| exceeds the declared bound");
  }
  for (std::size_t n = 0; n < b_.size(); ++n) {
    if (!std::isfinite(b_[n]))
      throw ValidationError("b_n real", "b_" + std::to_string(n + 1) + " is not finite");
    if (std::abs(b_[n]) > bound_)
      throw ValidationError("bounded",
                            "|b_" + std::to_string(n + 1) + "| exceeds the declared bound");
  }
}

JacobiCoefficients JacobiCoefficients::discrete_schrodinger(std::vector<double> b, double bound) {
  std::vector<double> a(b.size() + 1, -1.0);
  return {std::move(a), std::move(b), bound};
}

JacobiCoefficients JacobiCoefficients::free(std::size_t n_max) {
  return discrete_schrodinger(std::vector<double>(n_max, 0.0), 1.0);
}

double JacobiCoefficients::a(std::size_t n) const {
  if (n >= a_.size()) throw RangeError(index_message("a", n, 0, size()));
  return a_[n];
}

double JacobiCoefficients::b(std::size_t n) const {
  if (n < 1 || n > b_.size()) throw RangeError(index_message("b", n, 1, size()));
  return b_[n - 1];
}

double JacobiCoefficients::a_extended(std::size_t n) const noexcept {
  return n < a_.size() ? a_[n] : a_.back();
}

double JacobiCoefficients::b_extended(std::size_t n) const {
  if (n < 1) throw RangeError(index_message("b", n, 1, size()));
  return n <= b_.size() ? b_[n - 1] : b_.back();
}

JacobiCoefficients JacobiCoefficients::resized(std::size_t n_max) const {
  std::vector<double> a(n_max + 1);
  std::vector<double> b(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) a[n] = a_extended(n);
  for (std::size_t n = 1; n <= n_max; ++n) b[n - 1] = b_extended(n);
  return {std::move(a), std::move(b), bound_};
}

bool JacobiCoefficients::is_discrete_schrodinger() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](double v) { return v == -1.0; });
}

TransferMatrix transfer_matrix(const JacobiCoefficients& coeffs, std::size_t n, Complex z) {
  if (n < 1 || n > coeffs.size())
    throw RangeError(index_message("transfer matrix", n, 1, coeffs.size()));
  const double a_prev = coeffs.a(n - 1);
  const double a_n = coeffs.a(n);
  TransferMatrix m;
  m << 0.0, 1.0, -a_prev / a_n, (z - coeffs.b(n)) / a_n;
  return m;
}

// ---------------------------------------------------------------------------

FundamentalSolutions::FundamentalSolutions(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

FundamentalSolutions::FundamentalSolutions(std::span<const double> c, std::span<const double> s) {
  if (c.size() != s.size() || c.size() < 2)
    throw ValidationError("length", "c and s must have equal length >= 2");
  if (c[0] != 1.0 || c[1] != 0.0 || s[0] != 0.0 || s[1] != 1.0)
    throw ValidationError("initial conditions", "expected c_0 = s_1 = 1 and c_1 = s_0 = 0");
  auto impl = std::make_shared<Impl>();
  impl->c.assign(c.begin(), c.end());
  impl->s.assign(s.begin(), s.end());
  impl_ = std::move(impl);
}

std::size_t FundamentalSolutions::last_index() const noexcept { return impl_->c.size() - 1; }

double FundamentalSolutions::c(std::size_t n) const {
  if (n > last_index()) throw RangeError(index_message("c", n, 0, last_index()));
  return static_cast<double>(impl_->c[n]);
}

double FundamentalSolutions::s(std::size_t n) const {
  if (n > last_index()) throw RangeError(index_message("s", n, 0, last_index()));
  return static_cast<double>(impl_->s[n]);
}

double FundamentalSolutions::wronskian(std::size_t n) const {
  if (n + 1 > last_index()) throw RangeError(index_message("wronskian", n, 0, last_index() - 1));
  const auto& c = impl_->c;
  const auto& s = impl_->s;
  return static_cast<double>(c[n] * s[n + 1] - c[n + 1] * s[n]);
}

double FundamentalSolutions::skip_wronskian(std::size_t n) const {
  if (n + 2 > last_index())
    throw RangeError(index_message("skip wronskian", n, 0, last_index() - 2));
  const auto& c = impl_->c;
  const auto& s = impl_->s;
  return static_cast<double>(c[n] * s[n + 2] - c[n + 2] * s[n]);
}

double FundamentalSolutions::inner_product(std::size_t n) const {
  if (n + 1 > last_index())
    throw RangeError(index_message("inner product", n, 0, last_index() - 1));
  const auto& c = impl_->c;
  const auto& s = impl_->s;
  return static_cast<double>(c[n] * c[n + 1] + s[n] * s[n + 1]);
}

double FundamentalSolutions::radius_squared(std::size_t n) const {
  if (n > last_index()) throw RangeError(index_message("radius", n, 0, last_index()));
  return static_cast<double>(impl_->c[n] * impl_->c[n] + impl_->s[n] * impl_->s[n]);
}

std::vector<double> FundamentalSolutions::c_values() const {
  std::vector<double> out;
  out.reserve(impl_->c.size());
  for (const auto& v : impl_->c) out.push_back(static_cast<double>(v));
  return out;
}

std::vector<double> FundamentalSolutions::s_values() const {
  std::vector<double> out;
  out.reserve(impl_->s.size());
  for (const auto& v : impl_->s) out.push_back(static_cast<double>(v));
  return out;
}

FundamentalSolutions fundamental_solutions(const JacobiCoefficients& coeffs) {
  const std::size_t n_max = coeffs.size();
  auto impl = std::make_shared<FundamentalSolutions::Impl>();
  auto& c = impl->c;
  auto& s = impl->s;
  c.resize(n_max + 2);
  s.resize(n_max + 2);
  c[0] = 1;
  c[1] = 0;
  s[0] = 0;
  s[1] = 1;

  int max_exponent = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const HighReal a_prev = coeffs.a(n - 1);
    const HighReal a_n = coeffs.a(n);
    const HighReal b_n = coeffs.b(n);
    c[n + 1] = -(a_prev * c[n - 1] + b_n * c[n]) / a_n;
    s[n + 1] = -(a_prev * s[n - 1] + b_n * s[n]) / a_n;

    int e_c = 0;
    int e_s = 0;
    boost::multiprecision::frexp(c[n + 1], &e_c);
    boost::multiprecision::frexp(s[n + 1], &e_s);
    max_exponent = std::max({max_exponent, e_c, e_s});
  }

  // Cancellation in c_n s_{n+1} - c_{n+1} s_n costs about 2 log10 |(c, s)| digits.
  const double digits_lost = 2.0 * max_exponent * 0.30102999566398120;
  if (digits_lost > detail::kHighDigitBudget)
    throw NumericalError("zero-energy solutions grow by 1e" +
                         std::to_string(static_cast<int>(digits_lost / 2)) +
                         ", beyond the extended-precision budget");
  return FundamentalSolutions(std::move(impl));
}

double recover_a(const FundamentalSolutions& sol, std::size_t n) {
  if (n + 1 > sol.last_index())
    throw RangeError(index_message("recover_a", n, 0, sol.last_index() - 1));
  const auto& c = sol.impl().c;
  const auto& s = sol.impl().s;
  const HighReal w = c[n] * s[n + 1] - c[n + 1] * s[n];
  if (w == 0) throw DegenerateInputError("vanishing Wronskian at n = " + std::to_string(n));
  return static_cast<double>(HighReal(-1) / w);
}

double recover_b(const FundamentalSolutions& sol, std::span<const double> a, std::size_t n) {
  if (n + 2 > sol.last_index())
    throw RangeError(index_message("recover_b", n, 0, sol.last_index() - 2));
  if (n + 1 >= a.size())
    throw RangeError(index_message("recover_b (coefficient a)", n + 1, 0, a.size() - 1));
  const auto& c = sol.impl().c;
  const auto& s = sol.impl().s;
  const HighReal skip = c[n] * s[n + 2] - c[n + 2] * s[n];
  return static_cast<double>(HighReal(a[n]) * HighReal(a[n + 1]) * skip);
}

}  // namespace spectral_cs
