#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral_cs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index lies outside the stored range of a sequence.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of an operation
/// (e.g. a spectral parameter with Im z <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A value violates a named structural invariant.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& detail);

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Input that cannot come from valid Jacobi data (e.g. a vanishing Wronskian).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A step phase fails the discrete Schrodinger constraint.
class NotDiscreteSchrodingerError : public Error {
 public:
  NotDiscreteSchrodingerError(double worst_residual, std::size_t index);

  double worst_residual() const noexcept { return worst_residual_; }
  std::size_t index() const noexcept { return index_; }

 private:
  double worst_residual_;
  std::size_t index_;
};

/// An operation does not apply to the given input.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// Floating-point breakdown: overflow, a zero pivot, exhausted precision.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace spectral_cs
