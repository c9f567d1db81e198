#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commbench {

/// Base class for all commbench errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Precondition violation (bad sizes, out-of-range indices, invalid parameters).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Iterative method failed to converge; carries the last residual.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& msg, double residual)
      : Error(msg + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

/// A quality metric is undefined for the given partition (e.g. fewer than
/// two communities). Callers that build reports catch this and record NA.
class MetricUndefined : public Error {
 public:
  using Error::Error;
};

}  // namespace commbench
