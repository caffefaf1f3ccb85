#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gspgate {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input lies outside the mathematical domain of a formula (γ ≤ 0, ε ≤ 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// GSP and GSEE depths were given in different units.
class UnitMismatchError : public Error {
 public:
  using Error::Error;
};

/// The small-depth regime was requested but the GSP/GSEE depth ratio is too large.
class RegimeError : public Error {
 public:
  RegimeError(const std::string& what, double measured_ratio)
      : Error(what), measured_ratio_(measured_ratio) {}
  double measured_ratio() const { return measured_ratio_; }

 private:
  double measured_ratio_;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Dimension or qubit count above the configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A spectral filter cannot act on a state with no ground-space component.
class ZeroProjectionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gspgate
