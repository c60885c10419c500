#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rho {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed or inconsistent input (dimensions, non-finite entries, asymmetry).
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

/// A request exceeding a configured size limit (word length, truncation window).
class CapacityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "capacity"; }
};

/// A resolvent was evaluated at (numerically) singular point.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::vector<std::complex<double>> point)
      : Error(what), point_(std::move(point)) {}
  const char* kind() const noexcept override { return "pole"; }
  const std::vector<std::complex<double>>& point() const noexcept { return point_; }

 private:
  std::vector<std::complex<double>> point_;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "evaluation"; }
};

/// Broken internal invariant, e.g. an inverted bisection bracket.
class InternalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal"; }
};

}  // namespace rho
