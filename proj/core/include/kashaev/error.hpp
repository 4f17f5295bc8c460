#pragma once

#include <stdexcept>
#include <string>

namespace kashaev {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Bad user input: malformed PD text, invalid colors, out-of-domain angles,
/// a precondition such as connectedness not met.
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

/// Two routes that must agree did not, or an exact step failed inside a
/// pipeline that guarantees it. Always a bug or a numerics failure, never
/// a property of the input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "consistency"; }
};

/// Laurent polynomial division that leaves a remainder.
class NonExactDivision : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "non_exact_division"; }
};

/// A rational function was evaluated where its denominator vanishes.
class DenominatorVanishes : public Error {
 public:
  DenominatorVanishes(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }
  const char* kind() const noexcept override { return "denominator_vanishes"; }

 private:
  double residual_;
};

}  // namespace kashaev
