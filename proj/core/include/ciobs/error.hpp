#pragma once

#include <stdexcept>
#include <string>

namespace ciobs {

/// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad syntax, unknown variable, ring mismatch.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A stated identity or certificate did not hold. `residual` is the printed
/// witness (a nonzero normal form, a nonzero defining-equation residual, ...).
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::string residual)
      : Error(what + (residual.empty() ? "" : ": residual " + residual)),
        residual_(std::move(residual)) {}

  const std::string& residual() const noexcept { return residual_; }

 private:
  std::string residual_;
};

/// The field's characteristic is not allowed for this operation (char 2 for
/// anything touching the sphere model, finite fields for random changes).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ciobs
