#pragma once

#include <stdexcept>
#include <string>

namespace swarmloc {

/// Base class for every error raised by the library. The CLI maps any of
/// these to a nonzero exit code and a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invalid configuration value. `field()` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// API misuse: unknown labels or variant names, missing inputs, empty sets.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input outside a function's mathematical domain (zero distances, SNR <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Singular normal equations in an iterative solver.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver produced a non-finite iterate.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace swarmloc
