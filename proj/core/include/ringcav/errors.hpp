#pragma once

#include <stdexcept>
#include <string>

namespace ringcav {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "our" failures from std failures can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A time lies outside the domain covered by a detuning schedule, or a
/// schedule does not cover the requested propagation window.
class ScheduleDomainError : public Error {
 public:
  using Error::Error;
};

/// Basis too large, too small for the requested protocol, or two states
/// living in different bases.
class BasisError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Non-physical input such as a negative linewidth.
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyTrajectoryError : public Error {
 public:
  using Error::Error;
};

/// Protocol requested for a configuration it does not apply to (odd N).
class ProtocolNotApplicable : public Error {
 public:
  using Error::Error;
};

/// Convergence gate tripped or another numerical invariant violated.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration. Carries the offending key path when known, and a
/// line/column pair for syntax errors (both zero when not applicable).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message, std::string key = {},
                       std::size_t line = 0, std::size_t column = 0);

  const std::string& key() const noexcept { return key_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string key_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ringcav
