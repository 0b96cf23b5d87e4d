#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (scalars, points, group names, decorations).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        message_(message),
        position_(position) {}

  /// Message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// Input is well formed but outside what the mathematics supports:
/// unsupported group or feature, invalid rank, non-dominant point, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

/// An enumeration would exceed the configured point budget.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// A consistency check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitkit
