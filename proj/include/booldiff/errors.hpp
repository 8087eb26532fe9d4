#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace booldiff {

/// Operand shapes or dimensions do not agree.
class DimensionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value lies outside the domain of an operation (subset outside [n],
/// index out of range, matrix size not a power of two).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size cap would be exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text input. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line),
        message_(what) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  /// The message without the line prefix.
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

}  // namespace booldiff
