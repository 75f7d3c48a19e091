#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace premetric {

/// Mismatched chart, degree, twist or scalar mode between operands.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A precondition on a value (zero impedance, singular matrix, ...) failed.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax or semantic error in form-expression text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace premetric
