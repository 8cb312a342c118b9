#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidcode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (index out of range,
/// strand-count mismatch, alphabet mismatch, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Handle reduction ran past its step ceiling. Never raised on correct code.
class StepLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " (column " + std::to_string(column) + ")"), column_(column) {}

  /// 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace braidcode
