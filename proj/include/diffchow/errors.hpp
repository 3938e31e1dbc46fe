#pragma once

#include <stdexcept>
#include <string>

namespace diffchow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad shapes, unknown variables, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A characteristic-set computation produced a nonzero element of the coefficient field.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// An elimination step produced the unit ideal.
class UnitIdeal : public Error {
 public:
  using Error::Error;
};

/// A structural property that must hold for a Chow form failed to hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed command line or session file (unknown statement, bad flag value, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace diffchow
