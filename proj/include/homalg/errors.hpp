#pragma once

#include <stdexcept>
#include <string>

namespace homalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Scalars from two different fields met in one computation.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix that was expected to be invertible is not.
class SingularMap : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A flat map does not respect the relations of a quotient it should descend to.
class NonDescendingMap : public Error {
 public:
  using Error::Error;
};

/// A product left the constrained subspace of a dual algebra.
class NotClosed : public Error {
 public:
  using Error::Error;
};

/// A coring is not of the shape A⊗C with the standard left action, Δ and ε.
class NotStandardForm : public Error {
 public:
  using Error::Error;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownExample : public Error {
 public:
  explicit UnknownExample(const std::string& name)
      : Error("unknown example: " + name) {}
};

}  // namespace homalg
