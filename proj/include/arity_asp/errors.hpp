#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arity_asp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed program or CNF text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Malformed arity-set document.
class FormatError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class InvalidAritySet : public Error {
 public:
  using Error::Error;
};

class NotPositive : public Error {
 public:
  using Error::Error;
};

/// An exhaustive procedure would exceed its configured cap.
class OracleLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A decision procedure was handed a program outside the class it is sound for.
class EngineMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class AtomNotFresh : public Error {
 public:
  using Error::Error;
};

}  // namespace arity_asp
