#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiholes {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The cone spanned by the generators contains a line.
class NotPointed : public Error {
 public:
  NotPointed() : Error("generators span a cone that is not pointed") {}
  using Error::Error;
};

class UnboundedRegion : public Error {
 public:
  using Error::Error;
};

/// A checked machine-integer fast path would have overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Frobenius numbers need coprime generators.
class GcdNotOne : public Error {
 public:
  GcdNotOne() : Error("generators are not coprime") {}
  using Error::Error;
};

class MultiRow : public Error {
 public:
  MultiRow() : Error("Frobenius numbers need a one-row matrix") {}
  using Error::Error;
};

/// Malformed matrix text; line and column are 1-based (column 0: whole line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : std::string()) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

}  // namespace semiholes
