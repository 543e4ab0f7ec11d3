#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace magnus {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different fields (or alphabets) were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// An operation was applied outside its domain, e.g. m(0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded. Never a silent truncation.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A consistency check that must hold by construction failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace magnus
