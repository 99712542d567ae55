#pragma once

#include <stdexcept>
#include <string>

namespace dichromate {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidBasisError : public Error {
 public:
  using Error::Error;
};

class NotARealizationError : public Error {
 public:
  using Error::Error;
};

class InvalidPosetError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured cap or budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A precondition or internal invariant did not hold. The message names it.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dichromate
