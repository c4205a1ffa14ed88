#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace embhom {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A structural invariant (d^2 = 0, group closure, ...) failed. The
// certificate names the offending object so it can be reproduced.
class InvariantViolation : public Error {
 public:
  InvariantViolation(const std::string& what, std::string certificate)
      : Error(what), certificate_(std::move(certificate)) {}

  const std::string& certificate() const noexcept { return certificate_; }

 private:
  std::string certificate_;
};

// Malformed input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace embhom
