#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gencluster {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different semifield or algebra contexts.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (m <= 0, eps not +-1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class PoleAtPoint : public Error {
 public:
  using Error::Error;
};

/// Every coefficient of an exchange sum is the formal zero.
class EmptyExchangeSum : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be a polynomial (F-polynomial, ...) is not.
class NotPolynomial : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class SeparationMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string field, std::size_t line, const std::string& what)
      : Error(format(field, line, what)), field_(std::move(field)), line_(line) {}

  const std::string& field() const noexcept { return field_; }
  /// 1-based line in the source document, 0 when unknown.
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& field, std::size_t line, const std::string& what) {
    std::string out = "parse error";
    if (line != 0) out += " at line " + std::to_string(line);
    if (!field.empty()) out += " in field '" + field + "'";
    return out + ": " + what;
  }

  std::string field_;
  std::size_t line_;
};

}  // namespace gencluster
