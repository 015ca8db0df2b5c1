#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bscale {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text. `offset` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parameters or inputs outside the domain of an operation (m = 0, |m| != 1 for
/// the matrix representation, structured geometry in the divisor case, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotANodeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An operation was called with an input violating its stated precondition,
/// e.g. tracing a word that still contains a pinch.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace bscale
