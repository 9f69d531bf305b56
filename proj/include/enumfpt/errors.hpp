#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace enumfpt {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a domain invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class UnboundedInstance : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class DisconnectedTerminals : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

// Oracle refused an instance whose search space exceeds its guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// An adapter broke one of the scheme contracts. These indicate bugs in the
// adapter, never in the input.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class MeasureViolation : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

class MembershipContradiction : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

class GrowContractViolation : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

}  // namespace enumfpt
