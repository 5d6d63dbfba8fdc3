#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace closys {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed implication or set-cover text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An implication violating premise/conclusion invariants.
class InvalidImplication : public Error {
 public:
  using Error::Error;
};

/// The input does not satisfy the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotStandardError : public PreconditionError {
 public:
  NotStandardError(const std::string& what, std::vector<std::size_t> violations)
      : PreconditionError(what), violations_(std::move(violations)) {}

  /// Attributes i for which phi({i}) \ {i} is not closed.
  const std::vector<std::size_t>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::size_t> violations_;
};

class NotRegularError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Raised by operations that are only defined for systems without D-cycles.
class DCycleError : public PreconditionError {
 public:
  DCycleError(const std::string& what, std::vector<std::size_t> cycle)
      : PreconditionError(what), cycle_(std::move(cycle)) {}

  /// Closed walk a0, a1, ..., a0 through the relation.
  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

/// Exponential search or enumeration refused because the input is too large.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace closys
