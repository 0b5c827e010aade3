#pragma once

#include <stdexcept>
#include <string>

namespace eqrr {

// Failure categories map one-to-one onto CLI exit codes (1, 2, 3).
enum class ErrorKind { usage, validation, consistency };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed or inconsistent input data: bad tables, failing generating
/// vectors, unknown divisor sites, schema violations.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

/// A mathematical identity that must hold did not. Either the input violates
/// a hypothesis the caller vouched for, or there is a bug.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what)
      : Error(ErrorKind::consistency, what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

}  // namespace eqrr
