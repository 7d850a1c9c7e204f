#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

enum class ErrorKind {
  domain,       // precondition on inputs violated
  range,        // result not representable (overflow, order too large)
  convergence,  // an iterative or truncated computation failed to certify
  consistency,  // an internal invariant broke; indicates a bug
};

/// Base class of every error raised by the library. Carries a kind so that
/// front ends can map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorKind::range, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::convergence, what) {}
};

class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what)
      : Error(ErrorKind::consistency, what) {}
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace dunkl
