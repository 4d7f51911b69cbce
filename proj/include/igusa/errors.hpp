#pragma once

#include <stdexcept>
#include <string>

namespace igusa {

// Exit codes used by the command line tool. Every exception below maps to one.
enum class ExitCode : int {
  ok = 0,
  usage = 1,
  schema = 2,
  guard = 3,
  divergence = 4,
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, ExitCode code = ExitCode::usage)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

// Malformed input: bad JSON, unknown fields, violated type invariants.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(what, ExitCode::schema) {}
};

// Enumeration would exceed the configured evaluation budget.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, double required)
      : Error(what, ExitCode::guard), required_(required) {}
  double required() const noexcept { return required_; }

 private:
  double required_;
};

// Divergent integral or evaluation at a pole.
class DivergenceError : public Error {
 public:
  explicit DivergenceError(const std::string& what) : Error(what, ExitCode::divergence) {}
};

// A self-check failed. Indicates a bug rather than bad input.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what, ExitCode::internal) {}
};

// Invalid arguments to an operation (wrong domain, mismatched variables, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what, ExitCode::usage) {}
};

}  // namespace igusa
