#pragma once

#include <stdexcept>
#include <string>

namespace vstoch {

/// Base class for all library errors. Every error carries a stable
/// machine-readable code that also appears in CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed or inconsistent input (bad JSON shape, size mismatch, bad flag).
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& message)
      : Error("BAD_INPUT", message) {}
};

/// JSON that cannot be parsed at all.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error("PARSE_ERROR", message) {}
};

/// Operation defined only for odd n was called with even n.
class EvenNError : public Error {
 public:
  explicit EvenNError(int n)
      : Error("EVEN_N", "operation requires odd n, got n=" + std::to_string(n)) {}
};

/// The cyclic system produced a negative squared coefficient.
class InfeasibleXiError : public Error {
 public:
  InfeasibleXiError(int index, double value)
      : Error("INFEASIBLE_XI",
              "solved square x[" + std::to_string(index) + "] = " +
                  std::to_string(value) + " is negative"),
        index(index), value(value) {}
  int index;
  double value;
};

/// The weighted cyclic system produced a negative squared edge value.
class WeightedInfeasibleError : public Error {
 public:
  WeightedInfeasibleError(int index, double value)
      : Error("WEIGHTED_INFEASIBLE",
              "weighted edge square y[" + std::to_string(index) + "] = " +
                  std::to_string(value) + " is negative"),
        index(index), value(value) {}
  int index;
  double value;
};

/// A construction needs to divide by an off-diagonal entry that is zero.
class ZeroDivisorError : public Error {
 public:
  ZeroDivisorError(int row, int col)
      : Error("ZERO_DIVISOR",
              "entry (" + std::to_string(row) + "," + std::to_string(col) +
                  ") is zero but the construction divides by it"),
        row(row), col(col) {}
  int row;
  int col;
};

/// Input to nu() is not an isometry within the requested tolerance.
class IsometryViolationError : public Error {
 public:
  IsometryViolationError(double residual, int j, int k, const std::string& what_part)
      : Error("ISOMETRY_VIOLATION",
              "isometry violated: " + what_part + " residual " +
                  std::to_string(residual) + " at pair (" + std::to_string(j) +
                  "," + std::to_string(k) + ")"),
        residual(residual), j(j), k(k) {}
  double residual;
  int j;
  int k;
};

/// An iteration failed to converge within its sweep budget.
class NonConvergenceError : public Error {
 public:
  explicit NonConvergenceError(const std::string& message)
      : Error("NON_CONVERGENCE", message) {}
};

}  // namespace vstoch
