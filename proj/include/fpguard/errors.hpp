#pragma once

#include <stdexcept>
#include <string>

namespace fpg {

// Raised when a value exceeds the largest finite float of the active format.
// The float model has no infinities or NaNs.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

// A guard shape the Boolean abstraction does not cover: equality tests and
// relations whose right-hand side is not the literal zero.
struct UnsupportedGuard : std::runtime_error {
  explicit UnsupportedGuard(const std::string& what)
      : std::runtime_error(what) {}
};

struct MissingRange : std::runtime_error {
  explicit MissingRange(const std::string& var)
      : std::runtime_error("no range given for variable '" + var + "'"),
        variable(var) {}
  std::string variable;
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what)
      : std::runtime_error(what) {}
};

struct TupleLimitExceeded : std::runtime_error {
  explicit TupleLimitExceeded(std::size_t cap)
      : std::runtime_error("conditional tuple count exceeds cap of " +
                           std::to_string(cap)) {}
};

}  // namespace fpg
