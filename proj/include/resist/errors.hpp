#pragma once

#include <stdexcept>
#include <string>

namespace resist {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, edge lists, family specs, rationals).
struct ParseError : Error {
  using Error::Error;
};

// An operation was called outside its stated domain (disconnected graph,
// invalid split, non-regular graph where regularity is required, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// Exact inversion hit a singular matrix. Carries the rank found.
struct SingularMatrixError : Error {
  int rank;
  SingularMatrixError(const std::string& what, int rank_) : Error(what), rank(rank_) {}
};

// The iterative eigensolver failed to converge (never ignored silently).
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace resist
