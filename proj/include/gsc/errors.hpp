#pragma once

#include <stdexcept>
#include <string>

namespace gsc {

// Raised when a caller violates a documented precondition (bad partition,
// wrong field, divisibility gate, ...).  CLI maps this to exit code 1.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal invariant that the construction guarantees fails
// to hold at runtime, or when a cross-check between two independent
// computations disagrees.  CLI maps this to exit code 2.
struct CheckError : std::runtime_error {
  explicit CheckError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an enumeration would exceed its explicit work budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw CheckError(msg);
}

}  // namespace gsc
