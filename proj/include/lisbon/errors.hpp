#pragma once

#include <stdexcept>
#include <string>

namespace lisbon {

// Refusal conditions named by the operation contracts. Callers that have a
// fallback path (contour instead of residue, relaxed accuracy) catch these.

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NearDiscriminant : std::runtime_error {
  explicit NearDiscriminant(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lisbon
