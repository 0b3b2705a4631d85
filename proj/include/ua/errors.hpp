#pragma once

#include <stdexcept>
#include <string>

namespace ua {

/// Input outside the domain of an operation (bad sums, invalid ranks, malformed data).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A request the library deliberately refuses, e.g. closure orders in characteristic 2.
class UnsupportedRegime : public std::runtime_error {
 public:
  explicit UnsupportedRegime(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ua
