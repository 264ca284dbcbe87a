#pragma once

#include <stdexcept>
#include <string>

namespace ksz {

// Enumeration would exceed the caller-supplied evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// No achievable order within the registry limit satisfies the request.
class RegistryExhausted : public std::runtime_error {
 public:
  explicit RegistryExhausted(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver failed to reach its tolerance.
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, double last_iterate)
      : std::runtime_error(what), last_iterate_(last_iterate) {}
  double last_iterate() const { return last_iterate_; }

 private:
  double last_iterate_;
};

}  // namespace ksz
