#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ksz/recipe.hpp"
#include "ksz/sign_matrix.hpp"

namespace ksz {

enum class RegistryMode {
  // Exactly the orders 4^i * 12^j (the default construction ladder).
  Strict412,
  // Kronecker/Sylvester closure of {1, 2} and the quadratic-residue
  // orders q+1 for primes q = 3 (mod 4).
  Extended,
};

struct RegistryEntry {
  std::int64_t order;
  Recipe recipe;
};

/// Sorted catalogue of achievable Hadamard orders up to a limit, each paired
/// with a construction recipe. Immutable after construction; realized
/// matrices are memoized and shared.
class OrderRegistry {
 public:
  OrderRegistry(RegistryMode mode, std::int64_t limit);

  RegistryMode mode() const { return mode_; }
  std::int64_t limit() const { return limit_; }
  const std::vector<RegistryEntry>& entries() const { return entries_; }
  std::vector<std::int64_t> orders() const;

  struct Nearest {
    std::int64_t order;
    Recipe recipe;
    double delta;  // order/n - 1, the realized approximation gap
  };

  // Smallest achievable order >= n. Throws RegistryExhausted when the limit
  // is too small to contain one.
  Nearest nearest(std::int64_t n) const;

  struct RatioPoint {
    std::int64_t order;
    std::int64_t next_order;
    double ratio;  // next_order / order
  };

  // Ratios of consecutive orders; requires at least two catalogue entries.
  std::vector<RatioPoint> consecutive_ratios() const;

  // Realize (and certify) the matrix for an achievable order. Results are
  // cached, so repeated lookups and shared sub-recipes are cheap.
  std::shared_ptr<const SignMatrix> realize_order(std::int64_t order) const;

 private:
  std::shared_ptr<const SignMatrix> realize_memo(const Recipe& recipe) const;

  RegistryMode mode_;
  std::int64_t limit_;
  std::vector<RegistryEntry> entries_;
  mutable std::mutex memo_mutex_;
  mutable std::map<const RecipeNode*, std::shared_ptr<const SignMatrix>> memo_;
};

const char* to_string(RegistryMode mode);

}  // namespace ksz
