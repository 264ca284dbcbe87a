#pragma once

#include <cstdint>
#include <vector>

#include "ksz/sign_tensor.hpp"

namespace ksz {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1ULL << 25;

struct EnumerationResult {
  std::int64_t value = 0;
  // One sign vector per tensor axis (caller axis order). The eliminated
  // axis carries the induced optimal signs (sign of each partial sum,
  // +1 on zeros). Re-evaluating the tensor at the witness gives `value`.
  std::vector<std::vector<std::int8_t>> witness;
};

/// Exact maximum of |sum_idx c(idx) prod_k x^(k)_{idx_k}| over all sign
/// vectors x^(k).
///
/// The eliminated axis is optimized analytically (the optimum for it is the
/// sign pattern of the partial sums), the remaining axes are enumerated in
/// Gray-code order with incremental partial-sum updates, and sign symmetry
/// pins the first enumerated coordinate to +1. Cost is
/// 2^(sum of non-eliminated dims - 1) assignments; exceeding `budget` throws
/// BudgetExceeded. Ties are broken toward the lexicographically smallest
/// witness (+1 before -1), so the result does not depend on the enumeration
/// or partition order.
EnumerationResult max_abs_sum_exact(const SignTensor& tensor, int eliminated_axis,
                                    std::uint64_t budget);

/// Alternating coordinate ascent: each axis in turn is set to the sign
/// pattern of its partial sums (+1 on zeros) until a fixed point, best value
/// over `restarts` starts (first start all +1, the rest seeded
/// deterministically). The objective never decreases within a run.
EnumerationResult max_abs_sum_ascent(const SignTensor& tensor, int restarts,
                                     std::uint64_t seed);

}  // namespace ksz
