#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksz/certificate.hpp"
#include "ksz/enumeration.hpp"
#include "ksz/order_registry.hpp"
#include "ksz/sign_tensor.hpp"

namespace ksz {

/// An m-dimensional light board: +1 = on, -1 = off, one switch per
/// coordinate hyperplane.
struct GameConfig {
  SignTensor lights;

  explicit GameConfig(SignTensor board);
  int arity() const { return lights.arity(); }
  std::int64_t total() const { return lights.total(); }
};

struct GameResult {
  std::int64_t imbalance = 0;  // G: best |on - off| over switch assignments
  std::int64_t on_lights = 0;  // (total - G) / 2, the matching minimum on count
  std::vector<std::vector<std::int8_t>> switches;
  bool exact = false;
};

/// Exact maximum imbalance: axes 1..m-1 enumerated (2^(n_1+...+n_{m-1}-1)
/// assignments), the last axis optimized analytically.
GameResult imbalance_exact(const GameConfig& config,
                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Achievable imbalance by alternating ascent; deterministic per seed.
GameResult imbalance_heuristic(const GameConfig& config, int restarts = 64,
                               std::uint64_t seed = 0);

/// Full enumeration over ALL axes with no analytic elimination. Exists to
/// cross-check imbalance_exact; guarded to m <= 3 and dims <= 4.
GameResult brute_oracle(const GameConfig& config);

/// (total - g) / 2; rejects parity violations, which signal a corrupted
/// result.
std::int64_t on_lights(std::int64_t total, std::int64_t g);

/// Lower bound (n^2 - g)/2 on the worst-case minimal on count of the n x n
/// game, valid when g upper-bounds the constructed board's imbalance.
std::int64_t r_from_g(std::int64_t n, std::int64_t g);

struct HadamardGameReport {
  std::vector<int> dims;
  GameResult result;                    // exact when within budget, else heuristic
  NormCertificate imbalance_upper;      // chained-tensor bound on G
  std::int64_t on_lights_lower = 0;     // implied by the upper bound
  double reference = 0.0;               // n^{(m+1)/2}-style envelope value
  double classical_bound = 0.0;         // classical constant * reference
  std::optional<double> asymptotic_lower;  // lower constant * reference (equal dims)

  std::string to_text() const;
};

/// Build the chained-Hadamard board for the given dimensions, solve it
/// (exactly when within budget), and certify the game quantities.
HadamardGameReport hadamard_game_report(const std::vector<int>& dims,
                                        const OrderRegistry& registry,
                                        std::uint64_t budget = kDefaultEnumerationBudget,
                                        int restarts = 64, std::uint64_t seed = 0);

}  // namespace ksz
