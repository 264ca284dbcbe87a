#include "ksz/berlekamp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "ksz/bounds.hpp"
#include "ksz/construct.hpp"
#include "ksz/errors.hpp"
#include "ksz/form_spec.hpp"

namespace ksz {

GameConfig::GameConfig(SignTensor board) : lights(std::move(board)) {
  if (lights.arity() < 2)
    throw std::invalid_argument("GameConfig: the switching game needs dimension >= 2");
}

namespace {

GameResult result_from(EnumerationResult r, std::int64_t total, bool exact) {
  GameResult out;
  out.imbalance = r.value;
  out.on_lights = (total - r.value) / 2;
  out.switches = std::move(r.witness);
  out.exact = exact;
  return out;
}

}  // namespace

GameResult imbalance_exact(const GameConfig& config, std::uint64_t budget) {
  EnumerationResult r = max_abs_sum_exact(config.lights, config.arity() - 1, budget);
  return result_from(std::move(r), config.total(), true);
}

GameResult imbalance_heuristic(const GameConfig& config, int restarts, std::uint64_t seed) {
  EnumerationResult r = max_abs_sum_ascent(config.lights, restarts, seed);
  return result_from(std::move(r), config.total(), false);
}

GameResult brute_oracle(const GameConfig& config) {
  const SignTensor& t = config.lights;
  const int m = t.arity();
  if (m > 3) throw std::invalid_argument("brute_oracle: guarded to m <= 3");
  int bit_count = 0;
  for (int d : t.dims()) {
    if (d > 4) throw std::invalid_argument("brute_oracle: guarded to dims <= 4");
    bit_count += d;
  }

  std::vector<std::vector<std::int8_t>> signs(static_cast<std::size_t>(m));
  std::int64_t best = -1;
  std::vector<std::vector<std::int8_t>> best_signs;
  for (std::uint64_t pattern = 0; pattern < (1ULL << bit_count); ++pattern) {
    int bit = 0;
    for (int k = 0; k < m; ++k) {
      signs[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(t.dims()[k]));
      for (int i = 0; i < t.dims()[k]; ++i)
        signs[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
            (pattern >> bit++) & 1 ? -1 : +1;
    }
    const std::int64_t value = std::llabs(evaluate_at(t, signs));
    if (value > best) {
      best = value;
      best_signs = signs;
    }
  }
  GameResult out;
  out.imbalance = best;
  out.on_lights = (config.total() - best) / 2;
  out.switches = std::move(best_signs);
  out.exact = true;
  return out;
}

std::int64_t on_lights(std::int64_t total, std::int64_t g) {
  if (g < 0 || g > total)
    throw std::invalid_argument("on_lights: imbalance must lie in [0, total]");
  if (((total - g) & 1) != 0)
    throw std::invalid_argument("on_lights: parity violation (G and total differ mod 2)");
  return (total - g) / 2;
}

std::int64_t r_from_g(std::int64_t n, std::int64_t g) { return on_lights(n * n, g); }

std::string HadamardGameReport::to_text() const {
  std::ostringstream out;
  out << "dims:";
  for (int d : dims) out << ' ' << d;
  out << "\nsolver: " << (result.exact ? "exact" : "heuristic") << "\n";
  out << "imbalance: " << result.imbalance << "\n";
  out << "on-lights: " << result.on_lights << "\n";
  for (std::size_t k = 0; k < result.switches.size(); ++k)
    out << "switches[" << k << "]: " << sign_string(result.switches[k]) << "\n";
  out << "imbalance-upper: " << format_double(imbalance_upper.value) << " ("
      << imbalance_upper.formula << ")\n";
  out << "on-lights-lower: " << on_lights_lower << "\n";
  out << "reference: " << format_double(reference) << "\n";
  out << "classical-bound: " << format_double(classical_bound) << "\n";
  if (asymptotic_lower)
    out << "asymptotic-lower: " << format_double(*asymptotic_lower) << "\n";
  return out.str();
}

HadamardGameReport hadamard_game_report(const std::vector<int>& dims,
                                        const OrderRegistry& registry, std::uint64_t budget,
                                        int restarts, std::uint64_t seed) {
  if (dims.size() < 2)
    throw std::invalid_argument("hadamard_game_report: need dimension >= 2");
  std::vector<Exponent> exponents(dims.size(), Exponent::infinity());
  KszConstruction built = construct_ksz(FormSpec(dims, std::move(exponents)), registry);

  GameConfig config(built.form.materialize());

  HadamardGameReport report;
  report.dims = dims;
  report.imbalance_upper = built.certificate;
  try {
    report.result = imbalance_exact(config, budget);
  } catch (const BudgetExceeded&) {
    report.result = imbalance_heuristic(config, restarts, seed);
  }

  // The implied minimum-on-lights bound: exact G when known, else the
  // certified upper bound on G.
  if (report.result.exact) {
    report.on_lights_lower = report.result.on_lights;
  } else {
    const double floor_g = std::min(static_cast<double>(config.total()),
                                    report.imbalance_upper.value);
    report.on_lights_lower = static_cast<std::int64_t>(
        std::ceil((static_cast<double>(config.total()) - floor_g) / 2.0));
  }

  report.reference = built.report.reference_bound;
  const int m = static_cast<int>(dims.size());
  report.classical_bound = classical_ksz_constant(m) * report.reference;
  const bool equal_dims = std::all_of(dims.begin(), dims.end(),
                                      [&](int d) { return d == dims.front(); });
  if (equal_dims) report.asymptotic_lower = asymptotic_lower_constant(m) * report.reference;
  return report;
}

}  // namespace ksz
