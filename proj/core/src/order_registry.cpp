#include "ksz/order_registry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ksz/errors.hpp"
#include "ksz/hadamard.hpp"

namespace ksz {

namespace {

// Sieve cap keeps the Extended closure table at a sane allocation size.
constexpr std::int64_t kExtendedLimitCap = 1LL << 24;

std::vector<RegistryEntry> build_strict(std::int64_t limit) {
  const Recipe h4 = recipe_sylvester(recipe_sylvester(recipe_base1()));
  const Recipe h12 = recipe_paley(11);

  // recipes[i][j] covers 4^i * 12^j with shared prefixes.
  std::map<std::pair<int, int>, Recipe> recipes;
  auto recipe_for = [&](auto&& self, int i, int j) -> Recipe {
    if (i == 0 && j == 0) return recipe_base1();
    auto it = recipes.find({i, j});
    if (it != recipes.end()) return it->second;
    Recipe r;
    if (j > 0) {
      Recipe parent = self(self, i, j - 1);
      r = (i == 0 && j == 1) ? h12 : recipe_kronecker(parent, h12);
    } else {
      Recipe parent = self(self, i - 1, 0);
      r = (i == 1) ? h4 : recipe_kronecker(parent, h4);
    }
    recipes.emplace(std::make_pair(i, j), r);
    return r;
  };

  std::vector<RegistryEntry> entries;
  for (std::int64_t p4 = 1, i = 0; p4 <= limit; p4 *= 4, ++i) {
    for (std::int64_t v = p4, j = 0; v <= limit; v *= 12, ++j) {
      entries.push_back({v, recipe_for(recipe_for, static_cast<int>(i), static_cast<int>(j))});
      if (v > limit / 12) break;
    }
    if (p4 > limit / 4) break;
  }
  std::sort(entries.begin(), entries.end(),
            [](const RegistryEntry& a, const RegistryEntry& b) { return a.order < b.order; });
  return entries;
}

std::vector<RegistryEntry> build_extended(std::int64_t limit) {
  if (limit > kExtendedLimitCap)
    throw std::invalid_argument("OrderRegistry: Extended mode limit capped at " +
                                std::to_string(kExtendedLimitCap));
  const std::size_t n = static_cast<std::size_t>(limit);

  // Primes q = 3 (mod 4) with q+1 <= limit.
  std::vector<std::uint8_t> composite(n + 1, 0);
  std::vector<std::int64_t> generators;  // generator orders, ascending
  if (limit >= 2) generators.push_back(2);
  for (std::size_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::size_t m = p * p; m <= n; m += p) composite[m] = 1;
    if (p % 4 == 3 && static_cast<std::int64_t>(p) + 1 <= limit)
      generators.push_back(static_cast<std::int64_t>(p) + 1);
  }
  std::sort(generators.begin(), generators.end());

  // Multiplicative closure sieve; gen_used records the first generator that
  // reached each order, which yields one canonical recipe per order.
  std::vector<std::int32_t> gen_used(n + 1, -1);
  gen_used[1] = -2;  // base
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const std::int64_t g = generators[gi];
    for (std::int64_t y = 1; y * g <= limit; ++y) {
      if (gen_used[static_cast<std::size_t>(y)] != -1 &&
          gen_used[static_cast<std::size_t>(y * g)] == -1)
        gen_used[static_cast<std::size_t>(y * g)] = static_cast<std::int32_t>(gi);
    }
  }

  std::map<std::int64_t, Recipe> recipes;
  auto recipe_for = [&](auto&& self, std::int64_t x) -> Recipe {
    if (x == 1) return recipe_base1();
    auto it = recipes.find(x);
    if (it != recipes.end()) return it->second;
    const std::int64_t g = generators[static_cast<std::size_t>(gen_used[static_cast<std::size_t>(x)])];
    Recipe gen_recipe = (g == 2) ? recipe_base2() : recipe_paley(g - 1);
    Recipe r;
    if (x == g) {
      r = gen_recipe;
    } else if (g == 2) {
      r = recipe_sylvester(self(self, x / 2));
    } else {
      r = recipe_kronecker(self(self, x / g), gen_recipe);
    }
    recipes.emplace(x, r);
    return r;
  };

  std::vector<RegistryEntry> entries;
  for (std::int64_t x = 1; x <= limit; ++x)
    if (gen_used[static_cast<std::size_t>(x)] != -1)
      entries.push_back({x, recipe_for(recipe_for, x)});
  return entries;
}

}  // namespace

OrderRegistry::OrderRegistry(RegistryMode mode, std::int64_t limit)
    : mode_(mode), limit_(limit) {
  if (limit < 1) throw std::invalid_argument("OrderRegistry: limit must be >= 1");
  entries_ = (mode == RegistryMode::Strict412) ? build_strict(limit) : build_extended(limit);
}

std::vector<std::int64_t> OrderRegistry::orders() const {
  std::vector<std::int64_t> out;
  out.reserve(entries_.size());
  for (const RegistryEntry& e : entries_) out.push_back(e.order);
  return out;
}

OrderRegistry::Nearest OrderRegistry::nearest(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("OrderRegistry::nearest: n must be >= 1");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const RegistryEntry& e, std::int64_t v) { return e.order < v; });
  if (it == entries_.end())
    throw RegistryExhausted("OrderRegistry: no achievable order >= " + std::to_string(n) +
                            " within limit " + std::to_string(limit_) +
                            "; rebuild the registry with a larger limit");
  return {it->order, it->recipe,
          static_cast<double>(it->order) / static_cast<double>(n) - 1.0};
}

std::vector<OrderRegistry::RatioPoint> OrderRegistry::consecutive_ratios() const {
  if (entries_.size() < 2)
    throw std::invalid_argument("OrderRegistry::consecutive_ratios: need at least 2 orders");
  std::vector<RatioPoint> out;
  out.reserve(entries_.size() - 1);
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    const std::int64_t a = entries_[i].order;
    const std::int64_t b = entries_[i + 1].order;
    out.push_back({a, b, static_cast<double>(b) / static_cast<double>(a)});
  }
  return out;
}

std::shared_ptr<const SignMatrix> OrderRegistry::realize_order(std::int64_t order) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), order,
                             [](const RegistryEntry& e, std::int64_t v) { return e.order < v; });
  if (it == entries_.end() || it->order != order)
    throw std::invalid_argument("OrderRegistry: order " + std::to_string(order) +
                                " is not achievable in this registry");
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return realize_memo(it->recipe);
}

std::shared_ptr<const SignMatrix> OrderRegistry::realize_memo(const Recipe& recipe) const {
  auto it = memo_.find(recipe.get());
  if (it != memo_.end()) return it->second;
  std::shared_ptr<const SignMatrix> result;
  switch (recipe->kind) {
    case RecipeNode::Kind::SylvesterDouble:
      result = std::make_shared<const SignMatrix>(sylvester_double(*realize_memo(recipe->left)));
      break;
    case RecipeNode::Kind::Kronecker:
      result = std::make_shared<const SignMatrix>(
          kronecker(*realize_memo(recipe->left), *realize_memo(recipe->right)));
      break;
    default:
      result = std::make_shared<const SignMatrix>(realize(recipe));
      break;
  }
  memo_.emplace(recipe.get(), result);
  return result;
}

const char* to_string(RegistryMode mode) {
  return mode == RegistryMode::Strict412 ? "strict412" : "extended";
}

}  // namespace ksz
