#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ksz/berlekamp.hpp"
#include "ksz/bounds.hpp"
#include "ksz/chained_form.hpp"
#include "ksz/errors.hpp"
#include "test_helpers.hpp"

using namespace ksz;
using ksz_test::random_tensor;

namespace {

const OrderRegistry& registry() {
  static OrderRegistry reg(RegistryMode::Extended, 64);
  return reg;
}

GameConfig hadamard_config(std::int64_t order) {
  return GameConfig(tensor_from_matrix(*registry().realize_order(order)));
}

SignTensor all_on(const std::vector<int>& dims) { return SignTensor(dims); }

}  // namespace

TEST_CASE("single light") {
  GameConfig cfg{SignTensor({1, 1})};
  GameResult r = imbalance_exact(cfg);
  CHECK(r.imbalance == 1);
  CHECK(r.on_lights == 0);
  CHECK(r.exact);
}

TEST_CASE("monochrome boards are already maximally unbalanced") {
  GameResult r = imbalance_exact(GameConfig{all_on({2, 2})});
  CHECK(r.imbalance == 4);
  CHECK(r.on_lights == 0);

  GameResult cube = imbalance_heuristic(GameConfig{all_on({2, 2, 2})}, 4, 0);
  CHECK(cube.imbalance == 8);
}

TEST_CASE("order-4 Hadamard board") {
  GameResult r = imbalance_exact(hadamard_config(4));
  CHECK(r.imbalance == 8);
  CHECK(r.on_lights == 4);
  CHECK(std::llabs(evaluate_at(hadamard_config(4).lights, r.switches)) == 8);
}

TEST_CASE("oracle equivalence on every 2x2 board") {
  for (int pattern = 0; pattern < 16; ++pattern) {
    SignTensor t({2, 2});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        t.set_sign_at(std::vector<int>{i, j}, (pattern >> (2 * i + j)) & 1 ? +1 : -1);
    GameConfig cfg{t};
    CHECK(imbalance_exact(cfg).imbalance == brute_oracle(cfg).imbalance);
  }
}

TEST_CASE("oracle equivalence on random boards") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    GameConfig a{random_tensor(rng, {3, 3})};
    CHECK(imbalance_exact(a).imbalance == brute_oracle(a).imbalance);
    GameConfig b{random_tensor(rng, {4, 4})};
    CHECK(imbalance_exact(b).imbalance == brute_oracle(b).imbalance);
  }
  for (int trial = 0; trial < 20; ++trial) {
    GameConfig c{random_tensor(rng, {2, 2, 2})};
    CHECK(imbalance_exact(c).imbalance == brute_oracle(c).imbalance);
  }
}

TEST_CASE("brute oracle guards its size") {
  CHECK_THROWS_AS(brute_oracle(GameConfig{all_on({5, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(brute_oracle(GameConfig{all_on({2, 2, 2, 2})}), std::invalid_argument);
}

TEST_CASE("heuristic fixed point on monochrome boards") {
  GameResult r = imbalance_heuristic(GameConfig{all_on({10, 10})}, 1, 0);
  CHECK(r.imbalance == 100);
  CHECK(!r.exact);
}

TEST_CASE("heuristic never beats the exact solver and always replays") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    SignTensor t = random_tensor(rng, {5, 6});
    GameConfig cfg{t};
    GameResult heur = imbalance_heuristic(cfg, 8, trial);
    GameResult exact = imbalance_exact(cfg);
    CHECK(heur.imbalance <= exact.imbalance);
    CHECK(std::llabs(evaluate_at(t, heur.switches)) == heur.imbalance);
    CHECK(std::llabs(evaluate_at(t, exact.switches)) == exact.imbalance);
  }
}

TEST_CASE("heuristic determinism per seed") {
  std::mt19937_64 rng(43);
  SignTensor t = random_tensor(rng, {7, 7});
  GameConfig cfg{t};
  GameResult a = imbalance_heuristic(cfg, 16, 5);
  GameResult b = imbalance_heuristic(cfg, 16, 5);
  CHECK(a.imbalance == b.imbalance);
  CHECK(a.switches == b.switches);
}

TEST_CASE("parity and range invariants") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    std::vector<int> dims;
    for (int k = 0; k < m; ++k) dims.push_back(1 + static_cast<int>(rng() % 4));
    GameConfig cfg{random_tensor(rng, dims)};
    GameResult r = imbalance_exact(cfg);
    CHECK(r.imbalance >= 0);
    CHECK(r.imbalance <= cfg.total());
    CHECK(((cfg.total() - r.imbalance) % 2) == 0);
    CHECK(r.on_lights == (cfg.total() - r.imbalance) / 2);
  }
}

TEST_CASE("negating one slice never changes the imbalance") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    std::vector<int> dims;
    for (int k = 0; k < m; ++k) dims.push_back(2 + static_cast<int>(rng() % 3));
    SignTensor t = random_tensor(rng, dims);
    const std::int64_t before = imbalance_exact(GameConfig{t}).imbalance;
    const int axis = static_cast<int>(rng() % m);
    const int index = static_cast<int>(rng() % dims[static_cast<std::size_t>(axis)]);
    t.negate_slice(axis, index);
    CHECK(imbalance_exact(GameConfig{t}).imbalance == before);
  }
}

TEST_CASE("Hadamard boards never exceed the chained-tensor ceiling") {
  for (std::int64_t order : {4LL, 8LL, 12LL, 16LL}) {
    GameResult r = imbalance_exact(hadamard_config(order));
    const double ceiling = std::pow(static_cast<double>(order), 1.5);
    CHECK(static_cast<double>(r.imbalance) <= ceiling);
    if (order == 4 || order == 16) CHECK(static_cast<double>(r.imbalance) == ceiling);
  }
}

TEST_CASE("on-light accounting") {
  CHECK(on_lights(256, 64) == 96);
  CHECK(on_lights(16, 8) == 4);
  CHECK(on_lights(16, 16) == 0);
  CHECK(r_from_g(16, 64) == 96);
  CHECK_THROWS_AS(on_lights(16, 7), std::invalid_argument);   // parity
  CHECK_THROWS_AS(on_lights(16, 18), std::invalid_argument);  // range
  CHECK_THROWS_AS(on_lights(16, -2), std::invalid_argument);
}

TEST_CASE("game rejects dimension below 2") {
  CHECK_THROWS_AS(GameConfig{SignTensor({5})}, std::invalid_argument);
}

TEST_CASE("hadamard game report at order 16") {
  OrderRegistry reg(RegistryMode::Strict412, 64);
  HadamardGameReport report = hadamard_game_report({16, 16}, reg);
  CHECK(report.result.exact);
  CHECK(report.result.imbalance == 64);
  CHECK(report.on_lights_lower == 96);
  CHECK(report.imbalance_upper.value == 64.0);
  CHECK(report.reference == doctest::Approx(64.0));
  CHECK(report.classical_bound == doctest::Approx(classical_ksz_constant(2) * 64.0));
  REQUIRE(report.asymptotic_lower.has_value());
  CHECK(*report.asymptotic_lower == doctest::Approx(0.797884560802865 * 64.0).epsilon(1e-9));
  const std::string text = report.to_text();
  CHECK(text.find("imbalance: 64") != std::string::npos);
  CHECK(text.find("on-lights-lower: 96") != std::string::npos);
}

TEST_CASE("hadamard game report for the chained cube and small boards") {
  OrderRegistry reg(RegistryMode::Strict412, 64);
  HadamardGameReport cube = hadamard_game_report({4, 4, 4}, reg);
  CHECK(cube.result.exact);
  CHECK(cube.result.imbalance == 16);  // 4^{(3+1)/2}

  HadamardGameReport small = hadamard_game_report({4, 4}, reg);
  CHECK(small.result.imbalance == 8);
  CHECK(small.reference == doctest::Approx(8.0));
}

TEST_CASE("hadamard game report falls back to the heuristic over budget") {
  OrderRegistry reg(RegistryMode::Strict412, 64);
  HadamardGameReport report = hadamard_game_report({40, 40}, reg, /*budget=*/1 << 10);
  CHECK(!report.result.exact);
  // Upper bound comes from the chained certificate at t = 48.
  CHECK(report.imbalance_upper.value == doctest::Approx(std::pow(48.0, 1.5)));
  CHECK(report.on_lights_lower >=
        static_cast<std::int64_t>((1600.0 - report.imbalance_upper.value) / 2.0));
  CHECK(report.result.imbalance <= report.imbalance_upper.value);
}
