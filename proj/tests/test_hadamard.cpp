#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ksz/hadamard.hpp"
#include "test_helpers.hpp"

using namespace ksz;
using ksz_test::oracle_is_hadamard;
using ksz_test::random_sign_matrix;

TEST_CASE("sylvester doubling from order 1") {
  SignMatrix h1(1);
  CHECK(h1.sign(0, 0) == 1);
  SignMatrix h2 = sylvester_double(h1);
  CHECK(h2.order() == 2);
  CHECK(h2.sign(0, 0) == 1);
  CHECK(h2.sign(0, 1) == 1);
  CHECK(h2.sign(1, 0) == 1);
  CHECK(h2.sign(1, 1) == -1);
  CHECK(h2.hadamard_certified());
}

TEST_CASE("sylvester doubling verified by the dense integer oracle") {
  SignMatrix h2 = sylvester_double(SignMatrix(1));
  SignMatrix h4 = sylvester_double(h2);
  CHECK(h4.order() == 4);
  CHECK(oracle_is_hadamard(h4));
  SignMatrix h8 = sylvester_double(h4);
  CHECK(h8.order() == 8);
  CHECK(oracle_is_hadamard(h8));
  for (int j = 0; j < 8; ++j) CHECK(h8.sign(0, j) == 1);
  for (int i = 0; i < 8; ++i) CHECK(h8.sign(i, 0) == 1);
}

TEST_CASE("sylvester doubling rejects uncertified input") {
  SignMatrix not_hadamard(4);  // all +1
  CHECK_THROWS_AS(sylvester_double(not_hadamard), std::invalid_argument);

  SignMatrix h4 = sylvester_double(sylvester_double(SignMatrix(1)));
  h4.set_sign(1, 1, h4.sign(1, 1) > 0 ? -1 : +1);  // mutation drops the certificate
  CHECK(!h4.hadamard_certified());
  CHECK_THROWS_AS(sylvester_double(h4), std::invalid_argument);
}

TEST_CASE("paley construction") {
  SignMatrix p4 = paley_one(3);
  CHECK(p4.order() == 4);
  CHECK(oracle_is_hadamard(p4));

  SignMatrix p12 = paley_one(11);
  CHECK(p12.order() == 12);
  CHECK(oracle_is_hadamard(p12));
  CHECK(verify_hadamard(p12));

  CHECK_THROWS_AS(paley_one(5), std::invalid_argument);   // 5 = 1 mod 4
  CHECK_THROWS_AS(paley_one(9), std::invalid_argument);   // composite
  CHECK_THROWS_AS(paley_one(27), std::invalid_argument);  // composite, 3 mod 4
  CHECK_THROWS_AS(paley_one(2), std::invalid_argument);
}

TEST_CASE("kronecker products") {
  SignMatrix h1(1);
  h1 = realize(recipe_base1());
  SignMatrix h12 = paley_one(11);
  CHECK(kronecker(h1, h12) == h12);

  SignMatrix h2 = sylvester_double(SignMatrix(1));
  SignMatrix h4 = sylvester_double(h2);
  CHECK(kronecker(h2, h2) == h4);

  SignMatrix h48 = kronecker(h4, h12);
  CHECK(h48.order() == 48);
  CHECK(h48.hadamard_certified());
  CHECK(verify_hadamard(h48));
}

TEST_CASE("verify_hadamard agrees with the oracle") {
  SignMatrix h2 = sylvester_double(SignMatrix(1));
  CHECK(verify_hadamard(h2));

  SignMatrix broken = h2;
  broken.set_sign(1, 1, +1);
  CHECK(!verify_hadamard(broken));
  CHECK(!oracle_is_hadamard(broken));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    SignMatrix m = random_sign_matrix(rng, 8);
    CHECK(verify_hadamard(m) == oracle_is_hadamard(m));
  }
}

TEST_CASE("normalization is idempotent and preserves the Hadamard property") {
  SignMatrix h12 = paley_one(11);
  SignMatrix once = h12;
  normalize(once);
  SignMatrix twice = once;
  normalize(twice);
  CHECK(once == twice);
  CHECK(verify_hadamard(once));
  for (int j = 0; j < 12; ++j) CHECK(once.sign(0, j) == 1);
  for (int i = 0; i < 12; ++i) CHECK(once.sign(i, 0) == 1);
}

TEST_CASE("row and column negation preserve the Hadamard property") {
  SignMatrix h8 = sylvester_double(sylvester_double(sylvester_double(SignMatrix(1))));
  h8.negate_row(3);
  h8.negate_col(5);
  CHECK(verify_hadamard(h8));
}

TEST_CASE("realize follows the recipe tree") {
  Recipe r = recipe_kronecker(recipe_sylvester(recipe_sylvester(recipe_base1())),
                              recipe_paley(11));
  CHECK(recipe_order(r) == 48);
  SignMatrix m = realize(r);
  CHECK(m.order() == 48);
  CHECK(m.hadamard_certified());
  CHECK(recipe_to_string(r) == "kron(sylvester(sylvester(base1)),paley(11))");
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(11));
  CHECK(is_prime(2039));
  CHECK(!is_prime(1));
  CHECK(!is_prime(9));
  CHECK(!is_prime(27));
  CHECK(!is_prime(2047));  // 23 * 89
}
