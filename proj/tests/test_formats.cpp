#include <doctest.h>

#include <random>
#include <stdexcept>
#include <sstream>

#include "ksz/hadamard.hpp"
#include "ksz/io.hpp"
#include "test_helpers.hpp"

using namespace ksz;
using ksz_test::random_sign_matrix;
using ksz_test::random_tensor;

TEST_CASE("pm1 round trip is bit exact") {
  std::mt19937_64 rng(3);
  for (int order : {1, 2, 5, 12, 64, 100}) {
    SignMatrix m = random_sign_matrix(rng, order);
    std::ostringstream out;
    write_pm1(out, m);
    std::istringstream in(out.str());
    CHECK(read_pm1(in) == m);
  }
  // Canonical output is stable under a write/read/write cycle.
  SignMatrix h12 = paley_one(11);
  std::ostringstream first;
  write_pm1(first, h12);
  std::istringstream back(first.str());
  SignMatrix reread = read_pm1(back);
  std::ostringstream second;
  write_pm1(second, reread);
  CHECK(first.str() == second.str());
}

TEST_CASE("pm1 reader ignores whitespace and rejects junk") {
  std::istringstream spaced(" 2\n\n +   +\n\t+\r\n- \n");
  SignMatrix m = read_pm1(spaced);
  CHECK(m.order() == 2);
  CHECK(m.sign(1, 1) == -1);

  std::istringstream trailing("1\n+\nx");
  CHECK_THROWS_WITH_AS(read_pm1(trailing), doctest::Contains("trailing"), std::runtime_error);

  std::istringstream bad_char("2\n+*\n++\n");
  CHECK_THROWS_AS(read_pm1(bad_char), std::runtime_error);

  std::istringstream truncated("2\n+++\n");
  CHECK_THROWS_AS(read_pm1(truncated), std::runtime_error);

  std::istringstream no_order("x\n");
  CHECK_THROWS_AS(read_pm1(no_order), std::runtime_error);

  std::istringstream zero_order("0\n");
  CHECK_THROWS_AS(read_pm1(zero_order), std::runtime_error);
}

TEST_CASE("pmt round trip is bit exact") {
  std::mt19937_64 rng(4);
  for (const auto& dims : {std::vector<int>{3}, std::vector<int>{2, 5}, std::vector<int>{2, 3, 4},
                           std::vector<int>{1, 1, 7}}) {
    SignTensor t = random_tensor(rng, dims);
    std::ostringstream out;
    write_pmt(out, t);
    std::istringstream in(out.str());
    CHECK(read_pmt(in) == t);
  }
}

TEST_CASE("pmt reader validation") {
  std::istringstream ok("2 2 2\n+ -\n-+\n");
  SignTensor t = read_pmt(ok);
  CHECK(t.dims() == std::vector<int>{2, 2});
  CHECK(t.sign_at(std::vector<int>{0, 1}) == -1);
  CHECK(t.sign_at(std::vector<int>{1, 0}) == -1);

  std::istringstream bad_arity("0\n");
  CHECK_THROWS_AS(read_pmt(bad_arity), std::runtime_error);

  std::istringstream bad_dim("2 2 0\n");
  CHECK_THROWS_AS(read_pmt(bad_dim), std::runtime_error);

  std::istringstream trailing("1 2\n+-+\n");
  CHECK_THROWS_AS(read_pmt(trailing), std::runtime_error);
}
