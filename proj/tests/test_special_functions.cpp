#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ksz/special_functions.hpp"

using namespace ksz;

TEST_CASE("log gamma at frozen reference points") {
  // Gamma(3/2) = sqrt(pi)/2.
  CHECK(std::abs(log_gamma(1.5) - (-0.120782237635245222346)) < 1e-12);
  CHECK(std::abs(log_gamma(0.25) - 1.28802252469807745737) < 1e-12);
  CHECK(std::abs(log_gamma(199.5) - 855.286389273452573794) < 1e-10);
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("digamma at frozen reference points") {
  CHECK(std::abs(digamma(1.0) - (-0.577215664901532860607)) < 1e-12);
  CHECK(std::abs(digamma(2.0) - 0.422784335098467139393) < 1e-12);
  CHECK(std::abs(digamma(0.25) - (-4.22745353337626540809)) < 1e-12);
  CHECK(std::abs(digamma(199.5) - 5.29330587688182531051) < 1e-12);
}

TEST_CASE("recurrence identities hold to 1e-10 across (0, 200]") {
  for (double x = 0.0625; x <= 199.0; x += 0.37109375) {
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-10);
    CHECK(std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) < 1e-10);
  }
}

TEST_CASE("exp(log_gamma(n+1)) rounds exactly to n! for n <= 15") {
  long long factorial = 1;
  for (int n = 1; n <= 15; ++n) {
    factorial *= n;
    CHECK(std::llround(std::exp(log_gamma(n + 1.0))) == factorial);
  }
}

TEST_CASE("non-positive arguments are rejected") {
  CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(log_gamma(-1.5), std::invalid_argument);
  CHECK_THROWS_AS(digamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(digamma(-3.0), std::invalid_argument);
}
