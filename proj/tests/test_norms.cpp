#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ksz/bounds.hpp"
#include "ksz/construct.hpp"
#include "ksz/errors.hpp"
#include "ksz/norms.hpp"
#include "test_helpers.hpp"

using namespace ksz;
using ksz_test::random_signs;
using ksz_test::random_tensor;

namespace {

const OrderRegistry& extended_registry() {
  static OrderRegistry reg(RegistryMode::Extended, 64);
  return reg;
}

}  // namespace

TEST_CASE("exact sup norm of small Hadamard forms") {
  ChainedForm h2({2, 2}, extended_registry());
  NormCertificate c2 = linf_exact(h2);
  CHECK(c2.value == 2.0);
  CHECK(c2.kind == CertKind::ExactReal);
  CHECK(c2.witness[0] == std::vector<std::int8_t>{+1, +1});

  ChainedForm h4({4, 4}, extended_registry());
  NormCertificate c4 = linf_exact(h4);
  CHECK(c4.value == 8.0);  // 4^{3/2}, Cauchy-Schwarz saturation
  CHECK(c4.witness[0] == std::vector<std::int8_t>{+1, +1, +1, -1});
}

TEST_CASE("exact sup norm of the all-ones tensor") {
  for (int n : {1, 3, 6}) {
    SignTensor ones({n, n});
    CHECK(linf_exact(ones).value == static_cast<double>(n) * n);
  }
}

TEST_CASE("budget rejection advises the heuristic") {
  SignTensor big({30, 30});
  CHECK_THROWS_WITH_AS(linf_exact(big, 1 << 20), doctest::Contains("heuristic"),
                       BudgetExceeded);
}

TEST_CASE("witness replay reproduces the exact value") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    std::vector<int> dims;
    for (int k = 0; k < m; ++k) dims.push_back(1 + static_cast<int>(rng() % 4));
    SignTensor t = random_tensor(rng, dims);
    NormCertificate cert = linf_exact(t);
    CHECK(static_cast<double>(std::llabs(evaluate_at(t, cert.witness))) == cert.value);
  }
}

TEST_CASE("objective is invariant under negating one argument vector") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    std::vector<int> dims;
    for (int k = 0; k < m; ++k) dims.push_back(1 + static_cast<int>(rng() % 4));
    SignTensor t = random_tensor(rng, dims);
    auto signs = random_signs(rng, dims);
    const std::int64_t before = std::llabs(evaluate_at(t, signs));
    const int axis = static_cast<int>(rng() % m);
    for (auto& v : signs[static_cast<std::size_t>(axis)]) v = static_cast<std::int8_t>(-v);
    CHECK(std::llabs(evaluate_at(t, signs)) == before);
  }
}

TEST_CASE("ties break toward the lexicographically smallest witness") {
  // Both (+,+) and (+,-) reach the optimum 2 on the order-2 factor; the
  // +1-first order must win regardless of enumeration internals.
  ChainedForm h2({2, 2}, extended_registry());
  CHECK(linf_exact(h2).witness[0] == std::vector<std::int8_t>{+1, +1});
}

TEST_CASE("heuristic reaches the all-ones optimum from any restart") {
  SignTensor ones({8, 8});
  for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL})
    CHECK(linf_heuristic(ones, 5, seed).value == 64.0);
}

TEST_CASE("heuristic is a replayable lower bound") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> dims = {2 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 5)};
    SignTensor t = random_tensor(rng, dims);
    NormCertificate lower = linf_heuristic(t, 8, 17);
    NormCertificate exact = linf_exact(t);
    CHECK(lower.kind == CertKind::Lower);
    CHECK(lower.value <= exact.value);
    CHECK(static_cast<double>(std::llabs(evaluate_at(t, lower.witness))) == lower.value);
  }
}

TEST_CASE("heuristic determinism per seed") {
  std::mt19937_64 rng(34);
  SignTensor t = random_tensor(rng, {6, 7});
  NormCertificate a = linf_heuristic(t, 16, 99);
  NormCertificate b = linf_heuristic(t, 16, 99);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  NormCertificate h4 = linf_heuristic(ChainedForm({4, 4}, extended_registry()), 16, 99);
  CHECK(h4.value <= 8.0);
}

TEST_CASE("spectral norm of Hadamard matrices is sqrt(t)") {
  for (std::int64_t t : {2LL, 4LL, 12LL}) {
    auto m = extended_registry().realize_order(t);
    NormCertificate cert = l2_spectral(*m);
    CHECK(cert.value == doctest::Approx(std::sqrt(static_cast<double>(t))).epsilon(1e-12));
    CHECK(cert.kind == CertKind::Upper);
  }
}

TEST_CASE("spectral norm of rank-one and rectangular matrices") {
  RealMatrix ones(3, 3);
  for (double& v : ones.values) v = 1.0;
  CHECK(l2_spectral(ones).value == doctest::Approx(3.0).epsilon(1e-12));

  RealMatrix rect(2, 3);
  rect.at(0, 0) = 1, rect.at(0, 1) = 1, rect.at(0, 2) = 1;
  rect.at(1, 0) = 1, rect.at(1, 1) = -1, rect.at(1, 2) = 1;
  // A^T A has eigenvalues {4, 2, 0}.
  CHECK(l2_spectral(rect).value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("spectral fallback when the all-ones start is orthogonal to the top space") {
  RealMatrix a(2, 2);
  a.at(0, 0) = 1, a.at(0, 1) = -1;
  a.at(1, 0) = 1, a.at(1, 1) = -1;
  CHECK(l2_spectral(a).value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("spectral non-convergence is reported with the last iterate") {
  RealMatrix a(2, 2);
  a.at(0, 0) = 3, a.at(0, 1) = 1;
  a.at(1, 0) = 0, a.at(1, 1) = 2;
  CHECK_THROWS_AS(l2_spectral(a, 1e-12, 1), ConvergenceFailure);
}

TEST_CASE("basis lower bound") {
  SignTensor t99({9, 9});
  CHECK(basis_lower_bound(t99, Exponent::of(2), Exponent::of(2)).value == doctest::Approx(3.0));
  CHECK(basis_lower_bound(t99, Exponent::of(1), Exponent::of(1)).value == 1.0);
  CHECK(basis_lower_bound(t99, Exponent::infinity(), Exponent::infinity()).value ==
        doctest::Approx(9.0));

  NormCertificate cert = basis_lower_bound(t99, Exponent::of(1.5), Exponent::of(2));
  REQUIRE(cert.witness_basis_row.has_value());
  // Replay the row functional at the witness row.
  const double conj = Exponent::of(2).conjugate_reciprocal();
  double sum = 0.0;
  for (int j = 0; j < 9; ++j)
    sum += std::pow(std::abs(static_cast<double>(t99.sign_at(
               std::vector<int>{*cert.witness_basis_row, j}))),
                    1.0 / conj);
  CHECK(std::pow(sum, conj) == doctest::Approx(cert.value));

  SignTensor cube({2, 2, 2});
  CHECK_THROWS_AS(basis_lower_bound(cube, Exponent::of(2), Exponent::of(2)),
                  std::invalid_argument);
}

TEST_CASE("certificate ordering on random small forms") {
  std::mt19937_64 rng(35);
  OrderRegistry reg(RegistryMode::Strict412, 256);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    std::vector<int> dims;
    std::vector<Exponent> inf_exps;
    for (int k = 0; k < m; ++k) {
      dims.push_back(2 + static_cast<int>(rng() % (m == 2 ? 9 : 3)));
      inf_exps.push_back(Exponent::infinity());
    }
    auto built = construct_ksz(FormSpec(dims, inf_exps), reg);
    const double exact = linf_exact(built.form).value;
    const double lower = linf_heuristic(built.form, 6, 5).value;
    CHECK(lower <= exact);
    CHECK(exact <= built.certificate.value + 1e-9);
    const double classical = classical_ksz_constant(m);
    CHECK(exact <= classical * ksz_mixed_rhs(FormSpec(dims, inf_exps)));
    if (m == 2)
      CHECK(exact <=
            classical * bennett_rhs(dims[0], dims[1], Exponent::infinity(), Exponent::infinity()));
  }
}

TEST_CASE("partitioned enumeration is independent of the worker count") {
  std::mt19937_64 rng(36);
  SignTensor t = random_tensor(rng, {14, 14});  // 2^13 assignments, above the split floor
  setenv("KSZ_THREADS", "1", 1);
  NormCertificate serial = linf_exact(t);
  setenv("KSZ_THREADS", "5", 1);
  NormCertificate parallel = linf_exact(t);
  unsetenv("KSZ_THREADS");
  CHECK(serial.value == parallel.value);
  CHECK(serial.witness == parallel.witness);
}

TEST_CASE("certificate text output") {
  ChainedForm h4({4, 4}, extended_registry());
  const std::string text = linf_exact(h4).to_text();
  CHECK(text.find("kind: exact") != std::string::npos);
  CHECK(text.find("value: 8") != std::string::npos);
  CHECK(text.find("witness[0]: +++-") != std::string::npos);
}
