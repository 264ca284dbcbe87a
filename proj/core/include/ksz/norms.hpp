#pragma once

#include <cstdint>
#include <vector>

#include "ksz/certificate.hpp"
#include "ksz/chained_form.hpp"
#include "ksz/enumeration.hpp"
#include "ksz/form_spec.hpp"
#include "ksz/sign_matrix.hpp"
#include "ksz/sign_tensor.hpp"

namespace ksz {

/// Exact sup-norm of a ±1 multilinear form over real l_inf balls, by
/// extreme-point (sign vector) enumeration with the largest axis eliminated
/// analytically. The value is an integer; the witness replays exactly.
NormCertificate linf_exact(const SignTensor& tensor,
                           std::uint64_t budget = kDefaultEnumerationBudget);
NormCertificate linf_exact(const ChainedForm& form,
                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Replayable lower bound by alternating coordinate ascent.
NormCertificate linf_heuristic(const SignTensor& tensor, int restarts = 64,
                               std::uint64_t seed = 0);
NormCertificate linf_heuristic(const ChainedForm& form, int restarts = 64,
                               std::uint64_t seed = 0);

struct RealMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // row-major

  RealMatrix(int r, int c) : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, 0.0) {}
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * cols + j]; }
};

RealMatrix real_matrix(const SignMatrix& m);

/// Largest singular value within relative tolerance, by power iteration on
/// A^T A from the deterministic all-ones start; restarts from e1 + 2*e2 when
/// the Rayleigh quotient stalls below the Frobenius/sqrt(min dim) floor.
/// Throws ConvergenceFailure when max_iters is exhausted.
NormCertificate l2_spectral(const RealMatrix& a, double tol = 1e-12, int max_iters = 10000);
NormCertificate l2_spectral(const SignMatrix& m, double tol = 1e-12, int max_iters = 10000);

/// Bilinear lower bound max_i (sum_j |A(e_i,e_j)|^{p*})^{1/p*} with
/// p = max{p1, p2}; equals n2^{1/p*} for ±1 coefficients.
NormCertificate basis_lower_bound(const SignTensor& bilinear, Exponent p1, Exponent p2);

}  // namespace ksz
