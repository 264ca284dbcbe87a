#include "ksz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ksz/errors.hpp"

namespace ksz {

namespace {

// Eliminate the largest axis (last among equals), so the enumerated bit
// count is as small as possible.
int pick_eliminated_axis(const SignTensor& tensor) {
  int axis = 0;
  for (int k = 1; k < tensor.arity(); ++k)
    if (tensor.dims()[k] >= tensor.dims()[axis]) axis = k;
  return axis;
}

}  // namespace

NormCertificate linf_exact(const SignTensor& tensor, std::uint64_t budget) {
  EnumerationResult r = max_abs_sum_exact(tensor, pick_eliminated_axis(tensor), budget);
  NormCertificate cert;
  cert.kind = CertKind::ExactReal;
  cert.method = CertMethod::Enumeration;
  cert.value = static_cast<double>(r.value);
  cert.witness = std::move(r.witness);
  return cert;
}

NormCertificate linf_exact(const ChainedForm& form, std::uint64_t budget) {
  return linf_exact(form.materialize(), budget);
}

NormCertificate linf_heuristic(const SignTensor& tensor, int restarts, std::uint64_t seed) {
  EnumerationResult r = max_abs_sum_ascent(tensor, restarts, seed);
  NormCertificate cert;
  cert.kind = CertKind::Lower;
  cert.method = CertMethod::Heuristic;
  cert.value = static_cast<double>(r.value);
  cert.witness = std::move(r.witness);
  return cert;
}

NormCertificate linf_heuristic(const ChainedForm& form, int restarts, std::uint64_t seed) {
  return linf_heuristic(form.materialize(), restarts, seed);
}

RealMatrix real_matrix(const SignMatrix& m) {
  RealMatrix out(m.order(), m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) out.at(i, j) = m.sign(i, j);
  return out;
}

namespace {

double power_iteration(const RealMatrix& a, std::vector<double> v, double tol, int max_iters,
                       int* iterations_used) {
  const int rows = a.rows, cols = a.cols;
  double norm_v = 0.0;
  for (double x : v) norm_v += x * x;
  norm_v = std::sqrt(norm_v);
  if (norm_v == 0.0) throw std::invalid_argument("l2_spectral: zero start vector");
  for (double& x : v) x /= norm_v;

  std::vector<double> w(static_cast<std::size_t>(rows));
  double sigma = 0.0;
  for (int it = 1; it <= max_iters; ++it) {
    for (int i = 0; i < rows; ++i) {
      double sum = 0.0;
      for (int j = 0; j < cols; ++j) sum += a.at(i, j) * v[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = sum;
    }
    double lambda = 0.0;  // ||Av||^2 = Rayleigh quotient of A^T A at unit v
    for (double x : w) lambda += x * x;
    const double next_sigma = std::sqrt(lambda);
    if (next_sigma == 0.0) {
      *iterations_used = it;
      return 0.0;
    }
    std::vector<double> u(static_cast<std::size_t>(cols), 0.0);
    for (int i = 0; i < rows; ++i) {
      const double wi = w[static_cast<std::size_t>(i)];
      for (int j = 0; j < cols; ++j) u[static_cast<std::size_t>(j)] += a.at(i, j) * wi;
    }
    double norm_u = 0.0;
    for (double x : u) norm_u += x * x;
    norm_u = std::sqrt(norm_u);
    for (std::size_t j = 0; j < u.size(); ++j) v[j] = u[j] / norm_u;

    if (it > 1 && std::abs(next_sigma - sigma) <= tol * next_sigma) {
      *iterations_used = it;
      return next_sigma;
    }
    sigma = next_sigma;
  }
  throw ConvergenceFailure("l2_spectral: no convergence after " + std::to_string(max_iters) +
                               " iterations; last iterate " + format_double(sigma),
                           sigma);
}

}  // namespace

NormCertificate l2_spectral(const RealMatrix& a, double tol, int max_iters) {
  if (a.rows < 1 || a.cols < 1) throw std::invalid_argument("l2_spectral: empty matrix");
  if (!(tol > 0.0)) throw std::invalid_argument("l2_spectral: tol must be positive");

  double frob2 = 0.0;
  for (double x : a.values) frob2 += x * x;
  const double floor = std::sqrt(frob2 / std::min(a.rows, a.cols));

  int iters = 0;
  std::vector<double> ones(static_cast<std::size_t>(a.cols), 1.0);
  double sigma = power_iteration(a, ones, tol, max_iters, &iters);

  if (sigma < floor * (1.0 - 1e-9)) {
    // All-ones start was (numerically) orthogonal to the top singular space.
    std::vector<double> skewed(static_cast<std::size_t>(a.cols), 0.0);
    skewed[0] = 1.0;
    if (a.cols > 1) skewed[1] = 2.0;
    int iters2 = 0;
    const double sigma2 = power_iteration(a, skewed, tol, max_iters, &iters2);
    if (sigma2 > sigma) {
      sigma = sigma2;
      iters = iters2;
    }
  }

  NormCertificate cert;
  cert.kind = CertKind::Upper;
  cert.method = CertMethod::Spectral;
  cert.value = sigma;
  cert.formula = "power-iteration";
  cert.formula_inputs = {{"tol", tol}, {"iterations", static_cast<double>(iters)}};
  return cert;
}

NormCertificate l2_spectral(const SignMatrix& m, double tol, int max_iters) {
  return l2_spectral(real_matrix(m), tol, max_iters);
}

NormCertificate basis_lower_bound(const SignTensor& bilinear, Exponent p1, Exponent p2) {
  if (bilinear.arity() != 2)
    throw std::invalid_argument("basis_lower_bound: form must be bilinear");
  const Exponent p = std::max(p1, p2);
  const double conj_recip = p.conjugate_reciprocal();
  const int n2 = bilinear.dims()[1];

  // Row functional (sum_j |a_ij|^{p*})^{1/p*}; identical across rows for ±1
  // coefficients, so the first row witnesses the maximum.
  const double value = conj_recip == 0.0 ? 1.0 : std::pow(static_cast<double>(n2), conj_recip);

  NormCertificate cert;
  cert.kind = CertKind::Lower;
  cert.method = CertMethod::Formula;
  cert.value = value;
  cert.witness_basis_row = 0;
  cert.formula = "basis-row";
  cert.formula_inputs = {{"n2", static_cast<double>(n2)},
                         {"conjugate-reciprocal", conj_recip}};
  return cert;
}

}  // namespace ksz
