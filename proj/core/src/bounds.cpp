#include "ksz/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ksz/special_functions.hpp"

namespace ksz {

namespace {

template <typename T>
double chain_bound_impl(std::span<const T> sorted_dims) {
  if (sorted_dims.empty()) throw std::invalid_argument("chain_norm_bound: empty dims");
  for (std::size_t k = 0; k + 1 < sorted_dims.size(); ++k)
    if (sorted_dims[k] > sorted_dims[k + 1])
      throw std::invalid_argument("chain_norm_bound: dims must be sorted ascending");
  double b = std::sqrt(static_cast<double>(sorted_dims.back()));
  for (T d : sorted_dims) b *= std::sqrt(static_cast<double>(d));
  return b;
}

}  // namespace

double chain_norm_bound(std::span<const std::int64_t> sorted_dims) {
  return chain_bound_impl(sorted_dims);
}

double chain_norm_bound(std::span<const int> sorted_dims) {
  return chain_bound_impl(sorted_dims);
}

double ksz_mixed_rhs(const FormSpec& spec) {
  // 1/min_k max{2, p_k*} == max_k min{1/2, 1 - 1/p_k}, evaluated without
  // any infinity arithmetic.
  double head_exponent = 0.0;
  for (const Exponent& p : spec.exponents)
    head_exponent = std::max(head_exponent, std::min(0.5, p.conjugate_reciprocal()));
  const int max_dim = *std::max_element(spec.dims.begin(), spec.dims.end());
  double value = std::pow(static_cast<double>(max_dim), head_exponent);
  for (int k = 0; k < spec.arity(); ++k) {
    const double e = std::max(0.5 - spec.exponents[static_cast<std::size_t>(k)].reciprocal(), 0.0);
    if (e != 0.0) value *= std::pow(static_cast<double>(spec.dims[static_cast<std::size_t>(k)]), e);
  }
  return value;
}

double bennett_rhs(std::int64_t n1, std::int64_t n2, Exponent p1, Exponent p2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("bennett_rhs: dims must be positive");
  const double a1 = std::max(0.5 - p1.reciprocal(), 0.0);
  const double a2 = std::max(0.5 - p2.reciprocal(), 0.0);
  const double lhs = std::pow(static_cast<double>(n2), p2.conjugate_reciprocal()) *
                     std::pow(static_cast<double>(n1), a1);
  const double rhs = std::pow(static_cast<double>(n1), p1.conjugate_reciprocal()) *
                     std::pow(static_cast<double>(n2), a2);
  return std::max(lhs, rhs);
}

double riesz_thorin(double m0, double m1, double p) {
  if (!(m0 > 0.0) || !(m1 > 0.0))
    throw std::invalid_argument("riesz_thorin: endpoint bounds must be positive");
  if (!(p >= 1.0 && p <= 2.0))
    throw std::invalid_argument("riesz_thorin: p must lie in [1, 2]");
  const double theta = 2.0 * (1.0 - 1.0 / p);
  return std::pow(m0, 1.0 - theta) * std::pow(m1, theta);
}

double classical_ksz_constant(int m) {
  if (m < 1) throw std::invalid_argument("classical_ksz_constant: m must be >= 1");
  return std::sqrt(32.0 * m * std::log(6.0 * m)) *
         std::exp(0.5 * log_gamma(static_cast<double>(m) + 1.0));
}

double improved_ksz_constant_complex(int m) {
  if (m < 1) throw std::invalid_argument("improved_ksz_constant_complex: m must be >= 1");
  return std::pow(2.0, m + 1) * std::sqrt((2.0 * m + 1.0) * std::log(1.0 + 4.0 * m));
}

double improved_ksz_constant_real(int m) {
  if (m < 1) throw std::invalid_argument("improved_ksz_constant_real: m must be >= 1");
  return 2.0 * std::sqrt((2.0 * m + 1.0) * std::log(1.0 + 4.0 * m));
}

double asymptotic_lower_constant(int m) {
  if (m < 1) throw std::invalid_argument("asymptotic_lower_constant: m must be >= 1");
  const double log2 = std::log(2.0);
  double log_value = -0.5 * (digamma(static_cast<double>(m)) + kEulerGamma) * log2;
  const double log_gamma_3_2 = log_gamma(1.5);
  for (int k = 2; k <= m; ++k) {
    const double arg = (3.0 * k - 2.0) / (2.0 * k);
    log_value += (static_cast<double>(k) / (2.0 * k - 2.0)) * (log_gamma(arg) - log_gamma_3_2);
  }
  return std::exp(log_value);
}

std::vector<ConstantsRow> constants_table(int m_max) {
  if (m_max < 1) throw std::invalid_argument("constants_table: m_max must be >= 1");
  std::vector<ConstantsRow> rows;
  rows.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m)
    rows.push_back({m, classical_ksz_constant(m), improved_ksz_constant_complex(m),
                    improved_ksz_constant_real(m), asymptotic_lower_constant(m)});
  return rows;
}

}  // namespace ksz
