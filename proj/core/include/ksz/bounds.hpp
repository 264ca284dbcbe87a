#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ksz/form_spec.hpp"

namespace ksz {

/// Norm bound n_m^{1/2} * prod_j n_j^{1/2} of the chained Hadamard tensor;
/// requires dims sorted ascending.
double chain_norm_bound(std::span<const std::int64_t> sorted_dims);
double chain_norm_bound(std::span<const int> sorted_dims);

/// Dimension factor of the mixed-exponent KSZ bound (constant excluded):
/// max_k n_k^{1/min_k max{2, p_k*}} * prod_k n_k^{max{1/2 - 1/p_k, 0}}.
double ksz_mixed_rhs(const FormSpec& spec);

/// Dimension factor of Bennett's bilinear bound (constant excluded):
/// max{n2^{1/p2*} n1^{max{1/2-1/p1,0}}, n1^{1/p1*} n2^{max{1/2-1/p2,0}}}.
double bennett_rhs(std::int64_t n1, std::int64_t n2, Exponent p1, Exponent p2);

/// Interpolated bound m0^{1-theta} * m1^theta between a certified l1
/// endpoint m0 and l2 endpoint m1, at theta = 2(1 - 1/p), p in [1, 2].
double riesz_thorin(double m0, double m1, double p);

double classical_ksz_constant(int m);          // sqrt(32 m log(6m)) * sqrt(m!)
double improved_ksz_constant_complex(int m);   // 2^{m+1} sqrt((2m+1) log(1+4m))
double improved_ksz_constant_real(int m);      // 2 sqrt((2m+1) log(1+4m))
double asymptotic_lower_constant(int m);       // digamma/Gamma product, in (0, 1]

struct ConstantsRow {
  int m;
  double classical;
  double improved_complex;
  double improved_real;
  double lower_asymptotic;
};

std::vector<ConstantsRow> constants_table(int m_max);

}  // namespace ksz
