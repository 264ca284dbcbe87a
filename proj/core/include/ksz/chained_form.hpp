#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ksz/certificate.hpp"
#include "ksz/form_spec.hpp"
#include "ksz/order_registry.hpp"
#include "ksz/sign_matrix.hpp"
#include "ksz/sign_tensor.hpp"

namespace ksz {

/// Implicit ±1 coefficient tensor c(i_1,...,i_m) = prod_k H_k[i_{k-1}, i_k]
/// over a truncated index box, where the H_k are Hadamard factors living at
/// registry orders above the (ascending-sorted) box dimensions.
///
/// The constructor sorts the requested dimensions internally; the recorded
/// axis permutation maps caller axes to sorted slots, so coefficient_at and
/// materialize always speak the caller's axis order. Truncation shrinks the
/// box without re-sorting. The degenerate m = 1 form has every coefficient
/// +1.
class ChainedForm {
 public:
  ChainedForm(const std::vector<int>& dims, const OrderRegistry& registry);

  int arity() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }

  // permutation()[slot] = caller axis occupying that sorted slot.
  const std::vector<int>& permutation() const { return perm_; }
  std::vector<int> sorted_dims() const;

  // Hadamard orders backing each sorted slot (ascending). Slot 0 carries no
  // factor matrix; its order only widens the parent box.
  const std::vector<std::int64_t>& parent_orders() const { return parent_orders_; }
  const std::vector<std::shared_ptr<const SignMatrix>>& factors() const { return factors_; }

  // delta[slot] = parent_orders[slot] / sorted_dims[slot] - 1.
  std::vector<double> delta_realized() const;
  double delta_max() const;

  // Coefficient at a caller-order index; O(m), no materialization.
  int coefficient_at(std::span<const int> index) const;

  SignTensor materialize() const;

  // Same factors and permutation over a smaller box (caller axis order).
  ChainedForm truncated(const std::vector<int>& new_dims) const;

  // Norm bound of the untruncated parent box, inherited by every truncation.
  double parent_bound() const;
  NormCertificate parent_bound_certificate() const;

 private:
  ChainedForm() = default;

  std::vector<int> dims_;                // caller order, current box
  std::vector<int> perm_;                // sorted slot -> caller axis
  std::vector<std::int64_t> parent_orders_;
  std::vector<std::shared_ptr<const SignMatrix>> factors_;  // slots 1..m-1
};

struct ScaledWitness {
  ChainedForm base;                  // coefficients unchanged by scaling
  std::vector<Exponent> exponents;   // target exponents, all >= 2
  std::vector<double> f_values;      // certified l2 bounds f(n_k)
  NormCertificate bound;             // max_k f(n_k) * prod n_k^{1/2 - 1/p_k}
};

/// Re-certify a form on l_p domains, p_k >= 2, given certified l2-norm
/// bounds f(n_k) for the base family (f must be monotone in n).
ScaledWitness lp_scale_witness(const ChainedForm& base, std::vector<Exponent> exponents,
                               std::vector<double> f_values);

}  // namespace ksz
