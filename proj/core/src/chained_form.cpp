#include "ksz/chained_form.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ksz {

ChainedForm::ChainedForm(const std::vector<int>& dims, const OrderRegistry& registry)
    : dims_(dims) {
  const int m = static_cast<int>(dims_.size());
  if (m < 1) throw std::invalid_argument("ChainedForm: arity must be >= 1");
  for (int d : dims_)
    if (d < 1) throw std::invalid_argument("ChainedForm: dimensions must be positive");

  perm_.resize(dims_.size());
  std::iota(perm_.begin(), perm_.end(), 0);
  std::stable_sort(perm_.begin(), perm_.end(),
                   [&](int a, int b) { return dims_[a] < dims_[b]; });

  parent_orders_.reserve(dims_.size());
  for (int slot = 0; slot < m; ++slot) {
    const auto near = registry.nearest(dims_[perm_[slot]]);
    parent_orders_.push_back(near.order);
    if (slot >= 1) factors_.push_back(registry.realize_order(near.order));
  }
}

std::vector<int> ChainedForm::sorted_dims() const {
  std::vector<int> out(dims_.size());
  for (std::size_t slot = 0; slot < perm_.size(); ++slot) out[slot] = dims_[perm_[slot]];
  return out;
}

std::vector<double> ChainedForm::delta_realized() const {
  std::vector<double> out(dims_.size());
  for (std::size_t slot = 0; slot < perm_.size(); ++slot)
    out[slot] = static_cast<double>(parent_orders_[slot]) /
                    static_cast<double>(dims_[perm_[slot]]) -
                1.0;
  return out;
}

double ChainedForm::delta_max() const {
  double best = 0.0;
  for (double d : delta_realized()) best = std::max(best, d);
  return best;
}

int ChainedForm::coefficient_at(std::span<const int> index) const {
  const int m = arity();
  if (static_cast<int>(index.size()) != m)
    throw std::invalid_argument("ChainedForm::coefficient_at: index arity mismatch");
  for (int k = 0; k < m; ++k)
    if (index[k] < 0 || index[k] >= dims_[k])
      throw std::out_of_range("ChainedForm::coefficient_at: index out of range on axis " +
                              std::to_string(k));
  int sign = 1;
  for (int slot = 1; slot < m; ++slot)
    sign *= factors_[static_cast<std::size_t>(slot - 1)]->sign(index[perm_[slot - 1]],
                                                               index[perm_[slot]]);
  return sign;
}

SignTensor ChainedForm::materialize() const {
  SignTensor out(dims_);
  const int m = arity();
  std::vector<int> idx(dims_.size(), 0);
  while (true) {
    out.set_sign_at(idx, coefficient_at(idx));
    int k = m - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == dims_[static_cast<std::size_t>(k)])
      idx[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
  }
  return out;
}

ChainedForm ChainedForm::truncated(const std::vector<int>& new_dims) const {
  if (new_dims.size() != dims_.size())
    throw std::invalid_argument("ChainedForm::truncated: arity mismatch");
  for (std::size_t k = 0; k < new_dims.size(); ++k) {
    if (new_dims[k] < 1)
      throw std::invalid_argument("ChainedForm::truncated: dimensions must be positive");
    if (new_dims[k] > dims_[k])
      throw std::invalid_argument("ChainedForm::truncated: axis " + std::to_string(k) +
                                  " grows from " + std::to_string(dims_[k]) + " to " +
                                  std::to_string(new_dims[k]));
  }
  ChainedForm out;
  out.dims_ = new_dims;
  out.perm_ = perm_;
  out.parent_orders_ = parent_orders_;
  out.factors_ = factors_;
  return out;
}

double ChainedForm::parent_bound() const {
  double b = std::sqrt(static_cast<double>(parent_orders_.back()));
  for (std::int64_t t : parent_orders_) b *= std::sqrt(static_cast<double>(t));
  return b;
}

NormCertificate ChainedForm::parent_bound_certificate() const {
  std::vector<std::pair<std::string, double>> inputs;
  for (std::size_t slot = 0; slot < parent_orders_.size(); ++slot)
    inputs.emplace_back("t" + std::to_string(slot + 1), static_cast<double>(parent_orders_[slot]));
  return upper_certificate(parent_bound(), "chain", std::move(inputs));
}

ScaledWitness lp_scale_witness(const ChainedForm& base, std::vector<Exponent> exponents,
                               std::vector<double> f_values) {
  const int m = base.arity();
  if (static_cast<int>(exponents.size()) != m || static_cast<int>(f_values.size()) != m)
    throw std::invalid_argument("lp_scale_witness: need one exponent and one f-value per axis");
  for (const Exponent& p : exponents)
    if (!(p.value() >= 2.0))
      throw std::invalid_argument("lp_scale_witness: target exponents must satisfy p >= 2");
  // f must be increasing along the dimensions.
  std::vector<int> order(f_values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return base.dims()[a] < base.dims()[b]; });
  for (std::size_t k = 0; k + 1 < order.size(); ++k)
    if (f_values[order[k]] > f_values[order[k + 1]])
      throw std::invalid_argument("lp_scale_witness: f-values must be increasing in n");

  double max_f = 0.0;
  double factor = 1.0;
  std::vector<std::pair<std::string, double>> inputs;
  for (int k = 0; k < m; ++k) {
    max_f = std::max(max_f, f_values[static_cast<std::size_t>(k)]);
    const double e = 0.5 - exponents[static_cast<std::size_t>(k)].reciprocal();
    factor *= std::pow(static_cast<double>(base.dims()[static_cast<std::size_t>(k)]), e);
    inputs.emplace_back("f(n" + std::to_string(k + 1) + ")", f_values[static_cast<std::size_t>(k)]);
  }
  inputs.emplace_back("scaling-factor", factor);

  ScaledWitness out{base, std::move(exponents), std::move(f_values),
                    upper_certificate(max_f * factor, "l2-scaling", std::move(inputs))};
  return out;
}

}  // namespace ksz
