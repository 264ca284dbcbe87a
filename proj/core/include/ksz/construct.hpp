#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksz/certificate.hpp"
#include "ksz/chained_form.hpp"
#include "ksz/form_spec.hpp"
#include "ksz/order_registry.hpp"

namespace ksz {

/// How a constructed form compares against the constant-1 envelope of its
/// bound family.
struct BoundReport {
  std::string pattern;
  std::vector<int> dims;               // caller order
  std::vector<Exponent> exponents;     // caller order
  std::vector<int> permutation;        // sorted slot -> caller axis
  std::vector<std::int64_t> orders;    // realized Hadamard order per sorted slot
  std::vector<double> delta_realized;  // per sorted slot
  double delta_max = 0.0;
  double reference_bound = 0.0;  // the bound's dimension factor with constant 1
  double ratio = 0.0;            // certificate value / reference_bound
  double ratio_limit = 0.0;      // (1 + delta_max)^{(m+1)/2}
  int relaxed_min_dim = 0;       // max_i min_{j != i} n_j

  std::string to_text() const;
};

struct KszConstruction {
  ChainedForm form;
  NormCertificate certificate;  // Upper, for the requested exponents
  BoundReport report;
};

/// Build the ±1 form for the requested dimensions and exponents and certify
/// its norm. Supported exponent patterns: all-infinity (any arity);
/// bilinear with both exponents in [2, inf]; bilinear with both exponents
/// in [1, 2] when the smaller-exponent axis has the smaller dimension;
/// bilinear with one exponent below 2 and one at or above 2 when the
/// low-exponent axis has the smaller dimension; and arity >= 3 with
/// boundary exponents in [2, inf] and all interior exponents infinite
/// (checked after the internal dimension sort). Anything else throws
/// std::invalid_argument naming the nearest supported pattern.
KszConstruction construct_ksz(const FormSpec& spec, const OrderRegistry& registry);

}  // namespace ksz
