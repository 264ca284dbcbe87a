#include "ksz/construct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ksz/bounds.hpp"

namespace ksz {

namespace {

// sqrt(t_m) * prod over interior slots of sqrt(t_k): the chain bound with
// l2 (not l_inf) boundary arguments.
double chain_interior_bound(const std::vector<std::int64_t>& orders) {
  const std::size_t m = orders.size();
  double b = std::sqrt(static_cast<double>(orders.back()));
  for (std::size_t slot = 1; slot + 1 < m; ++slot)
    b *= std::sqrt(static_cast<double>(orders[slot]));
  return b;
}

[[noreturn]] void reject(const std::string& detail) {
  throw std::invalid_argument(
      "construct_ksz: unsupported exponent pattern: " + detail +
      "; supported: all exponents inf (any arity); bilinear with both exponents >= 2;"
      " bilinear with both exponents <= 2 or mixed, when the smaller-exponent axis has"
      " the smaller dimension (the reverse ordering is an open case); arity >= 3 with"
      " boundary exponents >= 2 and interior exponents inf");
}

}  // namespace

std::string BoundReport::to_text() const {
  std::ostringstream out;
  out << "pattern: " << pattern << "\n";
  out << "dims:";
  for (int d : dims) out << ' ' << d;
  out << "\nexponents:";
  for (const Exponent& p : exponents) out << ' ' << p.to_string();
  out << "\npermutation:";
  for (int a : permutation) out << ' ' << a;
  out << "\norders:";
  for (std::int64_t t : orders) out << ' ' << t;
  out << "\ndelta-realized:";
  for (double d : delta_realized) out << ' ' << format_double(d);
  out << "\ndelta-max: " << format_double(delta_max) << "\n";
  out << "reference-bound: " << format_double(reference_bound) << "\n";
  out << "ratio: " << format_double(ratio) << "\n";
  out << "ratio-limit: " << format_double(ratio_limit) << "\n";
  out << "relaxed-min-dim: " << relaxed_min_dim << "\n";
  return out.str();
}

KszConstruction construct_ksz(const FormSpec& spec, const OrderRegistry& registry) {
  const int m = spec.arity();
  ChainedForm form(spec.dims, registry);

  const std::vector<int> sorted = form.sorted_dims();
  const std::vector<int>& perm = form.permutation();
  std::vector<Exponent> p_sorted;
  p_sorted.reserve(static_cast<std::size_t>(m));
  for (int slot = 0; slot < m; ++slot)
    p_sorted.push_back(spec.exponents[static_cast<std::size_t>(perm[static_cast<std::size_t>(slot)])]);

  NormCertificate cert;
  double reference = 0.0;
  std::string pattern;

  if (spec.all_infinite()) {
    pattern = "multilinear-sup";
    cert = form.parent_bound_certificate();
    reference = chain_norm_bound(std::span<const int>(sorted));
  } else if (m == 2) {
    const Exponent& pa = spec.exponents[0];
    const Exponent& pb = spec.exponents[1];
    const bool a_high = pa.value() >= 2.0;
    const bool b_high = pb.value() >= 2.0;
    reference = bennett_rhs(spec.dims[0], spec.dims[1], pa, pb);
    if (a_high && b_high) {
      pattern = "bilinear-high";
      std::vector<double> f_values = {
          std::sqrt(static_cast<double>(registry.nearest(spec.dims[0]).order)),
          std::sqrt(static_cast<double>(registry.nearest(spec.dims[1]).order))};
      cert = lp_scale_witness(form, spec.exponents, std::move(f_values)).bound;
    } else if (!a_high && !b_high) {
      // Both exponents in [1, 2]: interpolate between the exact l1 endpoint
      // (value 1) and the l2 endpoint sqrt(t).
      const bool ordered = (pa <= pb && spec.dims[0] <= spec.dims[1]) ||
                           (pb <= pa && spec.dims[1] <= spec.dims[0]);
      if (!ordered)
        reject("both exponents below 2 with the larger dimension on the smaller exponent");
      pattern = "bilinear-low";
      const std::int64_t t = form.parent_orders().back();
      const double p_hi = std::max(pa.value(), pb.value());
      cert = upper_certificate(
          riesz_thorin(1.0, std::sqrt(static_cast<double>(t)), p_hi), "riesz-thorin",
          {{"m0", 1.0}, {"m1", std::sqrt(static_cast<double>(t))}, {"p", p_hi}});
    } else {
      // One exponent below 2: widen it to 2 (its unit ball only shrinks) and
      // certify the >= 2 pattern.
      const int low_axis = a_high ? 1 : 0;
      if (spec.dims[static_cast<std::size_t>(low_axis)] > spec.dims[static_cast<std::size_t>(1 - low_axis)])
        reject("mixed exponents with the larger dimension on the below-2 exponent");
      pattern = "bilinear-mixed";
      std::vector<Exponent> widened = spec.exponents;
      widened[static_cast<std::size_t>(low_axis)] = Exponent::of(2.0);
      std::vector<double> f_values = {
          std::sqrt(static_cast<double>(registry.nearest(spec.dims[0]).order)),
          std::sqrt(static_cast<double>(registry.nearest(spec.dims[1]).order))};
      cert = lp_scale_witness(form, std::move(widened), std::move(f_values)).bound;
    }
  } else if (m >= 3) {
    bool interior_inf = true;
    for (int slot = 1; slot + 1 < m; ++slot)
      if (!p_sorted[static_cast<std::size_t>(slot)].is_infinite()) interior_inf = false;
    const bool ends_high = p_sorted.front().value() >= 2.0 && p_sorted.back().value() >= 2.0;
    if (!interior_inf || !ends_high)
      reject("after sorting dimensions ascending, all interior exponents must be inf and the"
             " boundary exponents must be >= 2");
    pattern = "boundary-high-interior-sup";
    const double e_first = 0.5 - p_sorted.front().reciprocal();
    const double e_last = 0.5 - p_sorted.back().reciprocal();
    const double value = chain_interior_bound(form.parent_orders()) *
                         std::pow(static_cast<double>(sorted.front()), e_first) *
                         std::pow(static_cast<double>(sorted.back()), e_last);
    cert = upper_certificate(value, "chain+l2-scaling",
                             {{"t-interior-product", chain_interior_bound(form.parent_orders())},
                              {"n-first", static_cast<double>(sorted.front())},
                              {"n-last", static_cast<double>(sorted.back())}});
    reference = std::sqrt(static_cast<double>(sorted.back()));
    for (int slot = 0; slot < m; ++slot)
      reference *= std::pow(static_cast<double>(sorted[static_cast<std::size_t>(slot)]),
                            0.5 - p_sorted[static_cast<std::size_t>(slot)].reciprocal());
  } else {
    reject("arity-1 forms are only certified with exponent inf");
  }

  BoundReport report;
  report.pattern = pattern;
  report.dims = spec.dims;
  report.exponents = spec.exponents;
  report.permutation = perm;
  report.orders = form.parent_orders();
  report.delta_realized = form.delta_realized();
  report.delta_max = form.delta_max();
  report.reference_bound = reference;
  report.ratio = cert.value / reference;
  report.ratio_limit = std::pow(1.0 + report.delta_max, (m + 1) / 2.0);
  report.relaxed_min_dim = (m >= 2) ? sorted[1] : sorted[0];

  return {std::move(form), std::move(cert), std::move(report)};
}

}  // namespace ksz
