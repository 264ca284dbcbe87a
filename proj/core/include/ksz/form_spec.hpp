#pragma once

#include <limits>
#include <string>
#include <vector>

namespace ksz {

/// An l_p exponent in [1, inf], with inf represented exactly.
///
/// All bound arithmetic goes through reciprocal() and conjugate_reciprocal():
/// 1/p is exactly 0 at p = inf and the conjugate reciprocal is computed as
/// 1 - 1/p, so 1/p + 1/p* == 1 holds exactly for every instance.
class Exponent {
 public:
  static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity(), true); }
  static Exponent of(double p);

  double value() const { return p_; }
  bool is_infinite() const { return p_ == std::numeric_limits<double>::infinity(); }
  double reciprocal() const { return is_infinite() ? 0.0 : 1.0 / p_; }
  double conjugate_reciprocal() const { return 1.0 - reciprocal(); }
  Exponent conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.p_ == b.p_; }
  friend bool operator<(const Exponent& a, const Exponent& b) { return a.p_ < b.p_; }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return a.p_ <= b.p_; }

 private:
  Exponent(double p, bool) : p_(p) {}
  double p_ = 2.0;
};

// "inf" or a decimal number >= 1.
Exponent parse_exponent(const std::string& text);

/// Shape of a multilinear form: dimensions and exponents per argument slot.
struct FormSpec {
  std::vector<int> dims;
  std::vector<Exponent> exponents;

  FormSpec(std::vector<int> dims_in, std::vector<Exponent> exponents_in);

  int arity() const { return static_cast<int>(dims.size()); }
  bool all_infinite() const;
};

}  // namespace ksz
