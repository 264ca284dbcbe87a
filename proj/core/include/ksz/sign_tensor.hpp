#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ksz/sign_matrix.hpp"

namespace ksz {

/// Dense m-dimensional ±1 array, bit-packed along the last axis
/// (+1 <-> set bit). Fibers (runs along the last axis) are padded to whole
/// 64-bit words and indexed row-major over the leading axes.
class SignTensor {
 public:
  explicit SignTensor(std::vector<int> dims);  // all +1

  int arity() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::int64_t total() const { return fibers_ * dims_.back(); }

  int last_dim() const { return dims_.back(); }
  std::int64_t fiber_count() const { return fibers_; }
  int words_per_fiber() const { return words_per_fiber_; }

  int sign_at(std::span<const int> index) const;
  void set_sign_at(std::span<const int> index, int value);

  int sign_in_fiber(std::int64_t fiber, int j) const {
    const std::uint64_t word = bits_[fiber * words_per_fiber_ + (j >> 6)];
    return (word >> (j & 63)) & 1 ? +1 : -1;
  }
  void set_sign_in_fiber(std::int64_t fiber, int j, int value);

  std::span<const std::uint64_t> fiber_words(std::int64_t fiber) const {
    return {bits_.data() + fiber * words_per_fiber_,
            static_cast<std::size_t>(words_per_fiber_)};
  }

  // Negate every entry whose coordinate on `axis` equals `index`
  // (one switch pull, in game terms).
  void negate_slice(int axis, int index);

  // Copy with `axis` moved to the last position; the relative order of the
  // remaining axes is preserved.
  SignTensor with_axis_last(int axis) const;

  bool operator==(const SignTensor& other) const = default;

 private:
  std::int64_t fiber_of(std::span<const int> index) const;

  std::vector<int> dims_;
  std::int64_t fibers_;
  int words_per_fiber_;
  std::vector<std::uint64_t> bits_;
};

SignTensor tensor_from_matrix(const SignMatrix& m);

/// Exact integer evaluation sum_idx c(idx) * prod_k signs[k][idx_k].
std::int64_t evaluate_at(const SignTensor& tensor,
                         std::span<const std::vector<std::int8_t>> signs);

}  // namespace ksz
