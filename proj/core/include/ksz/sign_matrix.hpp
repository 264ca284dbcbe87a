#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ksz/recipe.hpp"

namespace ksz {

/// Square ±1 matrix, bit-packed by row (+1 <-> set bit).
///
/// Rows are padded to whole 64-bit words with zero bits so that row dot
/// products reduce to order - 2*popcount(xor) over the packed words.
class SignMatrix {
 public:
  // All +1 entries, no recipe.
  explicit SignMatrix(int order);

  int order() const { return order_; }
  int words_per_row() const { return words_per_row_; }

  int sign(int row, int col) const {
    const std::uint64_t word = bits_[static_cast<std::size_t>(row) * words_per_row_ + (col >> 6)];
    return (word >> (col & 63)) & 1 ? +1 : -1;
  }

  // Mutation drops any Hadamard certificate.
  void set_sign(int row, int col, int value);

  std::span<const std::uint64_t> row_words(int row) const {
    return {bits_.data() + static_cast<std::size_t>(row) * words_per_row_,
            static_cast<std::size_t>(words_per_row_)};
  }

  void negate_row(int row);
  void negate_col(int col);

  // Exact integer dot product of two rows via popcount.
  std::int64_t row_dot(int row_a, int row_b) const;

  bool hadamard_certified() const { return certified_; }
  const Recipe& recipe() const { return recipe_; }

  bool operator==(const SignMatrix& other) const;

 private:
  friend SignMatrix sylvester_double(const SignMatrix&);
  friend SignMatrix paley_one(std::int64_t);
  friend SignMatrix kronecker(const SignMatrix&, const SignMatrix&);
  friend SignMatrix realize(const Recipe&);
  friend bool verify_hadamard(const SignMatrix&);
  friend void certify_hadamard(SignMatrix&);

  std::uint64_t* row_data(int row) {
    return bits_.data() + static_cast<std::size_t>(row) * words_per_row_;
  }

  int order_;
  int words_per_row_;
  std::vector<std::uint64_t> bits_;
  Recipe recipe_;
  bool certified_ = false;
};

}  // namespace ksz
