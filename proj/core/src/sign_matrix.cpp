#include "ksz/sign_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace ksz {

namespace {

// Mask selecting the valid bits of the last word of a row.
std::uint64_t tail_mask(int order) {
  const int rem = order & 63;
  return rem == 0 ? ~0ULL : (~0ULL >> (64 - rem));
}

}  // namespace

SignMatrix::SignMatrix(int order)
    : order_(order), words_per_row_((order + 63) / 64) {
  if (order < 1) throw std::invalid_argument("SignMatrix: order must be positive");
  bits_.assign(static_cast<std::size_t>(order_) * words_per_row_, ~0ULL);
  const std::uint64_t mask = tail_mask(order_);
  for (int r = 0; r < order_; ++r) bits_[static_cast<std::size_t>(r) * words_per_row_ + words_per_row_ - 1] &= mask;
}

void SignMatrix::set_sign(int row, int col, int value) {
  if (row < 0 || row >= order_ || col < 0 || col >= order_)
    throw std::out_of_range("SignMatrix::set_sign: index out of range");
  if (value != 1 && value != -1)
    throw std::invalid_argument("SignMatrix::set_sign: entry must be +1 or -1");
  std::uint64_t& word = bits_[static_cast<std::size_t>(row) * words_per_row_ + (col >> 6)];
  const std::uint64_t bit = 1ULL << (col & 63);
  if (value > 0)
    word |= bit;
  else
    word &= ~bit;
  certified_ = false;
}

void SignMatrix::negate_row(int row) {
  std::uint64_t* words = row_data(row);
  const std::uint64_t mask = tail_mask(order_);
  for (int w = 0; w + 1 < words_per_row_; ++w) words[w] = ~words[w];
  words[words_per_row_ - 1] = (~words[words_per_row_ - 1]) & mask;
}

void SignMatrix::negate_col(int col) {
  const int word = col >> 6;
  const std::uint64_t bit = 1ULL << (col & 63);
  for (int r = 0; r < order_; ++r) bits_[static_cast<std::size_t>(r) * words_per_row_ + word] ^= bit;
}

std::int64_t SignMatrix::row_dot(int row_a, int row_b) const {
  const std::uint64_t* a = bits_.data() + static_cast<std::size_t>(row_a) * words_per_row_;
  const std::uint64_t* b = bits_.data() + static_cast<std::size_t>(row_b) * words_per_row_;
  int disagreements = 0;
  for (int w = 0; w < words_per_row_; ++w) disagreements += std::popcount(a[w] ^ b[w]);
  return static_cast<std::int64_t>(order_) - 2 * disagreements;
}

bool SignMatrix::operator==(const SignMatrix& other) const {
  return order_ == other.order_ && bits_ == other.bits_;
}

}  // namespace ksz
