#include "ksz/sign_tensor.hpp"

#include <stdexcept>
#include <string>

namespace ksz {

namespace {

constexpr std::int64_t kMaxEntries = 1LL << 40;

std::uint64_t tail_mask(int n) {
  const int rem = n & 63;
  return rem == 0 ? ~0ULL : (~0ULL >> (64 - rem));
}

}  // namespace

SignTensor::SignTensor(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("SignTensor: arity must be >= 1");
  std::int64_t total = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("SignTensor: dimensions must be positive");
    if (total > kMaxEntries / d) throw std::invalid_argument("SignTensor: size overflow");
    total *= d;
  }
  fibers_ = total / dims_.back();
  words_per_fiber_ = (dims_.back() + 63) / 64;
  bits_.assign(static_cast<std::size_t>(fibers_) * words_per_fiber_, ~0ULL);
  const std::uint64_t mask = tail_mask(dims_.back());
  for (std::int64_t f = 0; f < fibers_; ++f)
    bits_[static_cast<std::size_t>(f) * words_per_fiber_ + words_per_fiber_ - 1] &= mask;
}

std::int64_t SignTensor::fiber_of(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != arity())
    throw std::invalid_argument("SignTensor: index arity mismatch");
  std::int64_t fiber = 0;
  for (std::size_t k = 0; k + 1 < dims_.size(); ++k) {
    if (index[k] < 0 || index[k] >= dims_[k])
      throw std::out_of_range("SignTensor: index out of range on axis " + std::to_string(k));
    fiber = fiber * dims_[k] + index[k];
  }
  const int j = index.back();
  if (j < 0 || j >= dims_.back())
    throw std::out_of_range("SignTensor: index out of range on last axis");
  return fiber;
}

int SignTensor::sign_at(std::span<const int> index) const {
  return sign_in_fiber(fiber_of(index), index.back());
}

void SignTensor::set_sign_at(std::span<const int> index, int value) {
  set_sign_in_fiber(fiber_of(index), index.back(), value);
}

void SignTensor::set_sign_in_fiber(std::int64_t fiber, int j, int value) {
  if (value != 1 && value != -1)
    throw std::invalid_argument("SignTensor: entry must be +1 or -1");
  std::uint64_t& word = bits_[fiber * words_per_fiber_ + (j >> 6)];
  const std::uint64_t bit = 1ULL << (j & 63);
  if (value > 0)
    word |= bit;
  else
    word &= ~bit;
}

void SignTensor::negate_slice(int axis, int index) {
  const int m = arity();
  if (axis < 0 || axis >= m) throw std::out_of_range("SignTensor::negate_slice: bad axis");
  if (index < 0 || index >= dims_[axis])
    throw std::out_of_range("SignTensor::negate_slice: bad index");
  if (axis == m - 1) {
    const int word = index >> 6;
    const std::uint64_t bit = 1ULL << (index & 63);
    for (std::int64_t f = 0; f < fibers_; ++f) bits_[f * words_per_fiber_ + word] ^= bit;
    return;
  }
  // Stride arithmetic over the leading axes: flip whole fibers.
  std::int64_t inner = 1;
  for (int k = axis + 1; k + 1 < m; ++k) inner *= dims_[k];
  std::int64_t outer = 1;
  for (int k = 0; k < axis; ++k) outer *= dims_[k];
  const std::uint64_t mask = tail_mask(dims_.back());
  for (std::int64_t o = 0; o < outer; ++o) {
    const std::int64_t base = (o * dims_[axis] + index) * inner;
    for (std::int64_t i = 0; i < inner; ++i) {
      std::uint64_t* words = bits_.data() + (base + i) * words_per_fiber_;
      for (int w = 0; w + 1 < words_per_fiber_; ++w) words[w] = ~words[w];
      words[words_per_fiber_ - 1] = (~words[words_per_fiber_ - 1]) & mask;
    }
  }
}

SignTensor SignTensor::with_axis_last(int axis) const {
  const int m = arity();
  if (axis < 0 || axis >= m) throw std::out_of_range("SignTensor::with_axis_last: bad axis");
  if (axis == m - 1) return *this;
  std::vector<int> new_dims;
  new_dims.reserve(dims_.size());
  for (int k = 0; k < m; ++k)
    if (k != axis) new_dims.push_back(dims_[k]);
  new_dims.push_back(dims_[axis]);

  SignTensor out(new_dims);
  std::vector<int> idx(m, 0), new_idx(m, 0);
  while (true) {
    int pos = 0;
    for (int k = 0; k < m; ++k)
      if (k != axis) new_idx[pos++] = idx[k];
    new_idx[m - 1] = idx[axis];
    out.set_sign_at(new_idx, sign_at(idx));
    int k = m - 1;
    while (k >= 0 && ++idx[k] == dims_[k]) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

SignTensor tensor_from_matrix(const SignMatrix& m) {
  SignTensor out({m.order(), m.order()});
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j)
      out.set_sign_in_fiber(i, j, m.sign(i, j));
  return out;
}

std::int64_t evaluate_at(const SignTensor& tensor,
                         std::span<const std::vector<std::int8_t>> signs) {
  const int m = tensor.arity();
  if (static_cast<int>(signs.size()) != m)
    throw std::invalid_argument("evaluate_at: need one sign vector per axis");
  for (int k = 0; k < m; ++k) {
    if (static_cast<int>(signs[k].size()) != tensor.dims()[k])
      throw std::invalid_argument("evaluate_at: sign vector length mismatch on axis " +
                                  std::to_string(k));
    for (std::int8_t s : signs[k])
      if (s != 1 && s != -1) throw std::invalid_argument("evaluate_at: signs must be +1/-1");
  }

  const int n = tensor.last_dim();
  std::vector<int> prefix(m - 1, 0);
  std::int64_t sum = 0;
  for (std::int64_t f = 0; f < tensor.fiber_count(); ++f) {
    int sigma = 1;
    for (int k = 0; k + 1 < m; ++k) sigma *= signs[k][prefix[k]];
    std::int64_t fiber_sum = 0;
    for (int j = 0; j < n; ++j) fiber_sum += tensor.sign_in_fiber(f, j) * signs[m - 1][j];
    sum += sigma * fiber_sum;
    int k = m - 2;
    while (k >= 0 && ++prefix[k] == tensor.dims()[k]) prefix[k--] = 0;
  }
  return sum;
}

}  // namespace ksz
