#include "ksz/hadamard.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace ksz {

namespace {

// Copy nbits from src (bit 0 upwards) into dst starting at dst_bit,
// complementing the bits when negate is set. dst bits must start zeroed.
void splice_bits(std::uint64_t* dst, int dst_bit, const std::uint64_t* src, int nbits,
                 bool negate) {
  const int base = dst_bit >> 6;
  const int shift = dst_bit & 63;
  const int src_words = (nbits + 63) / 64;
  for (int w = 0; w < src_words; ++w) {
    std::uint64_t bits = negate ? ~src[w] : src[w];
    const int remaining = nbits - w * 64;
    if (remaining < 64) bits &= ~0ULL >> (64 - remaining);
    dst[base + w] |= bits << shift;
    if (shift != 0) {
      const std::uint64_t spill = bits >> (64 - shift);
      if (spill != 0) dst[base + w + 1] |= spill;
    }
  }
}

void require_certified(const SignMatrix& h, const char* op) {
  if (h.order() == 1) return;
  if (!h.hadamard_certified())
    throw std::invalid_argument(std::string(op) +
                                ": input of order " + std::to_string(h.order()) +
                                " carries no Hadamard certificate; run certify_hadamard first");
}

}  // namespace

bool verify_hadamard(const SignMatrix& h) {
  const int t = h.order();
  const int words = h.words_per_row();
  // Off-diagonal dot products must vanish: popcount(xor) == t/2 for each pair.
  if (t > 1 && (t & 1)) return false;
  const int half = t / 2;
  for (int i = 0; i < t; ++i) {
    const std::uint64_t* a = h.row_words(i).data();
    for (int j = i + 1; j < t; ++j) {
      const std::uint64_t* b = h.row_words(j).data();
      int disagreements = 0;
      for (int w = 0; w < words; ++w) disagreements += std::popcount(a[w] ^ b[w]);
      if (disagreements != half) return false;
    }
  }
  return true;
}

void certify_hadamard(SignMatrix& h) {
  if (!verify_hadamard(h))
    throw std::invalid_argument("certify_hadamard: matrix of order " +
                                std::to_string(h.order()) + " fails H*H^T = t*I");
  h.certified_ = true;
}

void normalize(SignMatrix& h) {
  const bool was_certified = h.hadamard_certified();
  for (int j = 0; j < h.order(); ++j)
    if (h.sign(0, j) < 0) h.negate_col(j);
  for (int i = 1; i < h.order(); ++i)
    if (h.sign(i, 0) < 0) h.negate_row(i);
  if (was_certified) certify_hadamard(h);
}

SignMatrix sylvester_double(const SignMatrix& h) {
  require_certified(h, "sylvester_double");
  const int t = h.order();
  SignMatrix out(2 * t);
  for (std::uint64_t& w : out.bits_) w = 0;
  for (int i = 0; i < t; ++i) {
    const std::uint64_t* src = h.row_words(i).data();
    splice_bits(out.row_data(i), 0, src, t, false);
    splice_bits(out.row_data(i), t, src, t, false);
    splice_bits(out.row_data(t + i), 0, src, t, false);
    splice_bits(out.row_data(t + i), t, src, t, true);
  }
  out.recipe_ = h.recipe() ? recipe_sylvester(h.recipe()) : Recipe{};
  normalize(out);
  certify_hadamard(out);
  return out;
}

SignMatrix paley_one(std::int64_t q) {
  if (q < 3 || !is_prime(q))
    throw std::invalid_argument("paley_one: q = " + std::to_string(q) + " is not prime");
  if (q % 4 != 3)
    throw std::invalid_argument("paley_one: q = " + std::to_string(q) +
                                " is not congruent to 3 mod 4");
  const int t = static_cast<int>(q + 1);
  // Quadratic residue table; chi(0) is never consulted (diagonal handled apart).
  std::vector<char> residue(static_cast<std::size_t>(q), 0);
  for (std::int64_t k = 1; k < q; ++k) residue[static_cast<std::size_t>(k * k % q)] = 1;

  SignMatrix out(t);
  for (std::uint64_t& w : out.bits_) w = 0;
  auto put = [&out](int i, int j, int v) {
    if (v > 0) out.row_data(i)[j >> 6] |= 1ULL << (j & 63);
  };
  for (int j = 0; j < t; ++j) put(0, j, +1);
  for (int i = 1; i < t; ++i) {
    put(i, 0, -1);
    for (int j = 1; j < t; ++j) {
      if (i == j) {
        put(i, j, +1);
      } else {
        const std::int64_t diff = ((j - i) % q + q) % q;
        put(i, j, residue[static_cast<std::size_t>(diff)] ? +1 : -1);
      }
    }
  }
  out.recipe_ = recipe_paley(q);
  normalize(out);
  certify_hadamard(out);
  return out;
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  require_certified(a, "kronecker");
  require_certified(b, "kronecker");
  const int ta = a.order();
  const int tb = b.order();
  SignMatrix out(ta * tb);
  for (std::uint64_t& w : out.bits_) w = 0;
  for (int ia = 0; ia < ta; ++ia) {
    for (int ib = 0; ib < tb; ++ib) {
      std::uint64_t* dst = out.row_data(ia * tb + ib);
      const std::uint64_t* src = b.row_words(ib).data();
      for (int ja = 0; ja < ta; ++ja)
        splice_bits(dst, ja * tb, src, tb, a.sign(ia, ja) < 0);
    }
  }
  Recipe left = a.recipe(), right = b.recipe();
  out.recipe_ = (left && right) ? recipe_kronecker(left, right) : Recipe{};
  normalize(out);
  certify_hadamard(out);
  return out;
}

SignMatrix realize(const Recipe& recipe) {
  if (!recipe) throw std::invalid_argument("realize: empty recipe");
  switch (recipe->kind) {
    case RecipeNode::Kind::Base1: {
      SignMatrix m(1);
      m.recipe_ = recipe;
      m.certified_ = true;
      return m;
    }
    case RecipeNode::Kind::Base2: {
      SignMatrix m(2);
      m.set_sign(1, 1, -1);
      m.recipe_ = recipe;
      certify_hadamard(m);
      return m;
    }
    case RecipeNode::Kind::PaleyI:
      return paley_one(recipe->paley_q);
    case RecipeNode::Kind::SylvesterDouble: {
      SignMatrix m = sylvester_double(realize(recipe->left));
      m.recipe_ = recipe;
      return m;
    }
    case RecipeNode::Kind::Kronecker: {
      SignMatrix m = kronecker(realize(recipe->left), realize(recipe->right));
      m.recipe_ = recipe;
      return m;
    }
  }
  throw std::logic_error("realize: unknown node kind");
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace ksz
