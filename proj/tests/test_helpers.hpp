#pragma once

#include <random>
#include <vector>

#include "ksz/sign_matrix.hpp"
#include "ksz/sign_tensor.hpp"

namespace ksz_test {

// Independent H*H^T oracle: dense integer matrix product, no bit tricks.
inline bool oracle_is_hadamard(const ksz::SignMatrix& h) {
  const int t = h.order();
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      long long dot = 0;
      for (int k = 0; k < t; ++k) dot += static_cast<long long>(h.sign(i, k)) * h.sign(j, k);
      if (dot != (i == j ? t : 0)) return false;
    }
  }
  return true;
}

inline ksz::SignMatrix random_sign_matrix(std::mt19937_64& rng, int order) {
  ksz::SignMatrix m(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) m.set_sign(i, j, (rng() & 1) ? +1 : -1);
  return m;
}

inline ksz::SignTensor random_tensor(std::mt19937_64& rng, const std::vector<int>& dims) {
  ksz::SignTensor t(dims);
  std::vector<int> idx(dims.size(), 0);
  while (true) {
    t.set_sign_at(idx, (rng() & 1) ? +1 : -1);
    int k = static_cast<int>(dims.size()) - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == dims[static_cast<std::size_t>(k)])
      idx[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
  }
  return t;
}

inline std::vector<std::vector<std::int8_t>> random_signs(std::mt19937_64& rng,
                                                          const std::vector<int>& dims) {
  std::vector<std::vector<std::int8_t>> out(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    out[k].resize(static_cast<std::size_t>(dims[k]));
    for (auto& v : out[k]) v = (rng() & 1) ? +1 : -1;
  }
  return out;
}

}  // namespace ksz_test
