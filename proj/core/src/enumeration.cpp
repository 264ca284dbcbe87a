#include "ksz/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "ksz/errors.hpp"

namespace ksz {

namespace {

// +1 sorts before -1.
bool lex_less(const std::vector<std::vector<std::int8_t>>& a,
              const std::vector<std::vector<std::int8_t>>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t i = 0; i < a[k].size(); ++i)
      if (a[k][i] != b[k][i]) return a[k][i] > b[k][i];
  return false;
}

std::vector<std::int8_t> induced_signs(const std::vector<std::int64_t>& partial) {
  std::vector<std::int8_t> out(partial.size());
  for (std::size_t j = 0; j < partial.size(); ++j) out[j] = partial[j] < 0 ? -1 : +1;
  return out;
}

std::int64_t abs_total(const std::vector<std::int64_t>& partial) {
  std::int64_t v = 0;
  for (std::int64_t s : partial) v += std::llabs(s);
  return v;
}

struct BitSlot {
  int axis;
  int coord;
};

struct ExactContext {
  const SignTensor* work;
  int n = 0;
  std::int64_t fibers = 0;
  int axes = 0;
  std::vector<BitSlot> bit_slots;
  std::vector<std::int64_t> stride;  // fiber stride per enumerated axis
};

struct RangeBest {
  std::int64_t value = -1;
  std::vector<std::vector<std::int8_t>> enumerated;
  std::vector<std::int8_t> induced;
};

// Enumerate assignment indices [lo, hi) in Gray order. Index i differs from
// i-1 in bit countr_zero(i), so a range can start anywhere by decoding
// gray(lo) and rebuilding the partial sums once.
void enumerate_range(const ExactContext& ctx, std::uint64_t lo, std::uint64_t hi,
                     RangeBest& best) {
  const SignTensor& work = *ctx.work;
  const int n = ctx.n;

  std::vector<std::vector<std::int8_t>> current(static_cast<std::size_t>(ctx.axes));
  for (int a = 0; a < ctx.axes; ++a)
    current[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(work.dims()[a]), +1);
  const std::uint64_t gray = lo ^ (lo >> 1);
  for (std::size_t b = 0; b < ctx.bit_slots.size(); ++b)
    if ((gray >> b) & 1) {
      const BitSlot slot = ctx.bit_slots[b];
      current[static_cast<std::size_t>(slot.axis)][static_cast<std::size_t>(slot.coord)] = -1;
    }

  // Rebuild sigma (the prefix-sign of each fiber) and the partial sums.
  std::vector<std::int8_t> sigma(static_cast<std::size_t>(ctx.fibers));
  std::vector<std::int64_t> partial(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix(static_cast<std::size_t>(std::max(ctx.axes, 1)), 0);
  for (std::int64_t f = 0; f < ctx.fibers; ++f) {
    int s = 1;
    for (int a = 0; a < ctx.axes; ++a)
      s *= current[static_cast<std::size_t>(a)][static_cast<std::size_t>(prefix[static_cast<std::size_t>(a)])];
    sigma[static_cast<std::size_t>(f)] = static_cast<std::int8_t>(s);
    const std::uint64_t* words = work.fiber_words(f).data();
    for (int j = 0; j < n; ++j) {
      const bool positive = (words[j >> 6] >> (j & 63)) & 1;
      partial[static_cast<std::size_t>(j)] += positive ? s : -s;
    }
    int a = ctx.axes - 1;
    while (a >= 0 && ++prefix[static_cast<std::size_t>(a)] == work.dims()[a])
      prefix[static_cast<std::size_t>(a--)] = 0;
  }

  auto consider = [&]() {
    const std::int64_t value = abs_total(partial);
    if (value > best.value ||
        (value == best.value && lex_less(current, best.enumerated))) {
      best.value = value;
      best.enumerated = current;
      best.induced = induced_signs(partial);
    }
  };
  consider();

  for (std::uint64_t step = lo + 1; step < hi; ++step) {
    const BitSlot slot = ctx.bit_slots[static_cast<std::size_t>(std::countr_zero(step))];
    current[static_cast<std::size_t>(slot.axis)][static_cast<std::size_t>(slot.coord)] =
        static_cast<std::int8_t>(
            -current[static_cast<std::size_t>(slot.axis)][static_cast<std::size_t>(slot.coord)]);

    const std::int64_t s = ctx.stride[static_cast<std::size_t>(slot.axis)];
    const std::int64_t block = s * work.dims()[slot.axis];
    for (std::int64_t base = slot.coord * s; base < ctx.fibers; base += block) {
      for (std::int64_t f = base; f < base + s; ++f) {
        const std::int64_t delta = -2 * sigma[static_cast<std::size_t>(f)];
        sigma[static_cast<std::size_t>(f)] =
            static_cast<std::int8_t>(-sigma[static_cast<std::size_t>(f)]);
        const std::uint64_t* words = work.fiber_words(f).data();
        for (int j = 0; j < n; ++j) {
          const bool positive = (words[j >> 6] >> (j & 63)) & 1;
          partial[static_cast<std::size_t>(j)] += positive ? delta : -delta;
        }
      }
    }
    consider();
  }
}

int env_workers() {
  const char* text = std::getenv("KSZ_THREADS");
  if (text == nullptr) return 1;
  const long value = std::strtol(text, nullptr, 10);
  if (value < 1) return 1;
  return static_cast<int>(std::min<long>(value, 64));
}

}  // namespace

EnumerationResult max_abs_sum_exact(const SignTensor& tensor, int eliminated_axis,
                                    std::uint64_t budget) {
  const int m = tensor.arity();
  if (eliminated_axis < 0 || eliminated_axis >= m)
    throw std::invalid_argument("max_abs_sum_exact: bad eliminated axis");

  std::int64_t bit_count = -1;
  for (int k = 0; k < m; ++k)
    if (k != eliminated_axis) bit_count += tensor.dims()[k];
  bit_count = std::max<std::int64_t>(bit_count, 0);
  if (bit_count > 62 || (bit_count > 0 && (1ULL << bit_count) > budget))
    throw BudgetExceeded("max_abs_sum_exact: 2^" + std::to_string(bit_count) +
                         " sign assignments exceed the budget of " + std::to_string(budget) +
                         " evaluations; use the alternating-ascent heuristic instead");

  const SignTensor work = tensor.with_axis_last(eliminated_axis);

  ExactContext ctx;
  ctx.work = &work;
  ctx.n = work.last_dim();
  ctx.fibers = work.fiber_count();
  ctx.axes = m - 1;
  ctx.bit_slots.reserve(static_cast<std::size_t>(bit_count));
  for (int a = 0; a < ctx.axes; ++a)
    for (int i = 0; i < work.dims()[a]; ++i)
      if (!(a == 0 && i == 0)) ctx.bit_slots.push_back({a, i});
  ctx.stride.assign(static_cast<std::size_t>(std::max(ctx.axes, 1)), 1);
  for (int a = ctx.axes - 2; a >= 0; --a)
    ctx.stride[static_cast<std::size_t>(a)] =
        ctx.stride[static_cast<std::size_t>(a + 1)] * work.dims()[a + 1];

  const std::uint64_t steps = bit_count > 0 ? (1ULL << bit_count) : 1;
  const int workers =
      std::min<std::uint64_t>(env_workers(), steps >= 4096 ? steps / 2048 : 1);

  RangeBest best;
  if (workers <= 1) {
    enumerate_range(ctx, 0, steps, best);
  } else {
    // Contiguous ranges; the (max value, lex-min witness) reduction is
    // associative, so the merged result is independent of the split.
    std::vector<RangeBest> bests(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = steps / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t hi = (w + 1 == workers) ? steps : lo + chunk;
      pool.emplace_back(enumerate_range, std::cref(ctx), lo, hi,
                        std::ref(bests[static_cast<std::size_t>(w)]));
    }
    for (std::thread& t : pool) t.join();
    for (RangeBest& b : bests) {
      if (b.value > best.value ||
          (b.value == best.value && lex_less(b.enumerated, best.enumerated))) {
        best = std::move(b);
      }
    }
  }

  EnumerationResult result;
  result.value = best.value;
  result.witness.resize(static_cast<std::size_t>(m));
  int pos = 0;
  for (int k = 0; k < m; ++k) {
    if (k == eliminated_axis) continue;
    result.witness[static_cast<std::size_t>(k)] =
        std::move(best.enumerated[static_cast<std::size_t>(pos++)]);
  }
  result.witness[static_cast<std::size_t>(eliminated_axis)] = std::move(best.induced);
  return result;
}

EnumerationResult max_abs_sum_ascent(const SignTensor& tensor, int restarts,
                                     std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("max_abs_sum_ascent: restarts must be >= 1");
  const int m = tensor.arity();
  const int n = tensor.last_dim();
  const std::int64_t fibers = tensor.fiber_count();

  std::int64_t best = -1;
  std::vector<std::vector<std::int8_t>> best_signs;

  std::vector<std::vector<std::int8_t>> x(static_cast<std::size_t>(m));
  std::vector<std::int64_t> partial;
  std::vector<int> prefix(static_cast<std::size_t>(std::max(m - 1, 0)));

  for (int run = 0; run < restarts; ++run) {
    for (int k = 0; k < m; ++k)
      x[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(tensor.dims()[k]), +1);
    if (run > 0) {
      std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(run));
      for (auto& vec : x)
        for (auto& v : vec) v = (rng() & 1) ? +1 : -1;
    }

    bool changed = true;
    while (changed) {
      changed = false;
      for (int axis = 0; axis < m; ++axis) {
        partial.assign(static_cast<std::size_t>(tensor.dims()[axis]), 0);
        std::fill(prefix.begin(), prefix.end(), 0);
        for (std::int64_t f = 0; f < fibers; ++f) {
          int sigma_other = 1;
          for (int k = 0; k + 1 < m; ++k)
            if (k != axis)
              sigma_other *= x[static_cast<std::size_t>(k)]
                              [static_cast<std::size_t>(prefix[static_cast<std::size_t>(k)])];
          if (axis == m - 1) {
            for (int j = 0; j < n; ++j)
              partial[static_cast<std::size_t>(j)] += sigma_other * tensor.sign_in_fiber(f, j);
          } else {
            std::int64_t inner = 0;
            for (int j = 0; j < n; ++j)
              inner += tensor.sign_in_fiber(f, j) *
                       x[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)];
            partial[static_cast<std::size_t>(prefix[static_cast<std::size_t>(axis)])] +=
                sigma_other * inner;
          }
          int k = m - 2;
          while (k >= 0 && ++prefix[static_cast<std::size_t>(k)] == tensor.dims()[k])
            prefix[static_cast<std::size_t>(k--)] = 0;
        }
        for (std::size_t i = 0; i < partial.size(); ++i) {
          const std::int8_t want = partial[i] < 0 ? -1 : +1;
          if (x[static_cast<std::size_t>(axis)][i] != want) {
            x[static_cast<std::size_t>(axis)][i] = want;
            changed = true;
          }
        }
      }
    }

    const std::int64_t value = std::llabs(evaluate_at(tensor, x));
    if (value > best) {
      best = value;
      best_signs = x;
    }
  }

  return {best, std::move(best_signs)};
}

}  // namespace ksz
