#include "fyperm/generator.hpp"

#include <stdexcept>

namespace fyperm {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed;
  const std::uint64_t a = splitmix64(x);
  x ^= stream * 0xD1B54A32D192ED03ULL;
  const std::uint64_t b = splitmix64(x);
  return std::mt19937_64(a ^ (b << 1 | b >> 63));
}

void append_self_swaps(SwapTrace& t, std::size_t from_k) {
  for (std::size_t k = from_k; k >= 1; --k) t.steps.push_back({static_cast<Symbol>(k), static_cast<Symbol>(k)});
}

}  // namespace

SeededSource::SeededSource(std::uint64_t seed, std::uint64_t stream) : engine_(make_engine(seed, stream)) {}

std::uint64_t SeededSource::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  if (hi == lo) return lo;
  const std::uint64_t range = hi - lo;
  if (range == UINT64_MAX) return engine_();
  // Lemire: multiply-shift with rejection of the biased low band.
  const std::uint64_t s = range + 1;
  __uint128_t m = static_cast<__uint128_t>(engine_()) * s;
  auto low = static_cast<std::uint64_t>(m);
  if (low < s) {
    const std::uint64_t threshold = (0 - s) % s;
    while (low < threshold) {
      m = static_cast<__uint128_t>(engine_()) * s;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return lo + static_cast<std::uint64_t>(m >> 64);
}

bool is_valid_trace(const SwapTrace& trace) {
  if (trace.steps.size() != trace.n) return false;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto [k, j] = trace.steps[i];
    if (k != trace.n - i || j < 1 || j > k) return false;
  }
  return true;
}

SwapTrace trace_of(const TriangularCode& code) {
  SwapTrace t{code.degree(), {}};
  for (std::size_t k = code.degree(); k >= 2; --k) t.steps.push_back({static_cast<Symbol>(k), code.choice(k)});
  t.steps.push_back({1, 1});
  return t;
}

Generated fisher_yates(std::size_t n, RandomSource& rng) {
  Permutation p = Permutation::identity(n);
  SwapTrace t{n, {}};
  for (std::size_t k = n; k >= 1; --k) {
    const auto j = static_cast<Symbol>(rng.uniform_int(1, k));
    p.swap_positions(j, static_cast<Symbol>(k));
    t.steps.push_back({static_cast<Symbol>(k), j});
  }
  return {std::move(p), std::move(t)};
}

Generated sattolo(std::size_t n, RandomSource& rng) {
  Permutation p = Permutation::identity(n);
  SwapTrace t{n, {}};
  for (std::size_t k = n; k >= 2; --k) {
    const auto j = static_cast<Symbol>(rng.uniform_int(1, k - 1));
    p.swap_positions(j, static_cast<Symbol>(k));
    t.steps.push_back({static_cast<Symbol>(k), j});
  }
  t.steps.push_back({1, 1});
  return {std::move(p), std::move(t)};
}

Generated general_m(std::size_t n, std::size_t m, RandomSource& rng) {
  Permutation p = Permutation::identity(n);
  SwapTrace t{n, {}};
  std::size_t k = n;
  for (; k >= m + 1 && k >= 1; --k) {
    const auto j = static_cast<Symbol>(rng.uniform_int(1, k - m));
    p.swap_positions(j, static_cast<Symbol>(k));
    t.steps.push_back({static_cast<Symbol>(k), j});
  }
  append_self_swaps(t, k);
  return {std::move(p), std::move(t)};
}

Permutation grow(const Permutation& state, bool strict, RandomSource& rng) {
  const auto n = state.degree();
  const auto q = static_cast<Symbol>(rng.uniform_int(1, strict ? n : n + 1));
  return up(state, q);
}

}  // namespace fyperm
