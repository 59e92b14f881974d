#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fyperm/codec.hpp"
#include "fyperm/permutation.hpp"

namespace fyperm {

/// Source of uniform bounded integers. Implementations must be unbiased for
/// every range size.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  /// Uniform on [lo, hi]. A one-value range returns lo without consuming entropy.
  virtual std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) = 0;
};

/// Seeded mt19937_64 stream; (seed, stream) fully determines the draw
/// sequence on every platform.
class SeededSource final : public RandomSource {
 public:
  explicit SeededSource(std::uint64_t seed, std::uint64_t stream = 0);
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) override;
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct SwapStep {
  Symbol k;
  Symbol j;
  friend bool operator==(const SwapStep&, const SwapStep&) = default;
};

/// Steps (k, j_k) for k = n down to 1, the trivial final (1, 1) included.
struct SwapTrace {
  std::size_t n = 0;
  std::vector<SwapStep> steps;
  friend bool operator==(const SwapTrace&, const SwapTrace&) = default;
};

bool is_valid_trace(const SwapTrace& trace);
/// The trace of decoding `code`, with the trailing self-swaps appended.
SwapTrace trace_of(const TriangularCode& code);

struct Generated {
  Permutation perm;
  SwapTrace trace;
};

Generated fisher_yates(std::size_t n, RandomSource& rng);
Generated sattolo(std::size_t n, RandomSource& rng);
/// j uniform on [1..k-m] for k = n down to m+1. m = 0 is Fisher-Yates,
/// m = 1 is Sattolo; m >= n leaves the identity. Skipped levels appear in
/// the trace as self-swaps.
Generated general_m(std::size_t n, std::size_t m, RandomSource& rng);

/// One up() step with q uniform on [1..n+1], or on [1..n] when strict.
Permutation grow(const Permutation& state, bool strict, RandomSource& rng);

}  // namespace fyperm
