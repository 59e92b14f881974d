#pragma once

// Test-side oracles built only on the standard library.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <vector>

#include "fyperm/generator.hpp"
#include "fyperm/permutation.hpp"

namespace fyperm::testing {

inline std::vector<Symbol> identity_word(std::size_t n) {
  std::vector<Symbol> w(n);
  std::iota(w.begin(), w.end(), Symbol{1});
  return w;
}

/// Every permutation of degree n, in lexicographic order of words.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  auto w = identity_word(n);
  do {
    out.push_back(Permutation::from_word(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Orbit of 1 under the word map covers every symbol.
inline bool one_orbit(const std::vector<Symbol>& w) {
  std::size_t len = 0;
  Symbol s = 1;
  do {
    s = w[s - 1];
    ++len;
  } while (s != 1);
  return len == w.size();
}

inline std::vector<Permutation> all_cycles(std::size_t n) {
  std::vector<Permutation> out;
  auto w = identity_word(n);
  do {
    if (one_orbit(w)) out.push_back(Permutation::from_word(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Seeded random permutations via std::shuffle, independent of the library's generators.
class RandomPerms {
 public:
  explicit RandomPerms(std::uint64_t seed) : engine_(seed) {}
  Permutation operator()(std::size_t n) {
    auto w = identity_word(n);
    std::shuffle(w.begin(), w.end(), engine_);
    return Permutation::from_word(w);
  }
  std::size_t degree(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

/// Replays a fixed list of draws for ranges wider than one value.
class ScriptedSource final : public RandomSource {
 public:
  explicit ScriptedSource(std::vector<std::uint64_t> draws) : draws_(draws.begin(), draws.end()) {}
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) override {
    if (lo == hi) return lo;
    const auto v = draws_.front();
    draws_.pop_front();
    if (v < lo || v > hi) throw std::out_of_range("scripted draw outside the requested range");
    return v;
  }
  bool exhausted() const { return draws_.empty(); }

 private:
  std::deque<std::uint64_t> draws_;
};

/// Records every range request and answers with a wrapped SeededSource.
class RecordingSource final : public RandomSource {
 public:
  explicit RecordingSource(std::uint64_t seed) : inner_(seed) {}
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) override {
    const auto v = inner_.uniform_int(lo, hi);
    calls.push_back({lo, hi, v});
    return v;
  }
  struct Call {
    std::uint64_t lo, hi, value;
    bool operator==(const Call&) const = default;
  };
  std::vector<Call> calls;

 private:
  SeededSource inner_;
};

/// Pointwise composition, a first: i -> b(a(i)).
inline Permutation apply_then(const Permutation& a, const Permutation& b) {
  std::vector<Symbol> w(a.degree());
  for (Symbol i = 1; i <= a.degree(); ++i) w[i - 1] = b(a(i));
  return Permutation::from_word(w);
}

}  // namespace fyperm::testing
