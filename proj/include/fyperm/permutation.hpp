#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fyperm {

/// A symbol of [n] = {1, ..., n}. Positions and symbols share this type.
using Symbol = std::uint32_t;

/// A permutation of [n] stored as its one-line word: word()[i-1] is the
/// image of i. Composition is a right action: compose(a, b) applies a first.
class Permutation {
 public:
  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, Symbol a, Symbol b);
  /// Validates that `word` is a bijection of {1..word.size()}.
  static Permutation from_word(std::vector<Symbol> word);

  std::size_t degree() const noexcept { return word_.size(); }
  /// Image of symbol i (1-based).
  Symbol operator()(Symbol i) const { return word_[i - 1]; }
  std::span<const Symbol> word() const noexcept { return word_; }

  /// Exchanges the entries at word positions a and b; this is the
  /// premultiplication tau(a, b) * this.
  void swap_positions(Symbol a, Symbol b) noexcept { std::swap(word_[a - 1], word_[b - 1]); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Symbol> word) : word_(std::move(word)) {}
  std::vector<Symbol> word_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

/// Appends the fixed symbol n+1.
Permutation ext(const Permutation& p);
/// Drops the top symbol, which must be fixed.
Permutation rest(const Permutation& p);

/// q(p): the position holding the top symbol n.
Symbol top_preimage(const Permutation& p);
/// Q(p): the image of the top symbol, i.e. the last word entry.
Symbol top_image(const Permutation& p);

/// Inserts a new top symbol n+1 at position q; the displaced entry moves to
/// position n+1. Requires 1 <= q <= n+1.
Permutation up(const Permutation& p, Symbol q);

struct Peeled {
  Permutation rest;
  Symbol q;  // position the top symbol occupied
  friend bool operator==(const Peeled&, const Peeled&) = default;
};

/// Inverse of up(): swaps positions q(p) and n, then restricts. Requires degree >= 2.
Peeled down(const Permutation& p);

struct CycleClassification {
  enum class Kind { identity, single_cycle, general };
  Kind kind = Kind::identity;
  /// Length of the single nontrivial orbit when kind == single_cycle.
  std::size_t cycle_length = 0;
  /// All orbit lengths, fixed points included, in decreasing order.
  std::vector<std::size_t> cycle_lengths;
};

CycleClassification classify_cycles(const Permutation& p);
/// True for n-cycles; the degree-1 identity counts as a 1-cycle.
bool is_full_cycle(const Permutation& p);
std::size_t fixed_point_count(const Permutation& p);
std::size_t inversion_count(const Permutation& p);

/// "2 3 4 1"
std::string to_string(const Permutation& p);
/// 0-based compact digits, "1230". Requires degree <= 10.
std::string to_compact(const Permutation& p);

/// Accepts a 1-based word separated by spaces or commas.
Permutation parse_word(std::string_view text);
/// Accepts a 0-based compact digit string such as "1230".
Permutation parse_compact(std::string_view text);

}  // namespace fyperm
