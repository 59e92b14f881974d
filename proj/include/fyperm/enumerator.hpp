#pragma once

// Exhaustive generation over code spaces: lex order, reflected mixed-radix
// Gray order, and the permutation sequences they induce.
//
// A code space is a mixed-radix word space plus a decoder. Words hold
// 0-based digits in the encoding's storage order, most significant first:
//   fy    (j_n - 1, ..., j_2 - 1)   radices n, ..., 2   (strict: n-1, ..., 1)
//   dual  (d_2 - 1, ..., d_n - 1)   radices 2, ..., n   (strict: 1, ..., n-1)
//   inv   (d_1, ..., d_n)           radices 1, ..., n
// so lex order on words is big-endian lex for fy and little-endian for dual.
// Every stream holds one word and one permutation.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fyperm/codec.hpp"
#include "fyperm/permutation.hpp"

namespace fyperm {

enum class Family { perm, cycle };
enum class Encoding { fy, dual, inv };
enum class Side { left, right };
enum class DeltaClass { identity, adjacent_transposition, transposition, three_cycle, other };

std::string_view to_string(DeltaClass c);

using Word = std::vector<std::uint32_t>;

class CodeSpace {
 public:
  /// Throws std::invalid_argument for n = 0 or for inv with the cycle family.
  CodeSpace(std::size_t n, Family family, Encoding encoding);

  std::size_t degree() const noexcept { return n_; }
  Family family() const noexcept { return family_; }
  Encoding encoding() const noexcept { return encoding_; }
  const std::vector<std::uint32_t>& radices() const noexcept { return radices_; }

  Permutation decode(const Word& w) const;
  Word encode(const Permutation& p) const;
  /// Canonical (comma-separated, 1-based for fy/dual) or table layout.
  std::string render(const Word& w, bool table_layout) const;

 private:
  std::size_t n_;
  Family family_;
  Encoding encoding_;
  std::vector<std::uint32_t> radices_;
};

class LexStream {
 public:
  LexStream(std::size_t n, Family family, Encoding encoding);
  /// Moves to the next item; the first call yields the first item.
  bool next();
  const Word& word() const noexcept { return word_; }
  const Permutation& perm() const noexcept { return perm_; }
  const CodeSpace& space() const noexcept { return space_; }

 private:
  CodeSpace space_;
  Word word_;
  Permutation perm_;
  bool started_ = false;
  bool done_ = false;
};

struct GrayStep {
  std::size_t position;  // index into the word
  std::uint32_t old_digit;
  std::uint32_t new_digit;
  friend bool operator==(const GrayStep&, const GrayStep&) = default;
};

/// Reflected mixed-radix Gray sequence, last digit fastest.
class GrayCounter {
 public:
  explicit GrayCounter(std::vector<std::uint32_t> radices);
  bool next();
  const Word& word() const noexcept { return word_; }
  /// The change that produced word(); empty for the first word.
  const std::optional<GrayStep>& step() const noexcept { return step_; }

 private:
  std::vector<std::uint32_t> radices_;
  Word word_;
  std::vector<int> dir_;
  std::optional<GrayStep> step_;
  bool started_ = false;
  bool done_ = false;
};

/// delta(prev, next, left) = d with compose(prev, d) = next;
/// delta(prev, next, right) = d with compose(d, prev) = next, a position permutation.
Permutation delta(const Permutation& prev, const Permutation& next, Side side);
/// Adjacency refers to the two moved points differing by one.
DeltaClass classify_delta(const Permutation& d);

struct InducedStep {
  GrayStep step;
  Permutation induced;  // right-side quotient
  DeltaClass cls;
};

/// Gray order over a code space with the induced permutations.
class GrayPermStream {
 public:
  GrayPermStream(std::size_t n, Family family, Encoding encoding);
  bool next();
  const Word& word() const noexcept { return counter_.word(); }
  const Permutation& perm() const noexcept { return perm_; }
  /// Empty for the first item.
  const std::optional<InducedStep>& induced() const noexcept { return induced_; }
  const CodeSpace& space() const noexcept { return space_; }

 private:
  CodeSpace space_;
  GrayCounter counter_;
  Permutation perm_;
  std::optional<InducedStep> induced_;
};

/// Plain permutations in Gray order of the fy or inv encoding.
GrayPermStream gray_perm_stream(std::size_t n, Encoding encoding);
/// n-cycles in Gray order of the strict fy encoding.
GrayPermStream gray_cycle_stream(std::size_t n);

/// The predicted class of one fy Gray step that changes j_k from old_j to
/// new_j (1-based): a transposition when either is the trivial choice k,
/// otherwise the 3-cycle j' -> j -> k -> j'.
DeltaClass predicted_fy_delta(std::size_t k, Symbol old_j, Symbol new_j);

struct WrapReport {
  std::size_t n = 0;
  std::size_t items = 0;
  std::size_t digits_changed = 0;  // between the last and first words
  DeltaClass cls = DeltaClass::identity;
  bool closes() const { return digits_changed <= 1 && cls == DeltaClass::three_cycle; }
};

/// Whether the cycle Gray sequence closes up into a Hamiltonian cycle.
WrapReport cycle_gray_wrap(std::size_t n);

/// The unique factorization into triangular transpositions; throws when p
/// is outside the family.
std::vector<Permutation> sims_factor(const Permutation& p, Family family);

}  // namespace fyperm
