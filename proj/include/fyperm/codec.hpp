#pragma once

// Mixed-radix encodings of permutations and cycles.
//
// A TriangularCode stores the Fisher-Yates choices (j_n, ..., j_2), most
// significant first; decoding swaps word positions j_k and k for
// k = n down to 2. Strict codes (j_k < k) are Sattolo's choices and decode
// to n-cycles. DualCode holds the same choices least significant first
// (d_1, ..., d_n with d_k = j_k), which is the order of lex enumeration on
// [1] x [2] x ... x [n]. InversionCode is the inversion table.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fyperm/permutation.hpp"

namespace fyperm {

using Rank = std::uint64_t;

/// Largest degree whose code space fits a 64-bit rank.
inline constexpr std::size_t kMaxRankDegree = 20;

class TriangularCode {
 public:
  /// `digits` = (j_n, ..., j_2), 1-based; empty for n = 1.
  TriangularCode(std::size_t n, std::vector<Symbol> digits, bool strict = false);

  static TriangularCode trivial(std::size_t n);
  static TriangularCode first(std::size_t n, bool strict);

  std::size_t degree() const noexcept { return n_; }
  bool strict() const noexcept { return strict_; }
  const std::vector<Symbol>& digits() const noexcept { return digits_; }
  /// j_k for 2 <= k <= n.
  Symbol choice(std::size_t k) const { return digits_[n_ - k]; }
  /// Number of admissible values of j_k.
  std::size_t radix(std::size_t k) const noexcept { return strict_ ? k - 1 : k; }

  /// Steps to the lex successor (j_2 fastest). Returns false after the last code.
  bool advance();

  friend bool operator==(const TriangularCode&, const TriangularCode&) = default;

 private:
  std::size_t n_;
  std::vector<Symbol> digits_;
  bool strict_;
};

class DualCode {
 public:
  /// `digits` = (d_1, ..., d_n), 1-based, d_k <= k (d_k < k when strict, k >= 2).
  DualCode(std::vector<Symbol> digits, bool strict = false);

  std::size_t degree() const noexcept { return digits_.size(); }
  bool strict() const noexcept { return strict_; }
  const std::vector<Symbol>& digits() const noexcept { return digits_; }

  friend bool operator==(const DualCode&, const DualCode&) = default;

 private:
  std::vector<Symbol> digits_;
  bool strict_;
};

class InversionCode {
 public:
  /// `digits` = (d_1, ..., d_n), 0 <= d_i <= i-1.
  explicit InversionCode(std::vector<std::uint32_t> digits);

  std::size_t degree() const noexcept { return digits_.size(); }
  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }

  friend bool operator==(const InversionCode&, const InversionCode&) = default;

 private:
  std::vector<std::uint32_t> digits_;
};

Permutation fy_decode(const TriangularCode& code);
/// Peels the top symbol with down() and records its image at every level.
/// Throws when `strict` is requested and p is not an n-cycle.
TriangularCode fy_encode(const Permutation& p, bool strict = false);

/// tau_1, ..., tau_{n-1}: tau_{k-1} = tau(k, j_k). Their product, leftmost
/// acting first, is fy_decode(code).
std::vector<Permutation> triangular_factors(const TriangularCode& code);

enum class LexOrder {
  big_endian,     // j_n most significant: lex on [n] x ... x [1]
  little_endian,  // j_2 most significant: lex on [1] x ... x [n]
};

Rank code_space_size(std::size_t n, bool strict);
Rank rank(const TriangularCode& code, LexOrder order);
TriangularCode unrank(Rank r, std::size_t n, LexOrder order, bool strict = false);

Permutation dual_decode(const DualCode& code);
DualCode dual_encode(const Permutation& p, bool strict = false);
DualCode to_dual(const TriangularCode& code);
TriangularCode from_dual(const DualCode& code);

/// d_i counts the symbols smaller than i that sit to the right of i.
InversionCode inv_encode(const Permutation& p);
Permutation inv_decode(const InversionCode& code);

/// Reinterprets a strict code in the plain radix space; digits are unchanged.
TriangularCode inc(const TriangularCode& strict_code);

// Rendering. Canonical text is comma-separated 1-based digits in storage
// order. The table layout is compact 0-based digits; for triangular codes it
// leads with the constant radix-1 digit: (0, j_n - 1, ..., j_2 - 1).
std::string to_string(const TriangularCode& code);
std::string to_table_layout(const TriangularCode& code);
std::string to_string(const DualCode& code);
std::string to_table_layout(const DualCode& code);
std::string to_string(const InversionCode& code);
std::string to_table_layout(const InversionCode& code);

/// Accepts "j_n,...,j_2" (1-based), or with `zero_based` either the same
/// list 0-based or the compact table form with its leading constant digit.
TriangularCode parse_triangular(std::string_view text, std::size_t n, bool strict, bool zero_based);
/// Accepts d_1..d_n or d_2..d_n, comma-separated or compact.
DualCode parse_dual(std::string_view text, std::size_t n, bool strict, bool zero_based);
/// Digits are 0-based counts; d_1 may be omitted.
InversionCode parse_inversion(std::string_view text, std::size_t n);

}  // namespace fyperm
