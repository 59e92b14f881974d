#include "fyperm/codec.hpp"

#include <charconv>
#include <stdexcept>

namespace fyperm {

namespace {

// Comma/space separated values, or compact single digits when the text has
// one of the expected lengths and no separator.
std::vector<std::uint32_t> parse_digit_list(std::string_view text, std::size_t n) {
  std::vector<std::uint32_t> out;
  const bool has_separator = text.find_first_of(", ") != std::string_view::npos;
  if (!has_separator && text.size() > 1 && (text.size() == n || text.size() + 1 == n)) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("code digits must be decimal");
      out.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ') {
      ++i;
      continue;
    }
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw std::invalid_argument("malformed code digit list");
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

char digit_char(std::uint32_t v) {
  if (v > 9) throw std::invalid_argument("compact layout needs digits below 10");
  return static_cast<char>('0' + v);
}

}  // namespace

TriangularCode::TriangularCode(std::size_t n, std::vector<Symbol> digits, bool strict)
    : n_(n), digits_(std::move(digits)), strict_(strict) {
  if (n_ == 0) throw std::invalid_argument("code degree must be at least 1");
  if (digits_.size() != n_ - 1) throw std::invalid_argument("triangular code needs n-1 digits");
  for (std::size_t k = 2; k <= n_; ++k) {
    const Symbol j = choice(k);
    if (j < 1 || j > radix(k)) throw std::out_of_range("triangular code digit outside its radix");
  }
}

TriangularCode TriangularCode::trivial(std::size_t n) {
  std::vector<Symbol> d;
  for (std::size_t k = n; k >= 2; --k) d.push_back(static_cast<Symbol>(k));
  return TriangularCode(n, std::move(d), false);
}

TriangularCode TriangularCode::first(std::size_t n, bool strict) {
  return TriangularCode(n, std::vector<Symbol>(n == 0 ? 0 : n - 1, 1), strict);
}

bool TriangularCode::advance() {
  for (std::size_t i = digits_.size(); i-- > 0;) {
    const std::size_t k = n_ - i;
    if (digits_[i] < radix(k)) {
      ++digits_[i];
      return true;
    }
    digits_[i] = 1;
  }
  return false;
}

DualCode::DualCode(std::vector<Symbol> digits, bool strict) : digits_(std::move(digits)), strict_(strict) {
  if (digits_.empty()) throw std::invalid_argument("dual code needs at least one digit");
  for (std::size_t k = 1; k <= digits_.size(); ++k) {
    const std::size_t limit = (strict_ && k >= 2) ? k - 1 : k;
    if (digits_[k - 1] < 1 || digits_[k - 1] > limit) throw std::out_of_range("dual code digit outside its radix");
  }
}

InversionCode::InversionCode(std::vector<std::uint32_t> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw std::invalid_argument("inversion code needs at least one digit");
  for (std::size_t i = 1; i <= digits_.size(); ++i)
    if (digits_[i - 1] > i - 1) throw std::out_of_range("inversion digit d_i exceeds i-1");
}

Permutation fy_decode(const TriangularCode& code) {
  Permutation p = Permutation::identity(code.degree());
  for (std::size_t k = code.degree(); k >= 2; --k) p.swap_positions(code.choice(k), static_cast<Symbol>(k));
  return p;
}

TriangularCode fy_encode(const Permutation& p, bool strict) {
  if (strict && !is_full_cycle(p)) throw std::invalid_argument("strict encoding needs an n-cycle");
  std::vector<Symbol> digits;
  digits.reserve(p.degree());
  Permutation cur = p;
  while (cur.degree() >= 2) {
    digits.push_back(top_image(cur));
    cur = down(cur).rest;
  }
  return TriangularCode(p.degree(), std::move(digits), strict);
}

std::vector<Permutation> triangular_factors(const TriangularCode& code) {
  std::vector<Permutation> out;
  for (std::size_t k = 2; k <= code.degree(); ++k)
    out.push_back(Permutation::transposition(code.degree(), static_cast<Symbol>(k), code.choice(k)));
  return out;
}

Rank code_space_size(std::size_t n, bool strict) {
  if (n == 0 || n > kMaxRankDegree) throw std::out_of_range("rank degree outside [1..20]");
  Rank r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= strict ? k - 1 : k;
  return r;
}

Rank rank(const TriangularCode& code, LexOrder order) {
  const auto n = code.degree();
  if (n > kMaxRankDegree) throw std::out_of_range("rank degree outside [1..20]");
  Rank r = 0;
  if (order == LexOrder::big_endian) {
    for (std::size_t k = n; k >= 2; --k) r = r * code.radix(k) + (code.choice(k) - 1);
  } else {
    for (std::size_t k = 2; k <= n; ++k) r = r * code.radix(k) + (code.choice(k) - 1);
  }
  return r;
}

TriangularCode unrank(Rank r, std::size_t n, LexOrder order, bool strict) {
  if (r >= code_space_size(n, strict)) throw std::out_of_range("rank outside the code space");
  std::vector<Symbol> digits(n - 1);
  auto radix = [strict](std::size_t k) { return static_cast<Rank>(strict ? k - 1 : k); };
  if (order == LexOrder::big_endian) {
    for (std::size_t k = 2; k <= n; ++k) {
      digits[n - k] = static_cast<Symbol>(r % radix(k)) + 1;
      r /= radix(k);
    }
  } else {
    for (std::size_t k = n; k >= 2; --k) {
      digits[n - k] = static_cast<Symbol>(r % radix(k)) + 1;
      r /= radix(k);
    }
  }
  return TriangularCode(n, std::move(digits), strict);
}

DualCode to_dual(const TriangularCode& code) {
  std::vector<Symbol> d(code.degree());
  d[0] = 1;
  for (std::size_t k = 2; k <= code.degree(); ++k) d[k - 1] = code.choice(k);
  return DualCode(std::move(d), code.strict());
}

TriangularCode from_dual(const DualCode& code) {
  const auto n = code.degree();
  std::vector<Symbol> j;
  for (std::size_t k = n; k >= 2; --k) j.push_back(code.digits()[k - 1]);
  return TriangularCode(n, std::move(j), code.strict());
}

Permutation dual_decode(const DualCode& code) {
  // tau(1, d_1) tau(2, d_2) ... tau(n, d_n), the k = 1 factor acting first.
  Permutation p = Permutation::identity(code.degree());
  for (std::size_t k = code.degree(); k >= 1; --k) p.swap_positions(code.digits()[k - 1], static_cast<Symbol>(k));
  return p;
}

DualCode dual_encode(const Permutation& p, bool strict) {
  if (strict && !is_full_cycle(p)) throw std::invalid_argument("strict encoding needs an n-cycle");
  std::vector<Symbol> d(p.degree(), 1);
  Permutation cur = p;
  for (std::size_t k = p.degree(); k >= 2; --k) {
    d[k - 1] = top_image(cur);
    cur = down(cur).rest;
  }
  return DualCode(std::move(d), strict);
}

InversionCode inv_encode(const Permutation& p) {
  const auto n = p.degree();
  const Permutation pos = inverse(p);
  std::vector<std::uint32_t> d(n, 0);
  for (Symbol i = 1; i <= n; ++i)
    for (Symbol s = 1; s < i; ++s) d[i - 1] += pos(s) > pos(i);
  return InversionCode(std::move(d));
}

Permutation inv_decode(const InversionCode& code) {
  // Insert symbols in increasing order, leaving d_i smaller symbols to the right of i.
  std::vector<Symbol> w;
  w.reserve(code.degree());
  for (std::size_t i = 1; i <= code.degree(); ++i) {
    const auto at = w.size() - code.digits()[i - 1];
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(at), static_cast<Symbol>(i));
  }
  return Permutation::from_word(std::move(w));
}

TriangularCode inc(const TriangularCode& strict_code) {
  return TriangularCode(strict_code.degree(), strict_code.digits(), false);
}

std::string to_string(const TriangularCode& code) {
  std::string s;
  for (Symbol j : code.digits()) {
    if (!s.empty()) s += ',';
    s += std::to_string(j);
  }
  return s;
}

std::string to_table_layout(const TriangularCode& code) {
  std::string s = "0";
  for (Symbol j : code.digits()) s += digit_char(j - 1);
  return s;
}

std::string to_string(const DualCode& code) {
  std::string s;
  for (Symbol d : code.digits()) {
    if (!s.empty()) s += ',';
    s += std::to_string(d);
  }
  return s;
}

std::string to_table_layout(const DualCode& code) {
  std::string s;
  for (Symbol d : code.digits()) s += digit_char(d - 1);
  return s;
}

std::string to_string(const InversionCode& code) {
  std::string s;
  for (auto d : code.digits()) {
    if (!s.empty()) s += ',';
    s += std::to_string(d);
  }
  return s;
}

std::string to_table_layout(const InversionCode& code) {
  std::string s;
  for (auto d : code.digits()) s += digit_char(d);
  return s;
}

TriangularCode parse_triangular(std::string_view text, std::size_t n, bool strict, bool zero_based) {
  auto raw = parse_digit_list(text, n);
  if (zero_based && raw.size() == n) {
    if (raw.front() != 0) throw std::invalid_argument("table layout starts with the constant digit 0");
    raw.erase(raw.begin());
  }
  std::vector<Symbol> digits;
  for (auto v : raw) digits.push_back(zero_based ? v + 1 : v);
  return TriangularCode(n, std::move(digits), strict);
}

DualCode parse_dual(std::string_view text, std::size_t n, bool strict, bool zero_based) {
  auto raw = parse_digit_list(text, n);
  std::vector<Symbol> digits;
  if (raw.size() + 1 == n) digits.push_back(1);
  for (auto v : raw) digits.push_back(zero_based ? v + 1 : v);
  if (digits.size() != n) throw std::invalid_argument("dual code needs n or n-1 digits");
  return DualCode(std::move(digits), strict);
}

InversionCode parse_inversion(std::string_view text, std::size_t n) {
  auto raw = parse_digit_list(text, n);
  if (raw.size() + 1 == n) raw.insert(raw.begin(), 0);
  if (raw.size() != n) throw std::invalid_argument("inversion code needs n or n-1 digits");
  return InversionCode(std::move(raw));
}

}  // namespace fyperm
