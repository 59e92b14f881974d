#include "fyperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fyperm {

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<Symbol> w(n);
  std::iota(w.begin(), w.end(), Symbol{1});
  return Permutation(std::move(w));
}

Permutation Permutation::transposition(std::size_t n, Symbol a, Symbol b) {
  if (a < 1 || b < 1 || a > n || b > n)
    throw std::out_of_range("transposition symbol outside [1..n]");
  Permutation p = identity(n);
  p.swap_positions(a, b);
  return p;
}

Permutation Permutation::from_word(std::vector<Symbol> word) {
  if (word.empty()) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<bool> seen(word.size() + 1, false);
  for (Symbol s : word) {
    if (s < 1 || s > word.size() || seen[s])
      throw std::invalid_argument("word is not a permutation of [1..n]");
    seen[s] = true;
  }
  return Permutation(std::move(word));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<Symbol> w(a.degree());
  for (Symbol i = 1; i <= a.degree(); ++i) w[i - 1] = b(a(i));
  return Permutation::from_word(std::move(w));
}

Permutation inverse(const Permutation& p) {
  std::vector<Symbol> w(p.degree());
  for (Symbol i = 1; i <= p.degree(); ++i) w[p(i) - 1] = i;
  return Permutation::from_word(std::move(w));
}

Permutation ext(const Permutation& p) {
  std::vector<Symbol> w(p.word().begin(), p.word().end());
  w.push_back(static_cast<Symbol>(w.size() + 1));
  return Permutation::from_word(std::move(w));
}

Permutation rest(const Permutation& p) {
  const auto n = p.degree();
  if (n < 2) throw std::invalid_argument("rest: degree must be at least 2");
  if (p(static_cast<Symbol>(n)) != n) throw std::invalid_argument("rest: top symbol is moved");
  return Permutation::from_word({p.word().begin(), p.word().end() - 1});
}

Symbol top_preimage(const Permutation& p) {
  const auto w = p.word();
  const auto it = std::find(w.begin(), w.end(), static_cast<Symbol>(w.size()));
  return static_cast<Symbol>(it - w.begin()) + 1;
}

Symbol top_image(const Permutation& p) { return p.word().back(); }

Permutation up(const Permutation& p, Symbol q) {
  if (q < 1 || q > p.degree() + 1) throw std::out_of_range("up: q outside [1..n+1]");
  Permutation r = ext(p);
  r.swap_positions(q, static_cast<Symbol>(r.degree()));
  return r;
}

Peeled down(const Permutation& p) {
  if (p.degree() < 2) throw std::invalid_argument("down: degree must be at least 2");
  const Symbol q = top_preimage(p);
  Permutation r = p;
  r.swap_positions(q, static_cast<Symbol>(p.degree()));
  return {rest(r), q};
}

CycleClassification classify_cycles(const Permutation& p) {
  const auto n = p.degree();
  CycleClassification c;
  std::vector<bool> seen(n + 1, false);
  std::size_t nontrivial = 0;
  for (Symbol i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Symbol j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    c.cycle_lengths.push_back(len);
    if (len > 1) {
      ++nontrivial;
      c.cycle_length = len;
    }
  }
  std::sort(c.cycle_lengths.begin(), c.cycle_lengths.end(), std::greater<>());
  if (nontrivial == 0) {
    c.kind = CycleClassification::Kind::identity;
    c.cycle_length = 0;
  } else if (nontrivial == 1) {
    c.kind = CycleClassification::Kind::single_cycle;
  } else {
    c.kind = CycleClassification::Kind::general;
    c.cycle_length = 0;
  }
  return c;
}

bool is_full_cycle(const Permutation& p) {
  if (p.degree() == 1) return true;
  Symbol j = p(1);
  std::size_t len = 1;
  for (; j != 1; j = p(j)) ++len;
  return len == p.degree();
}

std::size_t fixed_point_count(const Permutation& p) {
  std::size_t f = 0;
  for (Symbol i = 1; i <= p.degree(); ++i) f += p(i) == i;
  return f;
}

std::size_t inversion_count(const Permutation& p) {
  const auto w = p.word();
  std::size_t inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  return inv;
}

std::string to_string(const Permutation& p) {
  std::string s;
  for (Symbol x : p.word()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

std::string to_compact(const Permutation& p) {
  if (p.degree() > 10) throw std::invalid_argument("compact rendering needs degree <= 10");
  std::string s;
  for (Symbol x : p.word()) s += static_cast<char>('0' + (x - 1));
  return s;
}

Permutation parse_word(std::string_view text) {
  std::vector<Symbol> w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',' || text[i] == '\t') {
      ++i;
      continue;
    }
    Symbol v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw std::invalid_argument("malformed permutation word");
    w.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation::from_word(std::move(w));
}

Permutation parse_compact(std::string_view text) {
  std::vector<Symbol> w;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("compact word must be decimal digits");
    w.push_back(static_cast<Symbol>(c - '0') + 1);
  }
  return Permutation::from_word(std::move(w));
}

}  // namespace fyperm
