#include "fyperm/enumerator.hpp"

#include <stdexcept>

namespace fyperm {

std::string_view to_string(DeltaClass c) {
  switch (c) {
    case DeltaClass::identity:
      return "identity";
    case DeltaClass::adjacent_transposition:
      return "adjacent-transposition";
    case DeltaClass::transposition:
      return "transposition";
    case DeltaClass::three_cycle:
      return "three-cycle";
    case DeltaClass::other:
      return "other";
  }
  return "other";
}

CodeSpace::CodeSpace(std::size_t n, Family family, Encoding encoding)
    : n_(n), family_(family), encoding_(encoding) {
  if (n == 0) throw std::invalid_argument("degree must be at least 1");
  const bool strict = family == Family::cycle;
  switch (encoding) {
    case Encoding::fy:
      for (std::size_t k = n; k >= 2; --k) radices_.push_back(static_cast<std::uint32_t>(strict ? k - 1 : k));
      break;
    case Encoding::dual:
      for (std::size_t k = 2; k <= n; ++k) radices_.push_back(static_cast<std::uint32_t>(strict ? k - 1 : k));
      break;
    case Encoding::inv:
      if (strict) throw std::invalid_argument("the inversion encoding has no cycle family");
      for (std::size_t i = 1; i <= n; ++i) radices_.push_back(static_cast<std::uint32_t>(i));
      break;
  }
}

namespace {

TriangularCode as_triangular(const Word& w, std::size_t n, bool strict) {
  std::vector<Symbol> d(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) d[i] = w[i] + 1;
  return TriangularCode(n, std::move(d), strict);
}

DualCode as_dual(const Word& w, bool strict) {
  std::vector<Symbol> d{1};
  for (auto x : w) d.push_back(x + 1);
  return DualCode(std::move(d), strict);
}

}  // namespace

Permutation CodeSpace::decode(const Word& w) const {
  const bool strict = family_ == Family::cycle;
  switch (encoding_) {
    case Encoding::fy:
      return fy_decode(as_triangular(w, n_, strict));
    case Encoding::dual:
      return dual_decode(as_dual(w, strict));
    case Encoding::inv:
      return inv_decode(InversionCode(w));
  }
  throw std::logic_error("unknown encoding");
}

Word CodeSpace::encode(const Permutation& p) const {
  if (p.degree() != n_) throw std::invalid_argument("degree mismatch");
  const bool strict = family_ == Family::cycle;
  Word w;
  switch (encoding_) {
    case Encoding::fy: {
      const auto code = fy_encode(p, strict);
      for (Symbol j : code.digits()) w.push_back(j - 1);
      break;
    }
    case Encoding::dual: {
      const auto d = dual_encode(p, strict).digits();
      for (std::size_t i = 1; i < d.size(); ++i) w.push_back(d[i] - 1);
      break;
    }
    case Encoding::inv:
      w = inv_encode(p).digits();
      break;
  }
  return w;
}

std::string CodeSpace::render(const Word& w, bool table_layout) const {
  const bool strict = family_ == Family::cycle;
  switch (encoding_) {
    case Encoding::fy: {
      const auto c = as_triangular(w, n_, strict);
      return table_layout ? to_table_layout(c) : to_string(c);
    }
    case Encoding::dual: {
      const auto c = as_dual(w, strict);
      return table_layout ? to_table_layout(c) : to_string(c);
    }
    case Encoding::inv: {
      const InversionCode c(w);
      return table_layout ? to_table_layout(c) : to_string(c);
    }
  }
  throw std::logic_error("unknown encoding");
}

LexStream::LexStream(std::size_t n, Family family, Encoding encoding)
    : space_(n, family, encoding), word_(space_.radices().size(), 0), perm_(Permutation::identity(n)) {}

bool LexStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    std::size_t i = word_.size();
    while (i > 0) {
      --i;
      if (word_[i] + 1 < space_.radices()[i]) {
        ++word_[i];
        break;
      }
      word_[i] = 0;
      if (i == 0) {
        done_ = true;
        return false;
      }
    }
    if (word_.empty()) {
      done_ = true;
      return false;
    }
  }
  perm_ = space_.decode(word_);
  return true;
}

GrayCounter::GrayCounter(std::vector<std::uint32_t> radices)
    : radices_(std::move(radices)), word_(radices_.size(), 0), dir_(radices_.size(), 1) {
  for (auto r : radices_)
    if (r == 0) throw std::invalid_argument("radices must be positive");
}

bool GrayCounter::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (std::size_t i = word_.size(); i-- > 0;) {
    const auto v = static_cast<std::int64_t>(word_[i]) + dir_[i];
    if (v >= 0 && v < static_cast<std::int64_t>(radices_[i])) {
      step_ = GrayStep{i, word_[i], static_cast<std::uint32_t>(v)};
      word_[i] = static_cast<std::uint32_t>(v);
      return true;
    }
    dir_[i] = -dir_[i];
  }
  done_ = true;
  step_.reset();
  return false;
}

Permutation delta(const Permutation& prev, const Permutation& next, Side side) {
  if (prev.degree() != next.degree()) throw std::invalid_argument("delta: degree mismatch");
  return side == Side::left ? compose(inverse(prev), next) : compose(next, inverse(prev));
}

DeltaClass classify_delta(const Permutation& d) {
  const auto c = classify_cycles(d);
  if (c.kind == CycleClassification::Kind::identity) return DeltaClass::identity;
  if (c.kind != CycleClassification::Kind::single_cycle) return DeltaClass::other;
  if (c.cycle_length == 3) return DeltaClass::three_cycle;
  if (c.cycle_length != 2) return DeltaClass::other;
  Symbol a = 0;
  Symbol b = 0;
  for (Symbol i = 1; i <= d.degree(); ++i) {
    if (d(i) == i) continue;
    (a == 0 ? a : b) = i;
  }
  return b == a + 1 ? DeltaClass::adjacent_transposition : DeltaClass::transposition;
}

GrayPermStream::GrayPermStream(std::size_t n, Family family, Encoding encoding)
    : space_(n, family, encoding), counter_(space_.radices()), perm_(Permutation::identity(n)) {}

bool GrayPermStream::next() {
  if (!counter_.next()) {
    induced_.reset();
    return false;
  }
  Permutation next = space_.decode(counter_.word());
  if (counter_.step()) {
    Permutation d = delta(perm_, next, Side::right);
    const DeltaClass cls = classify_delta(d);
    induced_ = InducedStep{*counter_.step(), std::move(d), cls};
  }
  perm_ = std::move(next);
  return true;
}

GrayPermStream gray_perm_stream(std::size_t n, Encoding encoding) {
  if (n < 2) throw std::invalid_argument("gray_perm_stream needs n >= 2");
  return GrayPermStream(n, Family::perm, encoding);
}

GrayPermStream gray_cycle_stream(std::size_t n) {
  if (n < 2) throw std::invalid_argument("gray_cycle_stream needs n >= 2");
  return GrayPermStream(n, Family::cycle, Encoding::fy);
}

DeltaClass predicted_fy_delta(std::size_t k, Symbol old_j, Symbol new_j) {
  if (old_j == new_j) return DeltaClass::identity;
  if (old_j == k || new_j == k) return DeltaClass::transposition;
  return DeltaClass::three_cycle;
}

WrapReport cycle_gray_wrap(std::size_t n) {
  GrayPermStream s = gray_cycle_stream(n);
  WrapReport r;
  r.n = n;
  s.next();
  const Word first_word = s.word();
  const Permutation first = s.perm();
  ++r.items;
  while (s.next()) ++r.items;
  // The stream has stopped; its last word and permutation are still current.
  for (std::size_t i = 0; i < first_word.size(); ++i) r.digits_changed += first_word[i] != s.word()[i];
  r.cls = classify_delta(delta(s.perm(), first, Side::right));
  return r;
}

std::vector<Permutation> sims_factor(const Permutation& p, Family family) {
  return triangular_factors(fy_encode(p, family == Family::cycle));
}

}  // namespace fyperm
