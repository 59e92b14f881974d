#include "fyperm/algebra.hpp"

#include <sstream>

namespace fyperm {

ULaurent::ULaurent(const Rational& c) {
  if (c != 0) add_term(0, c);
}

ULaurent ULaurent::monomial(const Rational& c, int exponent) {
  ULaurent p;
  p.add_term(exponent, c);
  return p;
}

void ULaurent::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exponent, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

int ULaurent::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int ULaurent::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

Rational ULaurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

ULaurent& ULaurent::operator+=(const ULaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ULaurent& ULaurent::operator-=(const ULaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
  ULaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

ULaurent& ULaurent::operator*=(const ULaurent& o) { return *this = *this * o; }

ULaurent& ULaurent::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ULaurent& ULaurent::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("division by zero");
  for (auto& [e, v] : terms_) v /= c;
  return *this;
}

ULaurent ULaurent::operator-() const {
  ULaurent r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

ULaurent ULaurent::pow(unsigned k) const {
  ULaurent r(1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

ULaurent ULaurent::shifted(int shift) const {
  ULaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
  return r;
}

ULaurent ULaurent::derivative() const {
  ULaurent r;
  for (const auto& [e, c] : terms_) r.add_term(e - 1, c * e);
  return r;
}

Rational ULaurent::eval(const Rational& at) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    if (e >= 0) {
      for (int i = 0; i < e; ++i) power *= at;
    } else {
      for (int i = 0; i < -e; ++i) power /= at;
    }
    acc += c * power;
  }
  return acc;
}

Rational ULaurent::sum() const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

Division divide(const ULaurent& a, const ULaurent& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!a.is_polynomial() || !b.is_polynomial()) throw std::invalid_argument("divide needs polynomials");
  ULaurent q;
  ULaurent r = a;
  const int db = b.max_exponent();
  const Rational lead = b.coeff(db);
  while (!r.is_zero() && r.max_exponent() >= db) {
    const int shift = r.max_exponent() - db;
    const ULaurent step = ULaurent::monomial(r.coeff(r.max_exponent()) / lead, shift);
    q += step;
    r -= step * b;
  }
  return {q, r};
}

ULaurent exact_divide(const ULaurent& a, const ULaurent& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw ResidueError("non-polynomial residue " + to_string(r) + " dividing by " + to_string(b));
  return q;
}

ULaurent rising_factorial(const ULaurent& e, unsigned k) {
  ULaurent r(1);
  for (unsigned i = 0; i < k; ++i) r *= e + ULaurent(static_cast<long>(i));
  return r;
}

Rational ratio(long a, long b) {
  if (b == 0) throw std::domain_error("zero denominator");
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Rational harmonic(unsigned n) {
  Rational h = 0;
  for (unsigned i = 1; i <= n; ++i) h += ratio(1, i);
  return h;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& vars) {
  Rational mag = c;
  if (first) {
    if (c < 0) {
      os << '-';
      mag = -c;
    }
  } else {
    os << (c < 0 ? " - " : " + ");
    if (c < 0) mag = -c;
  }
  if (vars.empty()) {
    os << mag.get_str();
  } else if (mag == 1) {
    os << vars;
  } else {
    os << mag.get_str() << '*' << vars;
  }
}

std::string power(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const ULaurent& p, const char* var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_term(os, first, c, power(var, e));
    first = false;
  }
  return os.str();
}

BiLaurent::BiLaurent(const ULaurent& p) {
  for (const auto& [e, c] : p.terms()) terms_.emplace(Key{e, 0}, c);
}

BiLaurent BiLaurent::monomial(const Rational& c, int u_exp, int t_exp) {
  BiLaurent p;
  p.add_term({u_exp, t_exp}, c);
  return p;
}

BiLaurent BiLaurent::times_t(const ULaurent& p, int t_exp) {
  BiLaurent r;
  for (const auto& [e, c] : p.terms()) r.terms_.emplace(Key{e, t_exp}, c);
  return r;
}

void BiLaurent::add_term(Key key, const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

int BiLaurent::max_t_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_t_exponent of zero polynomial");
  int m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

int BiLaurent::min_t_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_t_exponent of zero polynomial");
  int m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

ULaurent BiLaurent::t_coeff(int exponent) const {
  ULaurent r;
  for (const auto& [k, c] : terms_)
    if (k.second == exponent) r += ULaurent::monomial(c, k.first);
  return r;
}

ULaurent BiLaurent::substitute_t(const ULaurent& value) const {
  ULaurent r;
  std::map<int, ULaurent> powers;
  for (const auto& [k, c] : terms_) {
    auto it = powers.find(k.second);
    if (it == powers.end()) {
      if (k.second < 0) throw std::invalid_argument("substitute_t: negative t exponent");
      it = powers.emplace(k.second, value.pow(static_cast<unsigned>(k.second))).first;
    }
    r += ULaurent::monomial(c, k.first) * it->second;
  }
  return r;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

BiLaurent& BiLaurent::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BiLaurent& BiLaurent::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("division by zero");
  for (auto& [k, v] : terms_) v /= c;
  return *this;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

BiLaurent BiLaurent::pow(unsigned k) const {
  BiLaurent r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

BiLaurent exact_divide_by_t_minus(const BiLaurent& p, const ULaurent& a) {
  if (p.is_zero()) return {};
  if (p.min_t_exponent() < 0) throw std::invalid_argument("exact_divide_by_t_minus: negative t exponent");
  // Synthetic division in t over the ring of Laurent polynomials in u.
  const int d = p.max_t_exponent();
  BiLaurent q;
  ULaurent carry;  // quotient coefficient of t^(k-1)
  for (int k = d; k >= 1; --k) {
    carry = p.t_coeff(k) + (k == d ? ULaurent() : a * carry);
    q += BiLaurent::times_t(carry, k - 1);
  }
  const ULaurent remainder = p.t_coeff(0) + (d >= 1 ? a * carry : ULaurent());
  if (!remainder.is_zero())
    throw ResidueError("non-polynomial residue " + to_string(remainder) + " dividing by (t - a)");
  return q;
}

std::string to_string(const BiLaurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Group by t exponent for readability: t-major order.
  std::map<std::pair<int, int>, Rational> by_t;
  for (const auto& [k, c] : p.terms()) by_t.emplace(std::pair{k.second, k.first}, c);
  for (const auto& [k, c] : by_t) {
    std::string vars = power("u", k.second);
    const std::string tp = power("t", k.first);
    if (!tp.empty()) vars = vars.empty() ? tp : vars + "*" + tp;
    append_term(os, first, c, vars);
    first = false;
  }
  return os.str();
}

}  // namespace fyperm
