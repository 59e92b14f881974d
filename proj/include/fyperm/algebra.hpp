#pragma once

// Exact polynomial arithmetic over the rationals. ULaurent is a Laurent
// polynomial in the marker u; UPoly is the same type restricted to
// non-negative exponents. BiLaurent carries a second marker t.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace fyperm {

using Rational = mpq_class;

/// Raised when a division that must be exact leaves a remainder.
class ResidueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ULaurent {
 public:
  ULaurent() = default;
  ULaurent(const Rational& c);  // NOLINT: constants convert implicitly
  ULaurent(long c) : ULaurent(Rational(c)) {}  // NOLINT

  static ULaurent monomial(const Rational& c, int exponent);
  /// u^exponent
  static ULaurent u(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_polynomial() const noexcept { return terms_.empty() || terms_.begin()->first >= 0; }
  int min_exponent() const;
  int max_exponent() const;
  Rational coeff(int exponent) const;
  const std::map<int, Rational>& terms() const noexcept { return terms_; }

  ULaurent& operator+=(const ULaurent& o);
  ULaurent& operator-=(const ULaurent& o);
  ULaurent& operator*=(const ULaurent& o);
  ULaurent& operator*=(const Rational& c);
  ULaurent& operator/=(const Rational& c);
  ULaurent operator-() const;

  friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
  friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }
  friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
  friend ULaurent operator*(ULaurent a, const Rational& c) { return a *= c; }
  friend ULaurent operator*(const Rational& c, ULaurent a) { return a *= c; }
  friend ULaurent operator/(ULaurent a, const Rational& c) { return a /= c; }
  friend bool operator==(const ULaurent& a, const ULaurent& b) { return a.terms_ == b.terms_; }

  ULaurent pow(unsigned k) const;
  /// Multiplies by u^shift.
  ULaurent shifted(int shift) const;
  ULaurent derivative() const;
  Rational eval(const Rational& at) const;
  /// Sum of coefficients, the value at u = 1.
  Rational sum() const;

 private:
  void add_term(int exponent, const Rational& c);
  std::map<int, Rational> terms_;
};

using UPoly = ULaurent;

struct Division {
  ULaurent quotient;
  ULaurent remainder;
};

/// Polynomial long division; both operands must be polynomials.
Division divide(const ULaurent& a, const ULaurent& b);
/// Throws ResidueError on a nonzero remainder.
ULaurent exact_divide(const ULaurent& a, const ULaurent& b);

/// e (e+1) ... (e+k-1); the empty product is 1.
ULaurent rising_factorial(const ULaurent& e, unsigned k);
/// a / b in lowest terms.
Rational ratio(long a, long b);
Rational harmonic(unsigned n);
Rational factorial(unsigned n);

std::string to_string(const Rational& q);
/// "1/2*u + 1/2*u^2"; "0" for the zero polynomial.
std::string to_string(const ULaurent& p, const char* var = "u");

/// Laurent polynomial in u and t, keyed by (u exponent, t exponent).
class BiLaurent {
 public:
  using Key = std::pair<int, int>;

  BiLaurent() = default;
  BiLaurent(const ULaurent& p);  // NOLINT: t^0 coefficient
  BiLaurent(long c) : BiLaurent(ULaurent(c)) {}  // NOLINT

  static BiLaurent monomial(const Rational& c, int u_exp, int t_exp);
  static BiLaurent t(int exponent = 1) { return monomial(1, 0, exponent); }
  /// p(u) * t^t_exp
  static BiLaurent times_t(const ULaurent& p, int t_exp);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  int max_t_exponent() const;
  int min_t_exponent() const;
  /// Coefficient of t^exponent as a Laurent polynomial in u.
  ULaurent t_coeff(int exponent) const;
  /// Replaces t by `value`.
  ULaurent substitute_t(const ULaurent& value) const;

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent& operator*=(const Rational& c);
  BiLaurent& operator/=(const Rational& c);
  BiLaurent operator-() const;

  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend BiLaurent operator*(BiLaurent a, const Rational& c) { return a *= c; }
  friend BiLaurent operator*(const Rational& c, BiLaurent a) { return a *= c; }
  friend BiLaurent operator/(BiLaurent a, const Rational& c) { return a /= c; }
  friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.terms_ == b.terms_; }

  BiLaurent pow(unsigned k) const;

 private:
  void add_term(Key key, const Rational& c);
  std::map<Key, Rational> terms_;
};

/// Exact division by (t - a) with a free of t; throws ResidueError otherwise.
BiLaurent exact_divide_by_t_minus(const BiLaurent& p, const ULaurent& a);

std::string to_string(const BiLaurent& p);

}  // namespace fyperm
