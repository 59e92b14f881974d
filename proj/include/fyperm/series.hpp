#pragma once

// Power series in x truncated at a fixed order N: coefficients c_0..c_N.
// Operations never look past N; results carry the order up to which they
// are exact (a derivative loses one order).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fyperm/algebra.hpp"

namespace fyperm {

template <class C>
class Series {
 public:
  explicit Series(std::size_t order) : coeffs_(order + 1) {}

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  C& operator[](std::size_t n) { return coeffs_.at(n); }
  const C& operator[](std::size_t n) const { return coeffs_.at(n); }

  Series truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    Series r(order);
    std::copy_n(coeffs_.begin(), order + 1, r.coeffs_.begin());
    return r;
  }

  Series& operator+=(const Series& o) {
    resize_to_min(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  Series& operator-=(const Series& o) {
    resize_to_min(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t order = std::min(a.order(), b.order());
    Series r(order);
    for (std::size_t i = 0; i <= order; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= order; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  /// Multiplies every coefficient by c.
  friend Series operator*(const C& c, Series a) {
    for (auto& x : a.coeffs_) x = c * x;
    return a;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static bool is_zero(const C& c) { return c.is_zero(); }
  void resize_to_min(const Series& o) {
    if (o.coeffs_.size() < coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  }
  std::vector<C> coeffs_;
};

/// d/dx; exact to order N-1.
template <class C>
Series<C> derivative(const Series<C>& s) {
  if (s.order() == 0) throw std::invalid_argument("derivative of an order-0 series");
  Series<C> r(s.order() - 1);
  for (std::size_t n = 1; n <= s.order(); ++n) r[n - 1] = s[n] * Rational(static_cast<long>(n));
  return r;
}

/// Antiderivative with zero constant term, kept at order N.
template <class C>
Series<C> integrate(const Series<C>& s) {
  Series<C> r(s.order());
  for (std::size_t n = 1; n <= s.order(); ++n) r[n] = s[n - 1] / Rational(static_cast<long>(n));
  return r;
}

/// x * s, kept at order N.
template <class C>
Series<C> times_x(const Series<C>& s) {
  Series<C> r(s.order());
  for (std::size_t n = 1; n <= s.order(); ++n) r[n] = s[n - 1];
  return r;
}

/// s(c x): the n-th coefficient is multiplied by c^n.
template <class C>
Series<C> substitute_x(const Series<C>& s, const C& c) {
  Series<C> r(s.order());
  C power(1);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    r[n] = s[n] * power;
    power = power * c;
  }
  return r;
}

template <class C, class F>
auto map_coefficients(const Series<C>& s, F&& f) {
  using D = decltype(f(s[0]));
  Series<D> r(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n) r[n] = f(s[n]);
  return r;
}

/// -log(1 - c x) = sum_{n>=1} c^n x^n / n
template <class C>
Series<C> log_term(const C& c, std::size_t order) {
  Series<C> r(order);
  C power = c;
  for (std::size_t n = 1; n <= order; ++n) {
    r[n] = power / Rational(static_cast<long>(n));
    power = power * c;
  }
  return r;
}

/// 1 / (1 - c x)
template <class C>
Series<C> geometric(const C& c, std::size_t order) {
  Series<C> r(order);
  C power(1);
  for (std::size_t n = 0; n <= order; ++n) {
    r[n] = power;
    power = power * c;
  }
  return r;
}

/// exp(c x)
template <class C>
Series<C> exp_term(const C& c, std::size_t order) {
  Series<C> r(order);
  C term(1);
  for (std::size_t n = 0; n <= order; ++n) {
    r[n] = term;
    term = term * c / Rational(static_cast<long>(n + 1));
  }
  return r;
}

/// (1 - x)^(-e): the n-th coefficient is e (e+1) ... (e+n-1) / n!.
inline Series<ULaurent> neg_binom(const ULaurent& e, std::size_t order) {
  Series<ULaurent> r(order);
  ULaurent term(1);
  for (std::size_t n = 0; n <= order; ++n) {
    r[n] = term;
    term = term * (e + ULaurent(static_cast<long>(n))) / Rational(static_cast<long>(n + 1));
  }
  return r;
}

/// A series whose coefficients share one denominator D(u): c_n = numerator_n / D.
struct FractionSeries {
  Series<ULaurent> numerator;
  ULaurent denominator;

  /// Divides every coefficient out; throws ResidueError if any is not a polynomial.
  Series<ULaurent> reduced() const {
    return map_coefficients(numerator, [&](const ULaurent& c) { return exact_divide(c, denominator); });
  }
};

}  // namespace fyperm
