#include "fyperm/gf_lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "fyperm/codec.hpp"

namespace fyperm {

namespace {

void require_order(std::size_t order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
}

Rational frac(std::size_t a, std::size_t b) {
  return Rational(static_cast<unsigned long>(a)) / Rational(static_cast<unsigned long>(b));
}

const ULaurent& u1() {
  static const ULaurent u = ULaurent::u();
  return u;
}

std::string render(const ULaurent& p) { return to_string(p); }
std::string render(const BiLaurent& p) { return to_string(p); }

template <class C>
IdentityCheck compare(std::string name, const Series<C>& lhs, const Series<C>& rhs) {
  IdentityCheck c{std::move(name), true, {}};
  const std::size_t order = std::min(lhs.order(), rhs.order());
  for (std::size_t n = 0; n <= order; ++n) {
    if (lhs[n] == rhs[n]) continue;
    c.holds = false;
    c.detail = "x^" + std::to_string(n) + ": " + render(lhs[n]) + " != " + render(rhs[n]);
    break;
  }
  return c;
}

Series<ULaurent> at_t1(const Series<BiLaurent>& f) {
  return map_coefficients(f, [](const BiLaurent& c) { return c.substitute_t(1); });
}

/// F(u, 1/u, ux): the n-th coefficient is u^n F_n(u, 1/u).
Series<ULaurent> on_distance_diagonal(const Series<BiLaurent>& f) {
  Series<ULaurent> r(f.order());
  const ULaurent inv_u = ULaurent::u(-1);
  for (std::size_t n = 0; n <= f.order(); ++n) r[n] = f[n].substitute_t(inv_u).shifted(static_cast<int>(n));
  return r;
}

/// G(u, tx)
Series<BiLaurent> spread_t(const Series<ULaurent>& g) {
  Series<BiLaurent> r(g.order());
  for (std::size_t n = 0; n <= g.order(); ++n) r[n] = BiLaurent::times_t(g[n], static_cast<int>(n));
  return r;
}

Series<ULaurent> cleared(const Series<ULaurent>& s, const ULaurent& d) {
  return map_coefficients(s, [&](const ULaurent& c) { return c * d; });
}

struct Pieces {
  Series<BiLaurent> s1, s2, s3, s4;
  explicit Pieces(std::size_t order) : s1(order), s2(order), s3(order), s4(order) {}
};

/// Sigma_1..Sigma_4 from the recurrence table: each case of the chi
/// recurrence contributes with probability 1/n per value of q.
Pieces decompose(const std::vector<std::vector<UPoly>>& t, std::size_t order, StatKind kind) {
  Pieces s(order);
  const bool moves = kind == StatKind::moves;
  for (std::size_t n = 1; n <= order; ++n) {
    const Rational inv_n = frac(1, n);
    const auto weight = [&](std::size_t q) { return ULaurent::u(moves ? 1 : static_cast<int>(n - q)); };
    ULaurent diag;
    for (std::size_t p = 1; p < n; ++p) {
      s.s1[n] += BiLaurent::times_t(t[n - 1][p] * frac(n - 1, n), static_cast<int>(p));
      s.s3[n] += BiLaurent::times_t(weight(p) * inv_n, static_cast<int>(p));
      diag += weight(p) * t[n - 1][p];
    }
    s.s2[n] = BiLaurent::times_t(diag * inv_n, static_cast<int>(n));
    s.s4[n] = BiLaurent::times_t((moves ? u1() : ULaurent(1)) * inv_n, static_cast<int>(n));
  }
  return s;
}

/// The same four pieces by enumerating S_n and evaluating chi directly.
Pieces enumerate_pieces(std::size_t order, StatKind kind) {
  Pieces s(order);
  for (std::size_t n = 1; n <= order; ++n) {
    const Rational w = Rational(1) / factorial(static_cast<unsigned>(n));
    TriangularCode code = TriangularCode::first(n, false);
    do {
      const Permutation perm = fy_decode(code);
      const Symbol q = top_preimage(perm);
      for (Symbol p = 1; p <= n; ++p) {
        const BiLaurent term = BiLaurent::monomial(w, static_cast<int>(chi(perm, p, kind)), static_cast<int>(p));
        if (p != n && p != q) {
          s.s1[n] += term;
        } else if (p == n && p != q) {
          s.s2[n] += term;
        } else if (p != n) {
          s.s3[n] += term;
        } else {
          s.s4[n] += term;
        }
      }
    } while (code.advance());
  }
  return s;
}

}  // namespace

Series<ULaurent> fixed_egf(std::size_t order) {
  return exp_term(u1() - ULaurent(1), order) * geometric(ULaurent(1), order);
}

UPoly mahonian_product(std::size_t n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const UPoly one_minus_u = UPoly(1) - u1();
  UPoly r = 1;
  for (std::size_t i = 1; i <= n; ++i) r *= exact_divide(UPoly(1) - UPoly::u(static_cast<int>(i)), one_minus_u);
  return r;
}

Series<BiLaurent> sigma3_moves(std::size_t order) {
  require_order(order);
  const auto l1 = log_term(BiLaurent(1), order);
  const auto lt = log_term(BiLaurent::t(), order);
  // u (t L(1) - L(t)) / (1 - t) with L(c) = -log(1 - cx)
  const auto num = BiLaurent(u1()) * (BiLaurent::t() * l1 - lt);
  return map_coefficients(num, [](const BiLaurent& c) { return -exact_divide_by_t_minus(c, 1); });
}

Series<ULaurent> sigma3_moves_t1(std::size_t order) {
  require_order(order);
  return u1() * times_x(geometric(ULaurent(1), order)) - u1() * log_term(ULaurent(1), order);
}

Series<BiLaurent> sigma3_distance(std::size_t order) {
  require_order(order);
  const BiLaurent u(u1());
  // (t L(u) - u L(t)) / (u - t)
  const auto num = BiLaurent::t() * log_term(u, order) - u * log_term(BiLaurent::t(), order);
  return map_coefficients(num, [](const BiLaurent& c) { return -exact_divide_by_t_minus(c, u1()); });
}

FractionSeries moves_grand_t1(std::size_t order) {
  require_order(order);
  return {u1() * (neg_binom(2, order) - neg_binom(u1(), order)), ULaurent(2) - u1()};
}

FractionSeries moves_diagonal(std::size_t order) {
  require_order(order);
  const ULaurent u = u1();
  const ULaurent two_minus_u = ULaurent(2) - u;
  const ULaurent one_minus_u = ULaurent(1) - u;
  Series<ULaurent> num = u.pow(2) * one_minus_u * geometric(ULaurent(1), order) +
                         u.pow(2) * neg_binom(u - ULaurent(1), order) +
                         u * two_minus_u * one_minus_u * log_term(ULaurent(1), order);
  num[0] -= u.pow(2) * two_minus_u;
  return {std::move(num), two_minus_u * one_minus_u};
}

Series<BiLaurent> solve_moves_grand(std::size_t order) {
  require_order(order);
  const auto sigma = sigma3_moves(order);
  Series<BiLaurent> f(order);
  ULaurent at_one;  // F_{n-1}(u, 1)
  for (std::size_t n = 1; n <= order; ++n) {
    const int ni = static_cast<int>(n);
    BiLaurent acc = f[n - 1] * frac(n - 1, 1);
    acc += BiLaurent::times_t(u1() * at_one + u1(), ni);
    acc += sigma[n] * frac(n, 1);
    f[n] = acc / frac(n, 1);
    at_one = f[n].substitute_t(1);
  }
  return f;
}

Series<ULaurent> distance_grand_diagonal(std::size_t order) {
  require_order(order);
  const auto l1 = log_term(ULaurent(1), order);
  const auto lu2 = log_term(ULaurent::u(2), order);
  const ULaurent denom = ULaurent(1) - ULaurent::u(2);
  Series<ULaurent> bracket(order);
  for (std::size_t n = 0; n <= order; ++n) bracket[n] = l1[n] + exact_divide(ULaurent::u(2) * l1[n] - lu2[n], denom);
  return geometric(u1(), order) * bracket;
}

Series<ULaurent> distance_diagonal(std::size_t order) {
  require_order(order);
  const auto fd = distance_grand_diagonal(order);
  Series<ULaurent> g(order);
  for (std::size_t n = 1; n <= order; ++n) g[n] = (u1() * fd[n - 1] + ULaurent(1)) / frac(n, 1);
  return g;
}

Series<BiLaurent> solve_distance_grand(std::size_t order) {
  require_order(order);
  const auto sigma = sigma3_distance(order);
  const ULaurent inv_u = ULaurent::u(-1);
  Series<BiLaurent> f(order);
  ULaurent diag;  // F_{n-1}(u, 1/u)
  for (std::size_t n = 1; n <= order; ++n) {
    const int ni = static_cast<int>(n);
    BiLaurent acc = f[n - 1] * frac(n - 1, 1);
    acc += BiLaurent::times_t(diag.shifted(ni) + ULaurent(1), ni);
    acc += sigma[n] * frac(n, 1);
    f[n] = acc / frac(n, 1);
    diag = f[n].substitute_t(inv_u);
  }
  return f;
}

Series<BiLaurent> grand_from_recurrence(std::size_t order, StatKind kind) {
  const auto t = pgf_table(order, kind);
  Series<BiLaurent> f(order);
  for (std::size_t n = 1; n <= order; ++n)
    for (std::size_t p = 1; p <= n; ++p) f[n] += BiLaurent::times_t(t[n][p], static_cast<int>(p));
  return f;
}

Series<ULaurent> diagonal_from_recurrence(std::size_t order, StatKind kind) {
  const auto t = pgf_table(order, kind);
  Series<ULaurent> g(order);
  for (std::size_t n = 1; n <= order; ++n) g[n] = t[n][n];
  return g;
}

bool OdeReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

inline constexpr std::size_t kEnumeratedPiecesBound = 7;

OdeReport verify_ode_systems(std::size_t order, StatKind kind) {
  require_order(order);
  const bool moves = kind == StatKind::moves;
  OdeReport report;
  report.kind = kind;
  report.order = order;
  auto& out = report.checks;

  const auto table = pgf_table(order, kind);
  const auto F = grand_from_recurrence(order, kind);
  const auto G = diagonal_from_recurrence(order, kind);
  const auto sigma3 = moves ? sigma3_moves(order) : sigma3_distance(order);
  const Pieces pieces = decompose(table, order, kind);

  out.push_back(compare("F = Sigma1 + Sigma2 + Sigma3 + Sigma4", F,
                        pieces.s1 + pieces.s2 + sigma3 + pieces.s4));
  out.push_back(compare("Sigma3 closed form = case decomposition", sigma3, pieces.s3));
  out.push_back(compare("Sigma2 + Sigma4 = G(u, tx)", pieces.s2 + pieces.s4, spread_t(G)));
  out.push_back(compare("Sigma1 = xF - A", pieces.s1, times_x(F) - integrate(F)));

  const auto dF = derivative(F);
  const auto dG = derivative(G);
  const auto dS3 = derivative(sigma3);
  const auto lhs = dF - times_x(dF);
  Series<BiLaurent> t_dG(dG.order());
  for (std::size_t m = 0; m <= dG.order(); ++m) t_dG[m] = BiLaurent::times_t(dG[m], static_cast<int>(m + 1));
  out.push_back(compare("(1-x)F' = tG'(u, tx) + Sigma3'", lhs, t_dG + dS3));

  // Defining equation: F(u,1,tx) for moves, F(u,1/u,utx) for distance.
  Series<BiLaurent> forcing(dF.order());
  const auto at_one = at_t1(F);
  const auto on_diag = on_distance_diagonal(F);
  for (std::size_t m = 0; m <= dF.order(); ++m) {
    const int e = static_cast<int>(m + 1);
    forcing[m] = moves ? BiLaurent::times_t(u1() * at_one[m] + u1(), e)
                       : BiLaurent::times_t(u1() * on_diag[m] + ULaurent(1), e);
  }
  out.push_back(compare(moves ? "(1-x)F' = utF(u, 1, tx) + ut/(1-tx) + Sigma3'"
                              : "(1-x)F' = utF(u, 1/u, utx) + t/(1-tx) + Sigma3'",
                        lhs, forcing + dS3));

  if (moves) {
    out.push_back(compare("G' = uF(u, 1, x) + u/(1-x)", dG,
                          u1() * at_one + u1() * geometric(ULaurent(1), order)));
    out.push_back(compare("Sigma3(u, 1, x) closed form", at_t1(sigma3), sigma3_moves_t1(order)));
    const auto f1 = moves_grand_t1(order);
    out.push_back(compare("F(u, 1, x) closed form (cleared)", cleared(at_one, f1.denominator), f1.numerator));
    const auto g = moves_diagonal(order);
    out.push_back(compare("G(u, x) closed form (cleared)", cleared(G, g.denominator), g.numerator));
    out.push_back(compare("solved F = recurrence F", solve_moves_grand(order), F));
  } else {
    out.push_back(compare("G' = uF(u, 1/u, ux) + 1/(1-x)", dG,
                          u1() * on_diag + geometric(ULaurent(1), order)));
    out.push_back(compare("F(u, 1/u, ux) exact solution", on_diag, distance_grand_diagonal(order)));
    out.push_back(compare("G(u, x) = A(u, 1/u, ux) - log(1-x)", G, distance_diagonal(order)));
    out.push_back(compare("solved F = recurrence F", solve_distance_grand(order), F));
  }

  IdentityCheck boundary{"F(u, t, 0) = 0 and G(u, 0) = 0", F[0].is_zero() && G[0].is_zero(), {}};
  if (!boundary.holds) boundary.detail = "nonzero constant term";
  out.push_back(boundary);

  const std::size_t small = std::min(order, kEnumeratedPiecesBound);
  const Pieces seen = enumerate_pieces(small, kind);
  const Pieces expect = decompose(table, small, kind);
  const auto s3_small = sigma3.truncated(small);
  for (const auto& [name, a, b] :
       {std::tuple{"enumerated Sigma1", &seen.s1, &expect.s1}, std::tuple{"enumerated Sigma2", &seen.s2, &expect.s2},
        std::tuple{"enumerated Sigma3", &seen.s3, &s3_small}, std::tuple{"enumerated Sigma4", &seen.s4, &expect.s4}})
    out.push_back(compare(name, *a, *b));
  return report;
}

}  // namespace fyperm
