#include "fyperm/statistics.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fyperm/gf_lab.hpp"
#include "fyperm/kernels.hpp"

namespace fyperm {

namespace {

template <class F>
kernels::Histogram code_histogram(Execution exec, std::size_t n, bool strict, F f) {
  return exec == Execution::serial ? kernels::serial_code_histogram(n, strict, f)
                                   : kernels::parallel_code_histogram(n, strict, f);
}

template <class Draw>
kernels::Histogram sample_histogram(Execution exec, std::uint64_t samples, std::uint64_t seed, Draw d) {
  return exec == Execution::serial ? kernels::serial_sample_histogram(samples, seed, d)
                                   : kernels::parallel_sample_histogram(samples, seed, d);
}

void require_symbol(std::size_t n, std::size_t sym) {
  if (sym < 1 || sym > n) throw std::out_of_range("symbol outside [1..n]");
}

}  // namespace

Pgf::Pgf(UPoly p) : poly_(std::move(p)) {
  if (poly_.is_zero() || !poly_.is_polynomial()) throw std::invalid_argument("PGF must be a nonzero polynomial");
  for (const auto& [e, c] : poly_.terms())
    if (c < 0) throw std::invalid_argument("PGF has a negative coefficient");
  if (poly_.sum() != 1) throw std::invalid_argument("PGF coefficients do not sum to 1");
}

Pgf Pgf::from_counts(const std::vector<std::uint64_t>& counts) {
  mpz_class total = 0;
  for (auto c : counts) total += mpz_class(std::to_string(c));
  if (total == 0) throw std::invalid_argument("empty histogram");
  UPoly p;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0) {
      Rational q(mpz_class(std::to_string(counts[k])), total);
      q.canonicalize();
      p += UPoly::monomial(q, static_cast<int>(k));
    }
  return Pgf(std::move(p));
}

std::uint64_t chi(const Permutation& p, Symbol sym, StatKind kind) {
  require_symbol(p.degree(), sym);
  const bool moves = kind == StatKind::moves;
  std::uint64_t acc = 0;
  Permutation cur = p;
  Symbol s = sym;
  while (true) {
    const auto n = static_cast<Symbol>(cur.degree());
    if (n == 1) return acc + (moves ? 1 : 0);
    const Symbol q = top_preimage(cur);
    if (s != n && s != q) {
      cur = down(cur).rest;
    } else if (s == n && s != q) {
      acc += moves ? 1 : n - q;
      cur = down(cur).rest;
      s = q;
    } else if (s != n) {
      return acc + (moves ? 1 : n - q);
    } else {
      return acc + (moves ? 1 : 0);
    }
  }
}

std::uint64_t trace_stat(const SwapTrace& trace, Symbol sym, StatKind kind) {
  if (!is_valid_trace(trace)) throw std::invalid_argument("invalid swap trace");
  require_symbol(trace.n, sym);
  Symbol pos = sym;
  std::uint64_t acc = 0;
  for (const auto [k, j] : trace.steps) {
    if (pos != k && pos != j) continue;
    acc += kind == StatKind::moves ? 1 : k - j;
    pos = pos == k ? j : k;
  }
  return acc;
}

std::uint64_t rightward_total(const SwapTrace& trace) {
  if (!is_valid_trace(trace)) throw std::invalid_argument("invalid swap trace");
  std::uint64_t acc = 0;
  for (const auto [k, j] : trace.steps) acc += k - j;
  return acc;
}

void require_within_bound(std::size_t n, std::size_t bound) {
  if (n > bound)
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds the exhaustive bound " + std::to_string(bound));
}

Pgf exact_distribution(std::size_t n, Symbol sym, StatKind kind, StatSource source, std::size_t bound,
                       Execution exec) {
  require_within_bound(n, bound);
  require_symbol(n, sym);
  if (source == StatSource::chi) {
    return Pgf::from_counts(code_histogram(exec, n, false, [sym, kind](const TriangularCode&, const Permutation& p) {
      return static_cast<std::size_t>(chi(p, sym, kind));
    }));
  }
  return Pgf::from_counts(code_histogram(exec, n, false, [sym, kind](const TriangularCode& c, const Permutation&) {
    return static_cast<std::size_t>(trace_stat(trace_of(c), sym, kind));
  }));
}

std::vector<std::vector<UPoly>> pgf_table(std::size_t n_max, StatKind kind) {
  std::vector<std::vector<UPoly>> t(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    t[n].resize(n + 1);
    const Rational inv_n = ratio(1, static_cast<long>(n));
    UPoly diag = 1;
    for (std::size_t p = 1; p < n; ++p)
      diag += kind == StatKind::moves ? t[n - 1][p] : t[n - 1][p].shifted(static_cast<int>(n - p));
    t[n][n] = kind == StatKind::moves ? UPoly::u() * diag * inv_n : diag * inv_n;
    for (std::size_t p = 1; p < n; ++p) {
      const Rational w = ratio(static_cast<long>(p), static_cast<long>(n));
      UPoly tail;
      if (kind == StatKind::moves) {
        tail = UPoly::u() * (Rational(1) - w);
      } else {
        for (std::size_t j = 1; j <= n - p; ++j) tail += UPoly::u(static_cast<int>(j));
        tail *= inv_n;
      }
      t[n][p] = t[p][p] * w + tail;
    }
  }
  return t;
}

namespace {

void require_pair(std::size_t n, std::size_t p) {
  if (n < 1 || p < 1 || p > n) throw std::out_of_range("need 1 <= p <= n");
}

}  // namespace

Pgf phi(std::size_t n, std::size_t p) {
  require_pair(n, p);
  return Pgf(pgf_table(n, StatKind::moves)[n][p]);
}

Pgf xi(std::size_t n, std::size_t p) {
  require_pair(n, p);
  return Pgf(pgf_table(n, StatKind::distance)[n][p]);
}

Pgf phi_closed(std::size_t n, std::size_t p) {
  require_pair(n, p);
  const Rational nn(static_cast<unsigned long>(n));
  const Rational pf = factorial(static_cast<unsigned>(p));
  const UPoly u = UPoly::u();
  const UPoly bracket = (UPoly(pf) - rising_factorial(u, static_cast<unsigned>(p - 1))) / pf;
  const UPoly tail = exact_divide(u.pow(2) * bracket, UPoly(2) - u);
  const UPoly r = u * Rational(static_cast<unsigned long>(n - p + 1)) / nn +
                  tail * Rational(static_cast<unsigned long>(p)) / nn;
  return Pgf(r);
}

Pgf xi_nn_closed(std::size_t n) {
  if (n < 1) throw std::out_of_range("need n >= 1");
  const int ni = static_cast<int>(n);
  ULaurent head = 1;
  ULaurent inner;
  for (int j = 1; j < ni; ++j) {
    const Rational inv_j = ratio(1, j);
    head += ULaurent::monomial(inv_j, ni - j);
    inner += ULaurent::monomial(inv_j, 1 - j) - ULaurent::monomial(inv_j, j - 1);
  }
  const ULaurent cleared = inner.shifted(ni + 1);
  if (!cleared.is_polynomial()) throw ResidueError("negative powers of u survive in the closed form");
  const ULaurent total = (head + exact_divide(cleared, ULaurent(1) - ULaurent::u(2))) / Rational(ni);
  if (!total.is_polynomial()) throw ResidueError("closed form is not a polynomial");
  return Pgf(total);
}

Rational mean_moves(std::size_t n, std::size_t p) {
  require_pair(n, p);
  const Rational v = Rational(static_cast<unsigned long>(n + 2 * p - 2)) - harmonic(static_cast<unsigned>(p - 1));
  return v / Rational(static_cast<unsigned long>(n));
}

Pgf fixed_point_distribution(std::size_t n) {
  if (n < 1) throw std::out_of_range("need n >= 1");
  return Pgf(fixed_egf(n)[n]);
}

Pgf fixed_point_distribution_enumerated(std::size_t n, std::size_t bound, Execution exec) {
  require_within_bound(n, bound);
  return Pgf::from_counts(code_histogram(exec, n, false, [](const TriangularCode&, const Permutation& p) {
    return fixed_point_count(p);
  }));
}

Pgf nontrivial_swap_distribution(std::size_t n) {
  const Pgf f = fixed_point_distribution(n);
  UPoly r;
  for (const auto& [e, c] : f.poly().terms()) r += UPoly::monomial(c, static_cast<int>(n) - e);
  return Pgf(std::move(r));
}

Pgf rightward_total_distribution(std::size_t n, std::size_t bound, Execution exec) {
  require_within_bound(n, bound);
  return Pgf::from_counts(code_histogram(exec, n, false, [](const TriangularCode& c, const Permutation&) {
    return static_cast<std::size_t>(rightward_total(trace_of(c)));
  }));
}

Pgf inversion_distribution(std::size_t n, std::size_t bound, Execution exec) {
  require_within_bound(n, bound);
  return Pgf::from_counts(code_histogram(exec, n, false, [](const TriangularCode&, const Permutation& p) {
    return inversion_count(p);
  }));
}

MahonianReport mahonian_check(std::size_t n, std::size_t bound) {
  require_within_bound(n, bound);
  return {rightward_total_distribution(n, bound), inversion_distribution(n, bound),
          Pgf(mahonian_product(n) / factorial(static_cast<unsigned>(n)))};
}

SelectionSortRun selection_sort(const Permutation& w) {
  SelectionSortRun run;
  Permutation cur = w;
  Permutation where = inverse(w);
  run.states.push_back(cur);
  for (auto k = static_cast<Symbol>(w.degree()); k >= 2; --k) {
    const Symbol pos = where(k);
    run.steps.push_back({pos, k});
    if (pos != k) {
      const Symbol displaced = cur(k);
      cur.swap_positions(pos, k);
      where.swap_positions(k, displaced);
    }
    run.states.push_back(cur);
  }
  return run;
}

bool selection_sort_check(const Permutation& p) {
  const auto n = p.degree();
  const SelectionSortRun run = selection_sort(inverse(p));
  if (run.states.back() != Permutation::identity(n)) return false;
  const auto factors = triangular_factors(fy_encode(p));
  if (factors.size() != run.steps.size()) return false;
  for (std::size_t i = 0; i < run.steps.size(); ++i) {
    const auto& s = run.steps[i];
    if (Permutation::transposition(n, s.position, s.k) != factors[factors.size() - 1 - i]) return false;
  }
  return true;
}

Rank inversion_rank(const Permutation& p) {
  const auto d = inv_encode(p).digits();
  Rank r = 0;
  for (std::size_t i = 1; i <= d.size(); ++i) r = r * i + d[i - 1];
  return r;
}

ChiSquareResult uniformity_chi_square(std::size_t n, Algorithm algo, std::uint64_t samples, std::uint64_t seed,
                                      Execution exec) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  const bool cyclic = algo == Algorithm::sattolo;
  const std::size_t cells = code_space_size(n, cyclic);
  kernels::Histogram h =
      cyclic ? sample_histogram(exec, samples, seed,
                                [n](RandomSource& rng) {
                                  return static_cast<std::size_t>(
                                      rank(fy_encode(sattolo(n, rng).perm, true), LexOrder::big_endian));
                                })
             : sample_histogram(exec, samples, seed, [n](RandomSource& rng) {
                 return static_cast<std::size_t>(inversion_rank(fisher_yates(n, rng).perm));
               });
  if (h.size() > cells) throw std::logic_error("sample landed outside the target set");
  h.resize(cells, 0);
  const double expected = static_cast<double>(samples) / static_cast<double>(cells);
  double stat = 0;
  for (auto o : h) {
    const double d = static_cast<double>(o) - expected;
    stat += d * d / expected;
  }
  ChiSquareResult r;
  r.statistic = stat;
  r.cells = cells;
  if (cells > 1) {
    r.critical = boost::math::quantile(boost::math::chi_squared(static_cast<double>(cells - 1)), 0.9999);
  } else {
    r.critical = 1.0;  // one cell: the statistic is identically 0
  }
  return r;
}

Pgf monte_carlo_distribution(std::size_t n, Symbol sym, StatKind kind, std::uint64_t samples, std::uint64_t seed,
                             Execution exec) {
  require_symbol(n, sym);
  return Pgf::from_counts(sample_histogram(exec, samples, seed, [n, sym, kind](RandomSource& rng) {
    return static_cast<std::size_t>(chi(fisher_yates(n, rng).perm, sym, kind));
  }));
}

}  // namespace fyperm
