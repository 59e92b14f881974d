#pragma once

// Per-symbol statistics of the Fisher-Yates construction.
//
// chi() is the normative recursive definition of the two statistics; the
// trace statistics simulate an actual run. Their per-run values can differ
// (for distance) but their distributions over all runs coincide.

#include <cstdint>
#include <vector>

#include "fyperm/algebra.hpp"
#include "fyperm/codec.hpp"
#include "fyperm/generator.hpp"
#include "fyperm/permutation.hpp"

namespace fyperm {

enum class StatKind { moves, distance };
enum class StatSource { chi, trace };
enum class Execution { serial, parallel };

/// Probability generating function: a polynomial in u with non-negative
/// rational coefficients summing to exactly 1.
class Pgf {
 public:
  /// Throws std::invalid_argument unless p is a valid PGF.
  explicit Pgf(UPoly p);
  /// counts[k] occurrences of value k, normalized.
  static Pgf from_counts(const std::vector<std::uint64_t>& counts);

  const UPoly& poly() const noexcept { return poly_; }
  Rational probability(int k) const { return poly_.coeff(k); }
  int degree() const { return poly_.max_exponent(); }
  /// P'(1).
  Rational mean() const { return poly_.derivative().sum(); }

  friend bool operator==(const Pgf&, const Pgf&) = default;

 private:
  UPoly poly_;
};

std::uint64_t chi(const Permutation& p, Symbol sym, StatKind kind);
std::uint64_t trace_stat(const SwapTrace& trace, Symbol sym, StatKind kind);
/// Sum of (k - j_k) over the trace.
std::uint64_t rightward_total(const SwapTrace& trace);

/// Default size limit for n!-sized enumerations.
inline constexpr std::size_t kExhaustiveBound = 7;
/// Default size limit for (n-1)!-sized enumerations.
inline constexpr std::size_t kCycleExhaustiveBound = 8;

/// Throws std::out_of_range when n exceeds bound.
void require_within_bound(std::size_t n, std::size_t bound);

Pgf exact_distribution(std::size_t n, Symbol sym, StatKind kind, StatSource source,
                       std::size_t bound = kExhaustiveBound, Execution exec = Execution::parallel);

/// Rows 1..n_max of the two-level recurrence; table[n][p] for 1 <= p <= n.
/// Row 0 and column 0 are unused zeros.
std::vector<std::vector<UPoly>> pgf_table(std::size_t n_max, StatKind kind);

Pgf phi(std::size_t n, std::size_t p);
Pgf xi(std::size_t n, std::size_t p);
Pgf phi_closed(std::size_t n, std::size_t p);
/// Evaluated in Laurent form; throws ResidueError if the result is not a polynomial.
Pgf xi_nn_closed(std::size_t n);
Rational mean_moves(std::size_t n, std::size_t p);

/// Distribution of fixed points from the exponential generating function.
Pgf fixed_point_distribution(std::size_t n);
/// The same distribution by enumerating S_n.
Pgf fixed_point_distribution_enumerated(std::size_t n, std::size_t bound = kExhaustiveBound,
                                        Execution exec = Execution::parallel);
/// Distribution of n - f, the number of nontrivial swaps.
Pgf nontrivial_swap_distribution(std::size_t n);

Pgf rightward_total_distribution(std::size_t n, std::size_t bound = kExhaustiveBound,
                                 Execution exec = Execution::parallel);
Pgf inversion_distribution(std::size_t n, std::size_t bound = kExhaustiveBound,
                           Execution exec = Execution::parallel);

struct MahonianReport {
  Pgf rightward;
  Pgf inversions;
  Pgf product;
  bool holds() const { return rightward == inversions && inversions == product; }
};

MahonianReport mahonian_check(std::size_t n, std::size_t bound = kExhaustiveBound);

struct SortStep {
  Symbol position;  // where k was found
  Symbol k;         // the position it was moved to
};

struct SelectionSortRun {
  std::vector<Permutation> states;  // initial word first
  std::vector<SortStep> steps;      // one per k = n down to 2, trivial ones included
};

/// Places n, n-1, ..., 2 in turn by swapping each into its position.
SelectionSortRun selection_sort(const Permutation& w);
/// Sorting inverse(p) applies tau_{n-1}, ..., tau_1 of p's triangular factorization.
bool selection_sort_check(const Permutation& p);

enum class Algorithm { fisher_yates, sattolo };

struct ChiSquareResult {
  double statistic = 0;
  std::size_t cells = 0;
  double critical = 0;  // 99.99th percentile of chi-square with cells-1 degrees of freedom
  bool passes() const { return statistic < critical; }
};

/// Pearson test of the sampled permutation frequencies against the uniform
/// law on S_n (fisher_yates) or on the n-cycles (sattolo).
ChiSquareResult uniformity_chi_square(std::size_t n, Algorithm algo, std::uint64_t samples,
                                      std::uint64_t seed = kDefaultSeed, Execution exec = Execution::parallel);

/// Empirical distribution of chi(., sym, kind) over Fisher-Yates samples.
Pgf monte_carlo_distribution(std::size_t n, Symbol sym, StatKind kind, std::uint64_t samples,
                             std::uint64_t seed = kDefaultSeed, Execution exec = Execution::parallel);

/// Mixed-radix rank of the inversion table; a bijection S_n -> [0, n!).
Rank inversion_rank(const Permutation& p);

}  // namespace fyperm
