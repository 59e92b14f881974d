#pragma once

// Exact generating-function identities for the moves and distance
// statistics. Grand series:
//   F(u, t, x) = sum_n x^n sum_p t^p P_np(u),   G(u, x) = sum_n x^n P_nn(u)
// where P is phi (moves) or xi (distance). Sigma_1..Sigma_4 split F by the
// four cases of the chi recurrence.

#include <string>
#include <vector>

#include "fyperm/algebra.hpp"
#include "fyperm/series.hpp"
#include "fyperm/statistics.hpp"

namespace fyperm {

/// e^{(u-1)x} / (1-x)
Series<ULaurent> fixed_egf(std::size_t order);
/// prod_{i=1}^n (1 - u^i) / (1 - u), as a polynomial.
UPoly mahonian_product(std::size_t n);

/// (u / (1-t)) [log(1-tx) - t log(1-x)]
Series<BiLaurent> sigma3_moves(std::size_t order);
/// u log(1-x) + ux / (1-x)
Series<ULaurent> sigma3_moves_t1(std::size_t order);
/// (1 / (u-t)) [u log(1-tx) - t log(1-ux)]
Series<BiLaurent> sigma3_distance(std::size_t order);

/// F(u, 1, x) = (u / (2-u)) [(1-x)^{-2} - (1-x)^{-u}] over the denominator 2-u.
FractionSeries moves_grand_t1(std::size_t order);
/// G(u, x) for moves over the denominator (2-u)(1-u).
FractionSeries moves_diagonal(std::size_t order);
/// F(u, t, x) for moves from its first-order differential equation.
Series<BiLaurent> solve_moves_grand(std::size_t order);

/// F(u, 1/u, ux) for distance, from its exact solution.
Series<ULaurent> distance_grand_diagonal(std::size_t order);
/// G(u, x) for distance, integrated from G' = u F(u, 1/u, ux) + 1/(1-x).
Series<ULaurent> distance_diagonal(std::size_t order);
/// F(u, t, x) for distance from its first-order differential equation.
Series<BiLaurent> solve_distance_grand(std::size_t order);

/// F assembled from the statistics recurrences.
Series<BiLaurent> grand_from_recurrence(std::size_t order, StatKind kind);
/// G assembled from the statistics recurrences.
Series<ULaurent> diagonal_from_recurrence(std::size_t order, StatKind kind);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;  // first mismatch, empty when the identity holds
};

struct OdeReport {
  StatKind kind = StatKind::moves;
  std::size_t order = 0;
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

/// Checks the differential system and the Sigma decomposition as exact
/// series identities at the given order.
OdeReport verify_ode_systems(std::size_t order, StatKind kind);

}  // namespace fyperm
