#pragma once

// Exact phase-one simplex for feasibility of { lambda >= 0 : A lambda = b }.
// Bland's rule (smallest eligible index) for both entering and leaving
// variables guarantees termination on degenerate problems.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coxconv/rational.hpp"

namespace coxconv::lp {

/// `columns[j]` is the j-th column of A (all of length b.size()).
/// Returns a nonnegative solution if one exists.
inline std::optional<std::vector<Rational>> feasible_nonnegative(std::span<const std::vector<Rational>> columns,
                                                                 std::span<const Rational> b) {
  const std::size_t rows = b.size();
  const std::size_t n = columns.size();
  for (const auto& c : columns)
    if (c.size() != rows) throw DimensionMismatch(rows, c.size());

  // Tableau columns: n structural, rows artificial, one right-hand side.
  const std::size_t width = n + rows + 1;
  const std::size_t rhs = n + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-columns[j][i]) : columns[j][i];
    t[i][n + i] = 1;
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of minimizing the sum of artificials.
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < rows; ++i) cost[rhs] -= t[i][rhs];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen for a phase-one objective bounded by 0

    const Rational inv = Rational(1) / t[leave][enter];
    for (auto& q : t[leave]) q *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t k = 0; k < width; ++k)
        if (t[leave][k] != 0) t[i][k] -= f * t[leave][k];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t k = 0; k < width; ++k)
        if (t[leave][k] != 0) cost[k] -= f * t[leave][k];
    }
    basis[leave] = enter;
  }

  if (cost[rhs] != 0) return std::nullopt;  // positive artificial sum remains
  std::vector<Rational> solution(n, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < n) solution[basis[i]] = t[i][rhs];
  return solution;
}

}  // namespace coxconv::lp
