// Copyright 2026 The privpipe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privpipe/simplex.hpp"

#include <utility>

#include "privpipe/error.hpp"

namespace privpipe {

LpOutcome solve_feasibility(const LpProblem& lp) {
  const size_t m = lp.rows.size();
  const size_t n = lp.n_vars;
  if (lp.rhs.size() != m) throw DimensionError("rhs length does not match constraint count");
  for (const auto& row : lp.rows) {
    if (row.size() != n) throw DimensionError("constraint row length does not match n_vars");
  }

  // Phase-1: minimise the sum of one artificial variable per constraint,
  // after flipping rows so every rhs is nonnegative. Columns: n structural,
  // m artificial, then the rhs.
  const size_t ncols = n + m;
  std::vector<int> flip(m, 1);
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(ncols + 1));
  for (size_t i = 0; i < m; ++i) {
    flip[i] = lp.rhs[i].sign() < 0 ? -1 : 1;
    const Rational f(flip[i]);
    for (size_t j = 0; j < n; ++j) t[i][j] = f * lp.rows[i][j];
    t[i][n + i] = 1;
    t[i][ncols] = f * lp.rhs[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced-cost row for the phase-1 objective (artificials cost 1).
  std::vector<Rational> cost(ncols + 1);
  for (size_t j = 0; j <= ncols; ++j) {
    Rational colsum;
    for (size_t i = 0; i < m; ++i) colsum += t[i][j];
    const Rational cj = (j >= n && j < ncols) ? Rational(1) : Rational(0);
    cost[j] = cj - colsum;
  }

  LpOutcome out;
  for (;;) {
    // Bland: entering variable = lowest index with negative reduced cost.
    size_t enter = ncols;
    for (size_t j = 0; j < ncols; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) break;

    // Leaving row: minimum ratio, ties broken by smallest basic variable.
    size_t leave = m;
    Rational best_ratio;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rational ratio = t[i][ncols] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        best_ratio = std::move(ratio);
        leave = i;
      }
    }
    if (leave == m) throw Error("phase-1 objective unbounded");  // cannot happen: bounded below by 0

    const Rational pivot = t[leave][enter];
    for (size_t j = 0; j <= ncols; ++j) t[leave][j] /= pivot;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rational f = t[i][enter];
      for (size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (!cost[enter].is_zero()) {
      const Rational f = cost[enter];
      for (size_t j = 0; j <= ncols; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  Rational objective;
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) objective += t[i][ncols];
  }

  if (objective.is_zero()) {
    out.feasible = true;
    out.solution.assign(n, Rational(0));
    for (size_t i = 0; i < m; ++i) {
      if (basis[i] < n) out.solution[basis[i]] = t[i][ncols];
    }
    return out;
  }

  // Infeasible: the phase-1 dual y' = c_B B^{-1} appears in the final tableau
  // under the artificial columns. Undo the row flips to certify the original
  // system: y^T A <= 0 and y^T rhs > 0.
  out.feasible = false;
  out.farkas.assign(m, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    Rational yi;
    for (size_t k = 0; k < m; ++k) {
      if (basis[k] >= n) yi += t[k][n + i];
    }
    out.farkas[i] = Rational(flip[i]) * yi;
  }
  return out;
}

}  // namespace privpipe
