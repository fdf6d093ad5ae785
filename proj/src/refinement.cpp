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

#include "privpipe/refinement.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "privpipe/simplex.hpp"

namespace privpipe {
namespace {

struct ConstraintRow {
  size_t x;  // row of A/B this equality came from (representative)
  size_t z;  // column of B
};

}  // namespace

WitnessSearch find_witness_detail(const Channel& a, const Channel& b) {
  if (a.row_labels() != b.row_labels()) {
    throw DimensionError("refinement check needs channels over the same input labels");
  }
  const Matrix& A = a.matrix();
  const Matrix& B = b.matrix();
  const size_t nR = A.n_rows();
  const size_t mA = A.n_cols();
  const size_t q = B.n_cols();

  // Duplicate (A-row, B-row) pairs contribute identical equalities; keep one
  // representative each.
  std::vector<size_t> reps;
  for (size_t x = 0; x < nR; ++x) {
    bool dup = false;
    for (size_t r : reps) {
      bool same = true;
      for (size_t y = 0; y < mA && same; ++y) same = A.at(x, y) == A.at(r, y);
      for (size_t z = 0; z < q && same; ++z) same = B.at(x, z) == B.at(r, z);
      if (same) {
        dup = true;
        break;
      }
    }
    if (!dup) reps.push_back(x);
  }

  LpProblem lp;
  lp.n_vars = mA * q;
  std::vector<ConstraintRow> tags;
  for (size_t x : reps) {
    for (size_t z = 0; z < q; ++z) {
      std::vector<Rational> row(lp.n_vars);
      for (size_t y = 0; y < mA; ++y) row[y * q + z] = A.at(x, y);
      lp.rows.push_back(std::move(row));
      lp.rhs.push_back(B.at(x, z));
      tags.push_back({x, z});
    }
  }
  for (size_t y = 0; y < mA; ++y) {
    std::vector<Rational> row(lp.n_vars);
    for (size_t z = 0; z < q; ++z) row[y * q + z] = 1;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(Rational(1));
    tags.push_back({nR, y});  // row-sum constraint marker
  }

  LpOutcome lpout = solve_feasibility(lp);
  WitnessSearch out;
  out.stats.pivots = lpout.pivots;
  out.stats.variables = lp.n_vars;
  if (lpout.feasible) {
    Matrix w(A.col_labels(), B.col_labels());
    for (size_t y = 0; y < mA; ++y) {
      for (size_t z = 0; z < q; ++z) w.at(y, z) = lpout.solution[y * q + z];
    }
    out.witness = std::move(w);
    return out;
  }
  // Farkas dual restricted to the A.W = B equalities, with the sign flipped
  // so that sum_x dual[x][z]*A[x][y] + e[y] >= 0 holds componentwise while
  // sum dual.B + sum e stays negative. Deduplicated rows keep dual 0.
  out.dual.assign(nR, std::vector<Rational>(q));
  for (size_t i = 0; i < tags.size(); ++i) {
    if (tags[i].x < nR) out.dual[tags[i].x][tags[i].z] = -lpout.farkas[i];
  }
  return out;
}

std::optional<Matrix> find_witness(const Channel& a, const Channel& b) {
  return find_witness_detail(a, b).witness;
}

namespace {

// Build the refuting loss from the Farkas dual: shift to nonnegative, scale
// to max entry 1. Affine maps preserve the strict uncertainty comparison.
LossFunction loss_from_dual(const std::vector<std::vector<Rational>>& dual,
                            const std::vector<Label>& secrets, const std::vector<Label>& actions) {
  Rational lo(0), hi(0);
  for (const auto& row : dual) {
    for (const Rational& v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const Rational shift = lo.sign() < 0 ? -lo : Rational(0);
  const Rational span = hi + shift;
  std::vector<Rational> grid;
  grid.reserve(dual.size() * dual.front().size());
  for (const auto& row : dual) {
    for (const Rational& v : row) {
      Rational e = v + shift;
      if (span.sign() > 0) e /= span;
      grid.push_back(std::move(e));
    }
  }
  return LossFunction(secrets, actions, std::move(grid));
}

bool certificate_refutes(const Prior& pi, const LossFunction& l, const Channel& a,
                         const Channel& b) {
  return posterior_uncertainty(l, pi, a) > posterior_uncertainty(l, pi, b);
}

// Fallback used only if the dual-derived certificate fails validation:
// seeded search over random 0/1 vertex losses until one refutes.
std::optional<LossFunction> random_vertex_loss_search(const Channel& a, const Channel& b,
                                                      const Prior& pi, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const size_t n = a.n_rows();
  const size_t q = b.n_cols();
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<Rational> grid(n * q);
    bool any = false;
    for (Rational& v : grid) {
      if (coin(rng)) {
        v = 1;
        any = true;
      }
    }
    if (!any) continue;
    LossFunction l(a.row_labels(), b.col_labels(), std::move(grid));
    if (certificate_refutes(pi, l, a, b)) return l;
  }
  return std::nullopt;
}

}  // namespace

RefinementVerdict check_refinement(const Channel& a, const Channel& b, unsigned seed) {
  WitnessSearch search = find_witness_detail(a, b);
  RefinementVerdict verdict;
  verdict.stats = search.stats;
  if (search.witness) {
    verdict.refines = true;
    verdict.witness = std::move(search.witness);
    return verdict;
  }
  verdict.refines = false;
  Prior pi = Prior::uniform(a.row_labels());
  LossFunction l = loss_from_dual(search.dual, a.row_labels(), b.col_labels());
  if (!certificate_refutes(pi, l, a, b)) {
    auto fallback = random_vertex_loss_search(a, b, pi, seed);
    if (!fallback) throw Error("failed to build a validated refutation certificate");
    l = std::move(*fallback);
  }
  verdict.certificate = std::make_pair(std::move(pi), std::move(l));
  return verdict;
}

bool structural_stability_check(const Matrix& w, const PostProcessor& p) {
  if (w.n_rows() != w.n_cols() || w.n_cols() != p.n_rows()) {
    throw DimensionError("witness must be square over the post-processor's rows");
  }
  const Matrix wp = matmul(w, p.matrix());
  const Matrix lhs = matmul(p.matrix(), matmul(left_inverse(p.matrix()), wp));
  return lhs.same_entries(wp);
}

PrecheckVerdict instability_precheck(const Channel& g, const Channel& g2, const PostProcessor& p) {
  const Matrix q = matmul(invert(g.matrix()), g2.matrix());
  if (is_stochastic(q) && !structural_stability_check(q, p)) return PrecheckVerdict::Unstable;
  return PrecheckVerdict::Inconclusive;
}

Matrix kron_refinement_witness(const Matrix& w, int n) {
  if (!is_stochastic(w)) throw DomainError("refinement witness must be stochastic");
  return kron_power(w, n);
}

}  // namespace privpipe
