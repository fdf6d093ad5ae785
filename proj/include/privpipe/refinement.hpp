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

#ifndef PRIVPIPE_REFINEMENT_HPP_
#define PRIVPIPE_REFINEMENT_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "privpipe/matrix.hpp"
#include "privpipe/utility.hpp"

namespace privpipe {

struct RefinementStats {
  size_t pivots = 0;
  size_t variables = 0;
};

// Outcome of a refinement check between channels A and B (does A . W = B have
// a stochastic solution W?). Exactly one of witness/certificate is present:
// refines implies matmul(A, witness) = B exactly; not-refines implies the
// certificate's strict inequality U_l(pi, A) > U_l(pi, B) holds exactly.
struct RefinementVerdict {
  bool refines = false;
  std::optional<Matrix> witness;
  std::optional<std::pair<Prior, LossFunction>> certificate;
  RefinementStats stats;
};

// Internal detail of the witness LP, exposed for tests and the certificate
// construction: the Farkas dual over the A.W = B equalities when infeasible.
struct WitnessSearch {
  std::optional<Matrix> witness;
  // dual[x][z] for constraint (row x, column z); empty when feasible. Signs
  // satisfy sum_x dual[x][z]*A[x][y] + e[y] >= 0 and
  // sum dual.B + sum e < 0 for some e (not returned).
  std::vector<std::vector<Rational>> dual;
  RefinementStats stats;
};

WitnessSearch find_witness_detail(const Channel& a, const Channel& b);

// Exact-rational LP witness search; returns a stochastic W with A.W = B, or
// nothing when no witness exists.
std::optional<Matrix> find_witness(const Channel& a, const Channel& b);

// Witness search plus, on failure, a validated refuting (prior, loss)
// certificate built from the Farkas dual. The seed drives the randomized
// fallback search used only if the dual-derived certificate fails validation.
RefinementVerdict check_refinement(const Channel& a, const Channel& b, unsigned seed = 0);

// True iff P . P^-1 . W . P = W . P with the canonical left inverse. By the
// only-if direction of the structural stability theorem, false implies
// P is not refined by W . P.
bool structural_stability_check(const Matrix& w, const PostProcessor& p);

enum class PrecheckVerdict { Unstable, Inconclusive };

// Appendix-style instability pre-check without a counterexample: with
// Q = g^-1 . g2, UNSTABLE when Q is stochastic yet the structural check
// fails (then g.P is not refined by g2.P); otherwise INCONCLUSIVE.
PrecheckVerdict instability_precheck(const Channel& g, const Channel& g2, const PostProcessor& p);

// kron_power(w, n): the witness for refinement of the n-fold Kronecker pair.
Matrix kron_refinement_witness(const Matrix& w, int n);

}  // namespace privpipe

#endif  // PRIVPIPE_REFINEMENT_HPP_
