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

#ifndef PRIVPIPE_SIMPLEX_HPP_
#define PRIVPIPE_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

#include "privpipe/rational.hpp"

namespace privpipe {

// Equality-form feasibility problem: find x >= 0 with rows . x = rhs.
struct LpProblem {
  size_t n_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

struct LpOutcome {
  bool feasible = false;
  std::vector<Rational> solution;  // length n_vars when feasible
  // When infeasible: a Farkas dual y with y^T A <= 0 componentwise and
  // y^T rhs > 0, indexed by constraint.
  std::vector<Rational> farkas;
  size_t pivots = 0;
};

// Exact phase-1 simplex with Bland's rule (deterministic, anti-cycling).
LpOutcome solve_feasibility(const LpProblem& lp);

}  // namespace privpipe

#endif  // PRIVPIPE_SIMPLEX_HPP_
