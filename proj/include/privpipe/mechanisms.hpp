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

#ifndef PRIVPIPE_MECHANISMS_HPP_
#define PRIVPIPE_MECHANISMS_HPP_

#include <functional>
#include <vector>

#include "privpipe/matrix.hpp"

namespace privpipe {

// Random response over k choices with truth probability p.
// Realises e^eps = 1 + k*p/(1-p) for p < 1.
struct RRParams {
  int k = 2;
  Rational p;
  void validate() const;
};

// Truncated alpha-geometric mechanism on the integer domain {0..n-1}.
// Realises eps = -ln(alpha) under the Euclidean metric.
struct GeomParams {
  int n = 2;
  Rational alpha;
  void validate() const;
};

// Which input pairs count as adjacent when measuring privacy.
struct Adjacency {
  enum class Kind { AllPairs, Metric };
  Kind kind = Kind::AllPairs;
  // Metric kind only; must be symmetric, nonnegative, zero iff equal.
  std::function<Rational(const Label&, const Label&)> distance;

  static Adjacency all_pairs();
  static Adjacency metric(std::function<Rational(const Label&, const Label&)> d);
  // |a-b| on integer labels.
  static Adjacency euclidean();
  // Sum of coordinate distances on integer-tuple labels.
  static Adjacency manhattan();
};

// Exact output of realized_epsilon. Ratios are grouped by pair distance so
// the whole object stays exact; logs appear only in epsilon().
struct MaxRatio {
  bool unbounded = false;
  struct Bucket {
    Rational distance;
    Rational ratio;
  };
  std::vector<Bucket> per_distance;  // ascending distance; all-pairs has a single bucket at 1

  // max over buckets of ln(ratio)/distance; +inf when unbounded, 0 when no
  // adjacent pairs exist.
  double epsilon() const;
  // The all-pairs maximum ratio (1 when the channel has a single row).
  Rational ratio() const;
};

Channel random_response(const RRParams& params);
Channel random_response(const RRParams& params, std::vector<Label> labels);
Channel truncated_geometric(const GeomParams& params);

// Exact maximal probability ratio across adjacent inputs. 0/0 column pairs
// are skipped; p/0 with p > 0 reports unbounded.
MaxRatio realized_epsilon(const Channel& c, const Adjacency& adj);

// Exact check that m[x1,y] <= rho^d(x1,x2) * m[x2,y] for every adjacent pair
// and column (d = 1 under all-pairs). Metric distances must be integers for
// the exponentiation to stay exact.
bool satisfies_ratio_bound(const Matrix& m, const Adjacency& adj, const Rational& rho);

// The random-response witness W with random_response(from) * W =
// random_response(to), solved exactly for W's truth probability. Throws
// DomainError when `to` is strictly leakier than `from`.
Channel rr_witness(const RRParams& from, const RRParams& to);

// invert(G_from) * G_to. The caller checks stochasticity to conclude
// refinement; the anti-refinement direction yields negative entries.
Matrix geometric_witness(const GeomParams& from, const GeomParams& to);

// Mechanism family spec shared by the CLI, configs, and stability scans.
struct MechanismSpec {
  enum class Family { RandomResponse, Geometric };
  Family family = Family::RandomResponse;
  int size = 2;     // k for rr, n for geometric
  Rational param;   // p for rr, alpha for geometric
};

Channel build_mechanism(const MechanismSpec& spec);

// Exact e^eps as a ratio, plus its float log. unbounded covers rr at p = 1.
struct EpsKey {
  bool unbounded = false;
  Rational ratio{1};
  double eps_float() const;

  friend bool operator<(const EpsKey& a, const EpsKey& b) {
    if (a.unbounded || b.unbounded) return !a.unbounded && b.unbounded;
    return a.ratio < b.ratio;
  }
  friend bool operator==(const EpsKey& a, const EpsKey& b) {
    return a.unbounded == b.unbounded && (a.unbounded || a.ratio == b.ratio);
  }
};

EpsKey mechanism_eps_key(const MechanismSpec& spec);

}  // namespace privpipe

#endif  // PRIVPIPE_MECHANISMS_HPP_
