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

#ifndef PRIVPIPE_PIPELINES_HPP_
#define PRIVPIPE_PIPELINES_HPP_

#include <functional>
#include <vector>

#include "privpipe/mechanisms.hpp"
#include "privpipe/utility.hpp"

namespace privpipe {

// Predicate matrix |domain| x 2 with columns (true, false). The accepted
// subset must be a proper, non-empty subset, else a column would be unused.
PostProcessor boolean_aggregator(const std::vector<Label>& domain,
                                 const std::vector<Label>& accepted);

// 2^n x (n+1) map from Boolean n-tuples to their count of trues. Rows are
// ordered like kron_power of a (true,false)-column matrix.
PostProcessor tally(int n);

// Counting query: kron_power(b, n) . tally(n), mapping n-tuples over b's
// domain to how many coordinates b accepts.
PostProcessor counting_query(const PostProcessor& b, int n);

// Maps each n-tuple over a numeric domain to the sum of its entries; columns
// are the attainable sums.
PostProcessor sum_query(const std::vector<Label>& domain, int n);

// Maps each length-k tuple over {0..n} to the first index attaining its
// maximum.
PostProcessor argmax_post(int k, int n);

// All k-bar histograms summing to n (k-tuples, lexicographic order).
std::vector<Label> histogram_domain(int k, int n);

// Maps n-tuples of choices in {0..k-1} to their k-bar histograms.
PostProcessor histogram_preprocessor(int k, int n);

// Perturb-then-argmax segment of the noisy ArgMax pipeline: rows are the
// valid histograms (sum = n), each bar perturbed independently by the
// geometric mechanism on {0..n} (so g.n must be n+1), then argmax. The
// (n+1)^k full input space is never materialised.
Channel noisy_argmax_pipeline(int k, int n, const GeomParams& g);

// Count-of-target channel for one unknown respondent among known ones: for
// each unknown value x, the Poisson-binomial distribution of how many of the
// |known|+1 independently perturbed values land on `target`.
Channel known_context_count(const Channel& g, const std::vector<Label>& known_values,
                            const Label& target, const std::vector<Label>& unknown_domain);

// Perturber, deterministic post-processor, and their exact composition.
struct Pipeline {
  Channel perturber;
  PostProcessor post;
  Channel composed;

  static Pipeline make(Channel perturber, PostProcessor post);
};

struct StabilityReport {
  struct Point {
    Rational param;
    double epsilon_float = 0.0;
    Rational utility;
  };
  struct Violation {
    size_t lo_index = 0;  // adjacent grid pair: eps grew, yet
    size_t hi_index = 0;  // utility loss grew too
  };
  enum class Verdict { LStableOnGrid, Unstable };

  std::vector<Point> grid;
  std::vector<Violation> violations;
  Verdict verdict = Verdict::LStableOnGrid;
};

// Generic scan core: evaluates the exact utility of pipeline(param) at each
// grid point and flags every adjacent pair where epsilon strictly increases
// but so does the loss. The grid must be sorted by non-decreasing epsilon
// (checked exactly through eps_of).
StabilityReport stability_scan(const std::vector<Rational>& grid,
                               const std::function<Channel(const Rational&)>& pipeline,
                               const std::function<EpsKey(const Rational&)>& eps_of,
                               const LossFunction& l, const Prior& pi);

// Family + fixed post-processor specialisation.
StabilityReport stability_scan(MechanismSpec::Family family, int size,
                               const std::vector<Rational>& grid, const PostProcessor& post,
                               const LossFunction& l, const Prior& pi);

}  // namespace privpipe

#endif  // PRIVPIPE_PIPELINES_HPP_
