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

#ifndef PRIVPIPE_UTILITY_HPP_
#define PRIVPIPE_UTILITY_HPP_

#include <vector>

#include "privpipe/matrix.hpp"

namespace privpipe {

// Bayesian prior over a labelled secret set.
struct Prior {
  std::vector<Label> over;
  std::vector<Rational> probs;

  Prior(std::vector<Label> labels, std::vector<Rational> p);
  static Prior uniform(const std::vector<Label>& labels);
  static Prior point(const std::vector<Label>& labels, size_t index);
};

// Nonnegative loss matrix indexed by secrets x actions.
class LossFunction {
 public:
  LossFunction(std::vector<Label> secrets, std::vector<Label> actions, std::vector<Rational> loss);

  const std::vector<Label>& secrets() const { return secrets_; }
  const std::vector<Label>& actions() const { return actions_; }
  const Rational& at(size_t x, size_t w) const { return loss_[x * actions_.size() + w]; }
  Rational& at(size_t x, size_t w) { return loss_[x * actions_.size() + w]; }
  size_t n_secrets() const { return secrets_.size(); }
  size_t n_actions() const { return actions_.size(); }

 private:
  std::vector<Label> secrets_, actions_;
  std::vector<Rational> loss_;
};

enum class LossKind { BayesRisk, LinearError, MeanSquaredError, ScaledAbs };

// The four standard losses. Distance kinds need an integer-labelled domain;
// `scale` applies to ScaledAbs only (e.g. 1000*|w-x|).
LossFunction builtin_loss(LossKind kind, const std::vector<Label>& domain,
                          const Rational& scale = Rational(1));

// ArgMax-accuracy loss over histogram secrets: 0 when the guessed index is
// the histogram's first maximal bar, else 1. Actions are {0..k-1}.
LossFunction ama_loss(const std::vector<Label>& histograms, int k);

// First index attaining the maximum of an integer-tuple histogram label.
int argmax_index(const Label& histogram);

// Expected minimal loss after observing the channel's output:
// sum_y min_w sum_x pi_x * M[x,y] * l(x,w).
Rational posterior_uncertainty(const LossFunction& l, const Prior& pi, const Channel& m);

// min_w sum_x pi_x * l(x,w) -- the adversary's loss before any observation.
Rational prior_uncertainty(const LossFunction& l, const Prior& pi);

// Ghosh-style utility: minimum over deterministic remaps r : Y -> X of the
// expected loss of guessing r(y). Requires actions = secrets. Each column's
// best guess is independent, so the minimisation is per-column. Intended as
// a small-instance oracle for posterior_uncertainty.
Rational ghosh_remap_utility(const LossFunction& l, const Prior& pi, const Channel& m);

}  // namespace privpipe

#endif  // PRIVPIPE_UTILITY_HPP_
