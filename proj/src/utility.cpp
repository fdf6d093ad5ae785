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

#include "privpipe/utility.hpp"

#include <cstdlib>
#include <utility>

namespace privpipe {

Prior::Prior(std::vector<Label> labels, std::vector<Rational> p)
    : over(std::move(labels)), probs(std::move(p)) {
  if (over.size() != probs.size()) throw DimensionError("prior label/probability count mismatch");
  if (over.empty()) throw DomainError("empty prior");
  Rational sum;
  for (const Rational& q : probs) {
    if (q.sign() < 0) throw DomainError("negative prior probability");
    sum += q;
  }
  if (sum != Rational(1)) throw DomainError("prior must sum to exactly 1");
}

Prior Prior::uniform(const std::vector<Label>& labels) {
  if (labels.empty()) throw DomainError("empty prior");
  return Prior(labels, std::vector<Rational>(labels.size(),
                                             Rational(1, static_cast<long>(labels.size()))));
}

Prior Prior::point(const std::vector<Label>& labels, size_t index) {
  if (index >= labels.size()) throw DomainError("point prior index out of range");
  std::vector<Rational> p(labels.size());
  p[index] = 1;
  return Prior(labels, std::move(p));
}

LossFunction::LossFunction(std::vector<Label> secrets, std::vector<Label> actions,
                           std::vector<Rational> loss)
    : secrets_(std::move(secrets)), actions_(std::move(actions)), loss_(std::move(loss)) {
  if (secrets_.empty() || actions_.empty()) throw DomainError("loss function axes must be non-empty");
  if (loss_.size() != secrets_.size() * actions_.size()) {
    throw DimensionError("loss entry count does not match shape");
  }
  for (const Rational& v : loss_) {
    if (v.sign() < 0) throw DomainError("loss entries must be nonnegative");
  }
}

LossFunction builtin_loss(LossKind kind, const std::vector<Label>& domain, const Rational& scale) {
  std::vector<Rational> grid;
  grid.reserve(domain.size() * domain.size());
  for (const Label& x : domain) {
    for (const Label& w : domain) {
      switch (kind) {
        case LossKind::BayesRisk:
          grid.push_back(x == w ? Rational(0) : Rational(1));
          break;
        case LossKind::LinearError:
          grid.push_back(Rational(std::llabs(w.as_int() - x.as_int())));
          break;
        case LossKind::MeanSquaredError: {
          Rational d(std::llabs(w.as_int() - x.as_int()));
          grid.push_back(d * d);
          break;
        }
        case LossKind::ScaledAbs:
          grid.push_back(scale * Rational(std::llabs(w.as_int() - x.as_int())));
          break;
      }
    }
  }
  return LossFunction(domain, domain, std::move(grid));
}

int argmax_index(const Label& histogram) {
  const Label::Tuple& bars = histogram.elems();
  if (bars.empty()) throw DomainError("empty histogram");
  size_t best = 0;
  for (size_t i = 1; i < bars.size(); ++i) {
    if (bars[i].as_int() > bars[best].as_int()) best = i;  // strict: first max wins ties
  }
  return static_cast<int>(best);
}

LossFunction ama_loss(const std::vector<Label>& histograms, int k) {
  if (k < 1) throw DomainError("ama_loss needs k >= 1");
  std::vector<Rational> grid;
  grid.reserve(histograms.size() * static_cast<size_t>(k));
  for (const Label& h : histograms) {
    if (h.elems().size() != static_cast<size_t>(k)) {
      throw DimensionError("histogram label arity does not match k");
    }
    const int mode = argmax_index(h);
    for (int w = 0; w < k; ++w) grid.push_back(w == mode ? Rational(0) : Rational(1));
  }
  return LossFunction(histograms, int_range(k), std::move(grid));
}

namespace {

void check_labels(const LossFunction& l, const Prior& pi, const Channel& m) {
  if (pi.over != m.row_labels() || pi.over != l.secrets()) {
    throw DimensionError("prior, channel rows and loss secrets must share labels");
  }
}

}  // namespace

Rational posterior_uncertainty(const LossFunction& l, const Prior& pi, const Channel& m) {
  check_labels(l, pi, m);
  const Matrix& M = m.matrix();
  Rational total;
  std::vector<Rational> weighted(M.n_rows());
  for (size_t y = 0; y < M.n_cols(); ++y) {
    for (size_t x = 0; x < M.n_rows(); ++x) weighted[x] = pi.probs[x] * M.at(x, y);
    bool first = true;
    Rational best;
    for (size_t w = 0; w < l.n_actions(); ++w) {
      Rational v;
      for (size_t x = 0; x < M.n_rows(); ++x) {
        if (!weighted[x].is_zero()) v += weighted[x] * l.at(x, w);
      }
      if (first || v < best) {
        best = std::move(v);
        first = false;
      }
    }
    total += best;
  }
  return total;
}

Rational prior_uncertainty(const LossFunction& l, const Prior& pi) {
  if (pi.over != l.secrets()) throw DimensionError("prior and loss secrets must share labels");
  bool first = true;
  Rational best;
  for (size_t w = 0; w < l.n_actions(); ++w) {
    Rational v;
    for (size_t x = 0; x < pi.over.size(); ++x) v += pi.probs[x] * l.at(x, w);
    if (first || v < best) {
      best = std::move(v);
      first = false;
    }
  }
  return best;
}

Rational ghosh_remap_utility(const LossFunction& l, const Prior& pi, const Channel& m) {
  check_labels(l, pi, m);
  if (l.actions() != l.secrets()) {
    throw DimensionError("ghosh remapping needs a square loss (actions = secrets)");
  }
  const Matrix& M = m.matrix();
  Rational total;
  for (size_t y = 0; y < M.n_cols(); ++y) {
    bool first = true;
    Rational best;
    for (size_t guess = 0; guess < l.n_actions(); ++guess) {
      Rational v;
      for (size_t x = 0; x < M.n_rows(); ++x) {
        if (!M.at(x, y).is_zero()) v += pi.probs[x] * M.at(x, y) * l.at(x, guess);
      }
      if (first || v < best) {
        best = std::move(v);
        first = false;  // value ties keep the first label, deterministically
      }
    }
    total += best;
  }
  return total;
}

}  // namespace privpipe
