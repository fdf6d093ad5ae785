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

#include "privpipe/mechanisms.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <utility>

namespace privpipe {

void RRParams::validate() const {
  if (k < 2) throw DomainError("random response needs a choice set of size >= 2");
  if (p < Rational(0) || p > Rational(1)) throw DomainError("truth probability must lie in [0,1]");
}

void GeomParams::validate() const {
  if (n < 2) throw DomainError("geometric mechanism needs a domain of size >= 2");
  if (alpha <= Rational(0) || alpha > Rational(1)) throw DomainError("alpha must lie in (0,1]");
}

Adjacency Adjacency::all_pairs() { return Adjacency{Kind::AllPairs, nullptr}; }

Adjacency Adjacency::metric(std::function<Rational(const Label&, const Label&)> d) {
  return Adjacency{Kind::Metric, std::move(d)};
}

Adjacency Adjacency::euclidean() {
  return metric([](const Label& a, const Label& b) {
    return Rational(std::llabs(a.as_int() - b.as_int()));
  });
}

Adjacency Adjacency::manhattan() {
  return metric([](const Label& a, const Label& b) {
    const Label::Tuple& ta = a.elems();
    const Label::Tuple& tb = b.elems();
    if (ta.size() != tb.size()) throw DimensionError("manhattan distance on unequal tuple lengths");
    long long d = 0;
    for (size_t i = 0; i < ta.size(); ++i) d += std::llabs(ta[i].as_int() - tb[i].as_int());
    return Rational(d);
  });
}

double MaxRatio::epsilon() const {
  if (unbounded) return std::numeric_limits<double>::infinity();
  double best = 0.0;
  for (const Bucket& b : per_distance) {
    best = std::max(best, std::log(b.ratio.to_double()) / b.distance.to_double());
  }
  return best;
}

Rational MaxRatio::ratio() const {
  if (unbounded) throw DomainError("unbounded ratio");
  if (per_distance.empty()) return Rational(1);
  if (per_distance.size() != 1) throw DomainError("ratio() is the all-pairs accessor");
  return per_distance.front().ratio;
}

Channel random_response(const RRParams& params) {
  return random_response(params, int_range(params.k));
}

Channel random_response(const RRParams& params, std::vector<Label> labels) {
  params.validate();
  if (labels.size() != static_cast<size_t>(params.k)) {
    throw DimensionError("label count does not match k");
  }
  const Rational off = (Rational(1) - params.p) / Rational(params.k);
  const Rational diag = params.p + off;
  Matrix m(labels, labels);
  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = 0; j < labels.size(); ++j) m.at(i, j) = i == j ? diag : off;
  }
  return Channel(std::move(m));
}

Channel truncated_geometric(const GeomParams& params) {
  params.validate();
  const int n = params.n;
  const Rational& a = params.alpha;
  const Rational one_plus = Rational(1) + a;
  const Rational interior_scale = (Rational(1) - a) / one_plus;
  Matrix m(int_range(n), int_range(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const long d = std::labs(static_cast<long>(r - c));
      if (c == 0 || c == n - 1) {
        // Boundary columns absorb the infinite tails.
        m.at(r, c) = a.pow(d) / one_plus;
      } else {
        m.at(r, c) = interior_scale * a.pow(d);
      }
    }
  }
  return Channel(std::move(m));
}

namespace {

// Max ratio per distance over all ordered adjacent pairs; sets unbounded on
// any p/0 with p > 0.
MaxRatio scan_ratios(const Channel& c, const Adjacency& adj) {
  MaxRatio out;
  std::map<Rational, Rational> best;  // distance -> max ratio
  const Matrix& m = c.matrix();
  for (size_t x1 = 0; x1 < m.n_rows(); ++x1) {
    for (size_t x2 = 0; x2 < m.n_rows(); ++x2) {
      if (x1 == x2) continue;
      Rational d(1);
      if (adj.kind == Adjacency::Kind::Metric) {
        d = adj.distance(m.row_labels()[x1], m.row_labels()[x2]);
        if (d.sign() <= 0) {
          throw DomainError("metric distance must be positive for distinct labels");
        }
      }
      for (size_t y = 0; y < m.n_cols(); ++y) {
        const Rational& top = m.at(x1, y);
        const Rational& bot = m.at(x2, y);
        if (bot.is_zero()) {
          if (!top.is_zero()) {
            out.unbounded = true;
            return out;
          }
          continue;  // 0/0 pairs carry no constraint
        }
        const Rational ratio = top / bot;
        auto it = best.find(d);
        if (it == best.end()) {
          best.emplace(d, ratio);
        } else if (it->second < ratio) {
          it->second = ratio;
        }
      }
    }
  }
  for (auto& [d, r] : best) out.per_distance.push_back({d, r});
  return out;
}

}  // namespace

MaxRatio realized_epsilon(const Channel& c, const Adjacency& adj) { return scan_ratios(c, adj); }

bool satisfies_ratio_bound(const Matrix& m, const Adjacency& adj, const Rational& rho) {
  for (size_t x1 = 0; x1 < m.n_rows(); ++x1) {
    for (size_t x2 = 0; x2 < m.n_rows(); ++x2) {
      if (x1 == x2) continue;
      Rational d(1);
      if (adj.kind == Adjacency::Kind::Metric) {
        d = adj.distance(m.row_labels()[x1], m.row_labels()[x2]);
      }
      const Rational bound = rho.pow(d.to_long());
      for (size_t y = 0; y < m.n_cols(); ++y) {
        if (m.at(x1, y) > bound * m.at(x2, y)) return false;
      }
    }
  }
  return true;
}

Channel rr_witness(const RRParams& from, const RRParams& to) {
  from.validate();
  to.validate();
  if (from.k != to.k) throw DimensionError("rr_witness requires equal choice-set sizes");
  Rational pw;
  if (from.p.is_zero()) {
    if (!to.p.is_zero()) throw DomainError("no random-response witness: target is strictly leakier");
    pw = Rational(1);
  } else {
    pw = to.p / from.p;
    if (pw > Rational(1)) {
      throw DomainError("no random-response witness: target is strictly leakier");
    }
  }
  return random_response(RRParams{from.k, pw});
}

Matrix geometric_witness(const GeomParams& from, const GeomParams& to) {
  from.validate();
  to.validate();
  if (from.n != to.n) throw DimensionError("geometric_witness requires equal domains");
  if (from.alpha == Rational(1)) throw SingularError("geometric mechanism at alpha = 1 is singular");
  return matmul(invert(truncated_geometric(from).matrix()), truncated_geometric(to).matrix());
}

Channel build_mechanism(const MechanismSpec& spec) {
  if (spec.family == MechanismSpec::Family::RandomResponse) {
    return random_response(RRParams{spec.size, spec.param});
  }
  return truncated_geometric(GeomParams{spec.size, spec.param});
}

double EpsKey::eps_float() const {
  if (unbounded) return std::numeric_limits<double>::infinity();
  return std::log(ratio.to_double());
}

EpsKey mechanism_eps_key(const MechanismSpec& spec) {
  if (spec.family == MechanismSpec::Family::RandomResponse) {
    RRParams p{spec.size, spec.param};
    p.validate();
    if (p.p == Rational(1)) return EpsKey{true, Rational(1)};
    return EpsKey{false, Rational(1) + Rational(spec.size) * p.p / (Rational(1) - p.p)};
  }
  GeomParams g{spec.size, spec.param};
  g.validate();
  return EpsKey{false, Rational(1) / g.alpha};
}

}  // namespace privpipe
