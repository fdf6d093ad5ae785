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

#include "privpipe/pipelines.hpp"

#include <algorithm>
#include <utility>

namespace privpipe {
namespace {

const Label kTrue("true");
const Label kFalse("false");

// n-tuples over `base` in lexicographic order (first coordinate most
// significant); plain labels for n = 1, matching kron_power.
std::vector<Label> tuple_domain(const std::vector<Label>& base, int n) {
  if (n == 1) return base;
  std::vector<Label::Tuple> acc = {{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Label::Tuple> next;
    next.reserve(acc.size() * base.size());
    for (const auto& t : acc) {
      for (const Label& b : base) {
        Label::Tuple t2 = t;
        t2.push_back(b);
        next.push_back(std::move(t2));
      }
    }
    acc = std::move(next);
  }
  std::vector<Label> out;
  out.reserve(acc.size());
  for (auto& t : acc) out.push_back(Label::tuple(std::move(t)));
  return out;
}

std::vector<Label> tuple_coords(const Label& l) {
  if (l.is_tuple()) return l.elems();
  return {l};  // n = 1 rows are plain labels
}

}  // namespace

PostProcessor boolean_aggregator(const std::vector<Label>& domain,
                                 const std::vector<Label>& accepted) {
  if (domain.empty()) throw DomainError("empty aggregator domain");
  for (const Label& a : accepted) {
    if (std::find(domain.begin(), domain.end(), a) == domain.end()) {
      throw DomainError("accepted value " + a.str() + " is not in the domain");
    }
  }
  if (accepted.empty() || accepted.size() >= domain.size()) {
    throw DomainError("accepted subset must be proper and non-empty");
  }
  Matrix m(domain, {kTrue, kFalse});
  for (size_t i = 0; i < domain.size(); ++i) {
    const bool in = std::find(accepted.begin(), accepted.end(), domain[i]) != accepted.end();
    m.at(i, in ? 0 : 1) = 1;
  }
  return PostProcessor(std::move(m));
}

PostProcessor tally(int n) {
  if (n < 1) throw DomainError("tally needs n >= 1");
  const std::vector<Label> rows = tuple_domain({kTrue, kFalse}, n);
  Matrix m(rows, int_range(n + 1));
  for (size_t i = 0; i < rows.size(); ++i) {
    int count = 0;
    for (const Label& c : tuple_coords(rows[i])) {
      if (c == kTrue) ++count;
    }
    m.at(i, static_cast<size_t>(count)) = 1;
  }
  return PostProcessor(std::move(m));
}

PostProcessor counting_query(const PostProcessor& b, int n) {
  if (b.n_cols() != 2) throw DomainError("counting_query needs a Boolean aggregator");
  if (n < 1) throw DomainError("counting_query needs n >= 1");
  Matrix composed = matmul(kron_power(b.matrix(), n), tally(n).matrix());
  return PostProcessor(std::move(composed));
}

PostProcessor sum_query(const std::vector<Label>& domain, int n) {
  if (n < 1) throw DomainError("sum_query needs n >= 1");
  for (const Label& l : domain) (void)l.as_int();  // numeric domain only
  const std::vector<Label> rows = tuple_domain(domain, n);
  std::vector<long long> sums;
  sums.reserve(rows.size());
  for (const Label& r : rows) {
    long long s = 0;
    for (const Label& c : tuple_coords(r)) s += c.as_int();
    sums.push_back(s);
  }
  std::vector<long long> attainable = sums;
  std::sort(attainable.begin(), attainable.end());
  attainable.erase(std::unique(attainable.begin(), attainable.end()), attainable.end());
  std::vector<Label> cols;
  cols.reserve(attainable.size());
  for (long long s : attainable) cols.emplace_back(static_cast<std::int64_t>(s));
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    const size_t j = static_cast<size_t>(
        std::lower_bound(attainable.begin(), attainable.end(), sums[i]) - attainable.begin());
    m.at(i, j) = 1;
  }
  return PostProcessor(std::move(m));
}

PostProcessor argmax_post(int k, int n) {
  if (k < 1 || n < 0) throw DomainError("argmax_post needs k >= 1 and n >= 0");
  const std::vector<Label> rows = tuple_domain(int_range(n + 1), k);
  Matrix m(rows, int_range(k));
  for (size_t i = 0; i < rows.size(); ++i) {
    const std::vector<Label> bars = tuple_coords(rows[i]);
    size_t best = 0;
    for (size_t j = 1; j < bars.size(); ++j) {
      if (bars[j].as_int() > bars[best].as_int()) best = j;
    }
    m.at(i, best) = 1;
  }
  return PostProcessor(std::move(m));
}

namespace {

void histograms_rec(int bars_left, int remaining, Label::Tuple& prefix, std::vector<Label>& out) {
  if (bars_left == 1) {
    Label::Tuple t = prefix;
    t.emplace_back(static_cast<std::int64_t>(remaining));
    out.push_back(Label::tuple(std::move(t)));
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.emplace_back(static_cast<std::int64_t>(v));
    histograms_rec(bars_left - 1, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Label> histogram_domain(int k, int n) {
  if (k < 1 || n < 0) throw DomainError("histogram domain needs k >= 1 and n >= 0");
  std::vector<Label> out;
  Label::Tuple prefix;
  histograms_rec(k, n, prefix, out);
  return out;
}

PostProcessor histogram_preprocessor(int k, int n) {
  if (k < 1 || n < 1) throw DomainError("histogram_preprocessor needs k >= 1 and n >= 1");
  const std::vector<Label> rows = tuple_domain(int_range(k), n);
  const std::vector<Label> cols = histogram_domain(k, n);
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::int64_t> counts(static_cast<size_t>(k), 0);
    for (const Label& c : tuple_coords(rows[i])) ++counts[static_cast<size_t>(c.as_int())];
    Label::Tuple h;
    h.reserve(counts.size());
    for (std::int64_t v : counts) h.emplace_back(v);
    const auto j = m.col_index(Label::tuple(std::move(h)));
    m.at(i, *j) = 1;
  }
  return PostProcessor(std::move(m));
}

namespace {

// Depth-first walk over perturbed histograms; adds the product of per-bar
// probabilities into the argmax bucket at each leaf.
void argmax_accumulate(const Matrix& g, const std::vector<size_t>& bar_rows, size_t depth,
                       std::vector<std::int64_t>& current, const Rational& prob,
                       std::vector<Rational>& buckets) {
  if (prob.is_zero()) return;
  if (depth == bar_rows.size()) {
    size_t best = 0;
    for (size_t i = 1; i < current.size(); ++i) {
      if (current[i] > current[best]) best = i;
    }
    buckets[best] += prob;
    return;
  }
  const size_t row = bar_rows[depth];
  for (size_t y = 0; y < g.n_cols(); ++y) {
    current.push_back(static_cast<std::int64_t>(y));
    argmax_accumulate(g, bar_rows, depth + 1, current, prob * g.at(row, y), buckets);
    current.pop_back();
  }
}

}  // namespace

Channel noisy_argmax_pipeline(int k, int n, const GeomParams& g) {
  if (k < 1 || n < 0) throw DomainError("noisy_argmax_pipeline needs k >= 1 and n >= 0");
  g.validate();
  if (g.n != n + 1) {
    throw DimensionError("geometric domain must be {0..n}: expected n = " + std::to_string(n + 1));
  }
  const Channel gd = truncated_geometric(g);
  const std::vector<Label> rows = histogram_domain(k, n);
  Matrix m(rows, int_range(k));
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<size_t> bar_rows;
    for (const Label& bar : rows[i].elems()) {
      bar_rows.push_back(static_cast<size_t>(bar.as_int()));
    }
    std::vector<Rational> buckets(static_cast<size_t>(k));
    std::vector<std::int64_t> current;
    argmax_accumulate(gd.matrix(), bar_rows, 0, current, Rational(1), buckets);
    for (size_t j = 0; j < buckets.size(); ++j) m.at(i, j) = std::move(buckets[j]);
  }
  return Channel(std::move(m));
}

namespace {

// Exact distribution of the number of successes among independent Bernoullis.
std::vector<Rational> poisson_binomial(const std::vector<Rational>& ps) {
  std::vector<Rational> dist = {Rational(1)};
  for (const Rational& p : ps) {
    std::vector<Rational> next(dist.size() + 1);
    const Rational q = Rational(1) - p;
    for (size_t i = 0; i < dist.size(); ++i) {
      if (dist[i].is_zero()) continue;
      next[i] += dist[i] * q;
      next[i + 1] += dist[i] * p;
    }
    dist = std::move(next);
  }
  return dist;
}

}  // namespace

Channel known_context_count(const Channel& g, const std::vector<Label>& known_values,
                            const Label& target, const std::vector<Label>& unknown_domain) {
  const Matrix& G = g.matrix();
  const auto target_col = G.col_index(target);
  if (!target_col) throw DomainError("target value " + target.str() + " is not a channel output");
  std::vector<Rational> known_ps;
  known_ps.reserve(known_values.size());
  for (const Label& v : known_values) {
    const auto r = G.row_index(v);
    if (!r) throw DomainError("known value " + v.str() + " is not a channel input");
    known_ps.push_back(G.at(*r, *target_col));
  }
  Matrix m(unknown_domain, int_range(static_cast<std::int64_t>(known_values.size()) + 2));
  for (size_t i = 0; i < unknown_domain.size(); ++i) {
    const auto r = G.row_index(unknown_domain[i]);
    if (!r) throw DomainError("unknown value " + unknown_domain[i].str() + " is not a channel input");
    std::vector<Rational> ps = known_ps;
    ps.push_back(G.at(*r, *target_col));
    std::vector<Rational> dist = poisson_binomial(ps);
    for (size_t j = 0; j < dist.size(); ++j) m.at(i, j) = std::move(dist[j]);
  }
  return Channel(std::move(m));
}

Pipeline Pipeline::make(Channel perturber, PostProcessor post) {
  Channel composed = compose(perturber, post.matrix());
  return Pipeline{std::move(perturber), std::move(post), std::move(composed)};
}

StabilityReport stability_scan(const std::vector<Rational>& grid,
                               const std::function<Channel(const Rational&)>& pipeline,
                               const std::function<EpsKey(const Rational&)>& eps_of,
                               const LossFunction& l, const Prior& pi) {
  StabilityReport report;
  std::vector<EpsKey> keys;
  keys.reserve(grid.size());
  for (const Rational& param : grid) {
    keys.push_back(eps_of(param));
    if (keys.size() >= 2 && keys.back() < keys[keys.size() - 2]) {
      throw DomainError("grid must be sorted by non-decreasing epsilon");
    }
    const Channel ch = pipeline(param);
    report.grid.push_back({param, keys.back().eps_float(), posterior_uncertainty(l, pi, ch)});
  }
  for (size_t i = 0; i + 1 < report.grid.size(); ++i) {
    const bool eps_grew = keys[i] < keys[i + 1];
    const bool loss_grew = report.grid[i + 1].utility > report.grid[i].utility;
    if (eps_grew && loss_grew) report.violations.push_back({i, i + 1});
  }
  report.verdict = report.violations.empty() ? StabilityReport::Verdict::LStableOnGrid
                                             : StabilityReport::Verdict::Unstable;
  return report;
}

StabilityReport stability_scan(MechanismSpec::Family family, int size,
                               const std::vector<Rational>& grid, const PostProcessor& post,
                               const LossFunction& l, const Prior& pi) {
  auto pipeline = [&](const Rational& param) {
    return compose(build_mechanism({family, size, param}), post.matrix());
  };
  auto eps_of = [&](const Rational& param) { return mechanism_eps_key({family, size, param}); };
  return stability_scan(grid, pipeline, eps_of, l, pi);
}

}  // namespace privpipe
