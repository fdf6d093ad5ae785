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

#include <doctest.h>

#include "paper_fixtures.hpp"
#include "privpipe/pipelines.hpp"
#include "privpipe/utility.hpp"
#include "test_rng.hpp"

using namespace privpipe;

namespace {

Channel single_column_channel(size_t rows) {
  Matrix m(int_range(static_cast<std::int64_t>(rows)), {Label(0)});
  for (size_t i = 0; i < rows; ++i) m.at(i, 0) = 1;
  return Channel(std::move(m));
}

// Brute force over all |X|^|Y| deterministic remappings; the independent
// oracle for ghosh_remap_utility on small instances.
Rational brute_force_remap(const LossFunction& l, const Prior& pi, const Channel& m) {
  const size_t nx = m.n_rows();
  const size_t ny = m.n_cols();
  std::vector<size_t> remap(ny, 0);
  bool first = true;
  Rational best;
  for (;;) {
    Rational total;
    for (size_t x = 0; x < nx; ++x) {
      for (size_t y = 0; y < ny; ++y) {
        total += pi.probs[x] * m.at(x, y) * l.at(x, remap[y]);
      }
    }
    if (first || total < best) {
      best = total;
      first = false;
    }
    size_t pos = 0;
    while (pos < ny && ++remap[pos] == nx) remap[pos++] = 0;
    if (pos == ny) break;
  }
  return best;
}

}  // namespace

TEST_CASE("prior validation") {
  CHECK_THROWS_AS(Prior(int_range(2), {Rational(1, 2), Rational(1, 3)}), DomainError);
  CHECK_THROWS_AS(Prior(int_range(2), {Rational(3, 2), Rational(-1, 2)}), DomainError);
  const Prior u = Prior::uniform(int_range(4));
  CHECK(u.probs[0] == Rational(1, 4));
  const Prior pt = Prior::point(int_range(3), 1);
  CHECK(pt.probs[1] == Rational(1));
}

TEST_CASE("posterior uncertainty basics") {
  const Prior u3 = Prior::uniform(int_range(3));
  const LossFunction br = builtin_loss(LossKind::BayesRisk, int_range(3));

  CHECK(posterior_uncertainty(br, u3, Channel(Matrix::identity(int_range(3)))) == Rational(0));
  CHECK(posterior_uncertainty(br, u3, single_column_channel(3)) == Rational(2, 3));

  const Prior wrong = Prior::uniform(int_range(4));
  CHECK_THROWS_AS(posterior_uncertainty(br, wrong, single_column_channel(4)), DimensionError);
}

TEST_CASE("appendix-D expected losses") {
  const std::vector<Label> domain = int_range(7);
  const LossFunction l = builtin_loss(LossKind::ScaledAbs, domain, Rational(1000));
  const Prior u = Prior::uniform(domain);
  const Channel low(fixtures::count_channel_ln35());
  const Channel high(fixtures::count_channel_ln351());
  CHECK(posterior_uncertainty(l, u, low) == Rational::parse(fixtures::appendix_d_loss_low()));
  CHECK(posterior_uncertainty(l, u, high) == Rational::parse(fixtures::appendix_d_loss_high()));
}

TEST_CASE("prior uncertainty") {
  const Prior u3 = Prior::uniform(int_range(3));
  CHECK(prior_uncertainty(builtin_loss(LossKind::BayesRisk, int_range(3)), u3) == Rational(2, 3));
  CHECK(prior_uncertainty(builtin_loss(LossKind::BayesRisk, int_range(3)),
                          Prior::point(int_range(3), 0)) == Rational(0));

  // enumerate the three actions by hand: w = 1 is the best for linear error
  const LossFunction le = builtin_loss(LossKind::LinearError, int_range(3));
  Rational best;
  bool first = true;
  for (size_t w = 0; w < 3; ++w) {
    Rational v;
    for (size_t x = 0; x < 3; ++x) v += Rational(1, 3) * le.at(x, w);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  CHECK(best == Rational(2, 3));
  CHECK(prior_uncertainty(le, u3) == best);
}

TEST_CASE("builtin losses") {
  const LossFunction br = builtin_loss(LossKind::BayesRisk, int_range(2));
  CHECK(br.at(0, 0) == Rational(0));
  CHECK(br.at(0, 1) == Rational(1));
  CHECK(br.at(1, 0) == Rational(1));

  const LossFunction sa = builtin_loss(LossKind::ScaledAbs, int_range(7), Rational(1000));
  for (int w = 0; w < 7; ++w) CHECK(sa.at(0, static_cast<size_t>(w)) == Rational(1000 * w));

  CHECK(builtin_loss(LossKind::MeanSquaredError, int_range(3)).at(0, 2) == Rational(4));

  CHECK_THROWS_AS(builtin_loss(LossKind::LinearError, {Label("a"), Label("b")}), DomainError);
  // bayes risk works on any labels
  CHECK(builtin_loss(LossKind::BayesRisk, {Label("a"), Label("b")}).at(0, 0) == Rational(0));
}

TEST_CASE("argmax accuracy loss") {
  const std::vector<Label> hists = {Label::tuple({10, 6, 4}), Label::tuple({4, 4, 2})};
  const LossFunction ama = ama_loss(hists, 3);
  CHECK(ama.at(0, 0) == Rational(0));
  CHECK(ama.at(0, 1) == Rational(1));
  CHECK(ama.at(0, 2) == Rational(1));
  CHECK(ama.at(1, 0) == Rational(0));  // tie resolved to the first maximal bar
  CHECK(ama.at(1, 1) == Rational(1));
  CHECK(argmax_index(Label::tuple({0, 0, 0})) == 0);
  CHECK(argmax_index(Label::tuple({2, 5, 1})) == 1);
}

TEST_CASE("ghosh remap utility equals posterior uncertainty") {
  const Prior u3 = Prior::uniform(int_range(3));
  const LossFunction br = builtin_loss(LossKind::BayesRisk, int_range(3));
  CHECK(ghosh_remap_utility(br, u3, Channel(Matrix::identity(int_range(3)))) == Rational(0));

  testrng::Gen gen(1001);
  for (int trial = 0; trial < 20; ++trial) {
    const Channel c = gen.channel(3, 3);
    const LossFunction l = gen.loss(c.row_labels(), 3);
    const Prior pi = gen.prior(c.row_labels());
    const Rational via_remap = ghosh_remap_utility(l, pi, c);
    CHECK(via_remap == posterior_uncertainty(l, pi, c));
    CHECK(via_remap == brute_force_remap(l, pi, c));
  }

  // appendix-D instance
  const std::vector<Label> domain = int_range(7);
  const Channel low(fixtures::count_channel_ln35());
  const LossFunction sa = builtin_loss(LossKind::ScaledAbs, domain, Rational(1000));
  // actions are the count labels for the posterior route; ghosh needs a
  // square loss, so compare through a secrets-typed loss on both sides
  CHECK_THROWS_AS(ghosh_remap_utility(builtin_loss(LossKind::BayesRisk, int_range(5)),
                                      Prior::uniform(domain), low),
                  DimensionError);
  const Prior u7 = Prior::uniform(domain);
  CHECK(ghosh_remap_utility(sa, u7, low) == posterior_uncertainty(sa, u7, low));
}

TEST_CASE("data-processing inequality for utility") {
  testrng::Gen gen(1002);
  for (int trial = 0; trial < 25; ++trial) {
    const size_t cols = static_cast<size_t>(gen.uniform(2, 4));
    const Channel c = gen.channel(3, cols);
    const Matrix p =
        gen.deterministic(cols, static_cast<size_t>(gen.uniform(1, static_cast<int>(cols))));
    const LossFunction l = gen.loss(c.row_labels(), static_cast<size_t>(gen.uniform(2, 4)));
    const Prior pi = gen.prior(c.row_labels());
    CHECK(posterior_uncertainty(l, pi, c) <= posterior_uncertainty(l, pi, compose(c, p)));
  }
}

TEST_CASE("posterior never beats the prior, and affine maps commute") {
  testrng::Gen gen(1003);
  for (int trial = 0; trial < 25; ++trial) {
    const Channel c = gen.channel(3, 3);
    const LossFunction l = gen.loss(c.row_labels(), 3);
    const Prior pi = gen.prior(c.row_labels());
    const Rational u = posterior_uncertainty(l, pi, c);
    CHECK(u <= prior_uncertainty(l, pi));

    const Rational a = gen.positive();
    const Rational b(gen.uniform(0, 5));
    std::vector<Rational> mapped;
    for (size_t x = 0; x < l.n_secrets(); ++x) {
      for (size_t w = 0; w < l.n_actions(); ++w) mapped.push_back(a * l.at(x, w) + b);
    }
    const LossFunction al(l.secrets(), l.actions(), std::move(mapped));
    CHECK(posterior_uncertainty(al, pi, c) == a * u + b);
  }
}
