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
#include "privpipe/mechanisms.hpp"
#include "privpipe/refinement.hpp"
#include "test_rng.hpp"

using namespace privpipe;

TEST_CASE("random response fixtures") {
  const Channel half = random_response({2, Rational(1, 2)});
  CHECK(half.at(0, 0) == Rational(3, 4));
  CHECK(half.at(0, 1) == Rational(1, 4));
  CHECK(half.at(1, 0) == Rational(1, 4));
  CHECK(half.at(1, 1) == Rational(3, 4));

  CHECK(random_response({3, Rational(1, 4)}).matrix().same_entries(fixtures::r2()));
  CHECK(random_response({3, Rational(2, 5)}).matrix().same_entries(fixtures::r3()));
  CHECK(random_response({3, Rational(1)}).matrix().same_entries(Matrix::identity(int_range(3))));

  CHECK_THROWS_AS(random_response({1, Rational(1, 2)}), DomainError);
  CHECK_THROWS_AS(random_response({3, Rational(3, 2)}), DomainError);
}

TEST_CASE("truncated geometric fixtures") {
  CHECK(truncated_geometric({3, Rational(1, 2)}).matrix().same_entries(fixtures::g2()));
  CHECK(truncated_geometric({3, Rational(1, 3)}).matrix().same_entries(fixtures::g3()));
  CHECK(truncated_geometric({7, Rational(2, 7)}).matrix().same_entries(fixtures::perturber_ln35()));
  CHECK(truncated_geometric({7, Rational(100, 351)})
            .matrix()
            .same_entries(fixtures::perturber_ln351()));
}

TEST_CASE("geometric degenerate parameters") {
  // near-identity for tiny alpha
  const Channel sharp = truncated_geometric({3, Rational(1, 1000)});
  for (size_t i = 0; i < 3; ++i) CHECK(sharp.at(i, i) > Rational(99, 100));

  // alpha = 1: all rows equal, mass on the boundary columns
  const Channel flat = truncated_geometric({3, Rational(1)});
  for (size_t i = 0; i < 3; ++i) {
    CHECK(flat.at(i, 0) == Rational(1, 2));
    CHECK(flat.at(i, 1) == Rational(0));
    CHECK(flat.at(i, 2) == Rational(1, 2));
  }
  CHECK_THROWS_AS(truncated_geometric({3, Rational(0)}), DomainError);
}

TEST_CASE("realized epsilon, all-pairs") {
  const MaxRatio rr = realized_epsilon(random_response({2, Rational(1, 2)}), Adjacency::all_pairs());
  CHECK(!rr.unbounded);
  CHECK(rr.ratio() == Rational(3));

  const MaxRatio id =
      realized_epsilon(Channel(Matrix::identity(int_range(3))), Adjacency::all_pairs());
  CHECK(id.unbounded);
  CHECK(std::isinf(id.epsilon()));

  // alpha = 1 geometric: all rows equal with interior zeros; the 0/0 column
  // carries no constraint and the realized ratio is 1
  const MaxRatio flat =
      realized_epsilon(truncated_geometric({3, Rational(1)}), Adjacency::all_pairs());
  CHECK(!flat.unbounded);
  CHECK(flat.ratio() == Rational(1));
  CHECK(flat.epsilon() == doctest::Approx(0.0));
}

TEST_CASE("realized epsilon, Euclidean metric on the geometric mechanism") {
  const MaxRatio g2 =
      realized_epsilon(truncated_geometric({3, Rational(1, 2)}), Adjacency::euclidean());
  CHECK(!g2.unbounded);
  REQUIRE(g2.per_distance.size() == 2);
  CHECK(g2.per_distance[0].distance == Rational(1));
  CHECK(g2.per_distance[0].ratio == Rational(2));
  CHECK(g2.per_distance[1].distance == Rational(2));
  CHECK(g2.per_distance[1].ratio == Rational(4));
  CHECK(g2.epsilon() == doctest::Approx(std::log(2.0)));
}

TEST_CASE("rr epsilon identity e^eps = 1 + Kp/(1-p)") {
  testrng::Gen gen(906);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = gen.uniform(2, 5);
    Rational p = gen.probability();
    if (p == Rational(1)) p = Rational(1, 2);
    const MaxRatio r = realized_epsilon(random_response({k, p}), Adjacency::all_pairs());
    if (p.is_zero()) {
      CHECK(r.ratio() == Rational(1));
    } else {
      CHECK(r.ratio() == Rational(1) + Rational(k) * p / (Rational(1) - p));
    }
  }
}

TEST_CASE("rr witness solves the family equation") {
  const Channel w = rr_witness({3, Rational(2, 5)}, {3, Rational(1, 4)});
  CHECK(w.at(0, 0) == Rational(3, 4));
  CHECK(w.at(0, 1) == Rational(1, 8));
  CHECK(matmul(fixtures::r3(), w.matrix()).same_entries(fixtures::r2()));

  const Channel self = rr_witness({3, Rational(2, 5)}, {3, Rational(2, 5)});
  CHECK(self.matrix().same_entries(Matrix::identity(int_range(3))));

  CHECK_THROWS_AS(rr_witness({3, Rational(1, 4)}, {3, Rational(2, 5)}), DomainError);
  CHECK_THROWS_AS(rr_witness({2, Rational(1, 2)}, {3, Rational(1, 4)}), DimensionError);
}

TEST_CASE("geometric witness") {
  const Matrix w = geometric_witness({3, Rational(1, 3)}, {3, Rational(1, 2)});
  CHECK(w.same_entries(fixtures::geometric_witness_exact()));
  CHECK(is_stochastic(w));
  CHECK(matmul(fixtures::g3(), w).same_entries(fixtures::g2()));

  CHECK(geometric_witness({3, Rational(1, 2)}, {3, Rational(1, 2)})
            .same_entries(Matrix::identity(int_range(3))));

  // anti-refinement direction: not a witness
  const Matrix back = geometric_witness({3, Rational(1, 2)}, {3, Rational(1, 3)});
  CHECK(!is_stochastic(back));
  bool has_negative = false;
  for (size_t i = 0; i < back.n_rows(); ++i) {
    for (size_t j = 0; j < back.n_cols(); ++j) has_negative = has_negative || back.at(i, j).sign() < 0;
  }
  CHECK(has_negative);

  CHECK_THROWS_AS(geometric_witness({3, Rational(1)}, {3, Rational(1, 2)}), SingularError);
}

TEST_CASE("families preserve refinement") {
  testrng::Gen gen(907);
  // random response: witness via the family closed form and via the LP
  for (int trial = 0; trial < 10; ++trial) {
    const int k = gen.uniform(2, 3);
    Rational hi = gen.probability();
    Rational lo = gen.probability();
    if (hi < lo) std::swap(hi, lo);
    const Channel from = random_response({k, hi});
    const Channel to = random_response({k, lo});
    const Channel w = rr_witness({k, hi}, {k, lo});
    CHECK(matmul(from.matrix(), w.matrix()).same_entries(to.matrix()));
    CHECK(find_witness(from, to).has_value());
  }
  // geometric: witness via inversion, stochasticity concludes refinement
  for (int trial = 0; trial < 10; ++trial) {
    const int n = gen.uniform(2, 4);
    Rational hi(gen.uniform(1, 8), 9);
    Rational lo(gen.uniform(1, 8), 9);
    if (hi > lo) std::swap(hi, lo);  // more privacy = larger alpha
    const Matrix w = geometric_witness({n, hi}, {n, lo});
    CHECK(is_stochastic(w));
    CHECK(matmul(truncated_geometric({n, hi}).matrix(), w)
              .same_entries(truncated_geometric({n, lo}).matrix()));
  }
}

TEST_CASE("post-processing never raises the realized ratio") {
  testrng::Gen gen(908);
  for (int trial = 0; trial < 25; ++trial) {
    const size_t rows = static_cast<size_t>(gen.uniform(2, 4));
    const size_t cols = static_cast<size_t>(gen.uniform(2, 4));
    const Channel c = gen.channel(rows, cols);
    const Matrix p = gen.deterministic(cols, static_cast<size_t>(gen.uniform(1, static_cast<int>(cols))));
    const MaxRatio before = realized_epsilon(c, Adjacency::all_pairs());
    const MaxRatio after = realized_epsilon(compose(c, p), Adjacency::all_pairs());
    if (!before.unbounded) {
      CHECK(!after.unbounded ? after.ratio() <= before.ratio() : false);
    }
  }
}

TEST_CASE("Kronecker powers satisfy the Manhattan-metric privacy bound") {
  testrng::Gen gen(909);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = gen.uniform(2, 3);
    const int N = gen.uniform(2, 3);
    const Rational alpha(gen.uniform(1, 8), 9);
    const Channel base = truncated_geometric({n, alpha});
    const Rational rho = Rational(1) / alpha;  // per-unit ratio of the base mechanism
    CHECK(satisfies_ratio_bound(base.matrix(), Adjacency::euclidean(), rho));
    CHECK(satisfies_ratio_bound(kron_power(base.matrix(), N), Adjacency::manhattan(), rho));
  }
}
