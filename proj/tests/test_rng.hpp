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

// Seeded generators for the randomized property tests.

#ifndef PRIVPIPE_TESTS_TEST_RNG_HPP_
#define PRIVPIPE_TESTS_TEST_RNG_HPP_

#include <random>
#include <vector>

#include "privpipe/matrix.hpp"
#include "privpipe/utility.hpp"

namespace testrng {

using privpipe::Label;
using privpipe::Matrix;
using privpipe::Rational;

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  // Rational in [0,1] with a small denominator.
  Rational probability() {
    const int den = uniform(2, 9);
    return Rational(uniform(0, den), den);
  }

  // Strictly positive small rational.
  Rational positive() { return Rational(uniform(1, 9), uniform(1, 9)); }

  // Rows of positive integers normalised by their sum: entrywise positive and
  // exactly stochastic.
  Matrix stochastic(size_t rows, size_t cols) {
    Matrix m(privpipe::int_range(static_cast<std::int64_t>(rows)),
             privpipe::int_range(static_cast<std::int64_t>(cols)));
    for (size_t i = 0; i < rows; ++i) {
      long sum = 0;
      std::vector<long> raw(cols);
      for (size_t j = 0; j < cols; ++j) {
        raw[j] = uniform(1, 9);
        sum += raw[j];
      }
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(raw[j], sum);
    }
    return m;
  }

  privpipe::Channel channel(size_t rows, size_t cols) {
    return privpipe::Channel(stochastic(rows, cols));
  }

  // Random onto map rows -> cols as a deterministic matrix.
  Matrix deterministic(size_t rows, size_t cols) {
    if (cols > rows) throw privpipe::DomainError("onto map needs rows >= cols");
    std::vector<size_t> image(rows);
    for (size_t j = 0; j < cols; ++j) image[j] = j;  // guarantee every column is hit
    for (size_t i = cols; i < rows; ++i) image[i] = static_cast<size_t>(uniform(0, static_cast<int>(cols) - 1));
    std::shuffle(image.begin(), image.end(), rng);
    Matrix m(privpipe::int_range(static_cast<std::int64_t>(rows)),
             privpipe::int_range(static_cast<std::int64_t>(cols)));
    for (size_t i = 0; i < rows; ++i) m.at(i, image[i]) = 1;
    return m;
  }

  privpipe::LossFunction loss(const std::vector<Label>& secrets, size_t actions) {
    std::vector<Rational> grid;
    grid.reserve(secrets.size() * actions);
    for (size_t i = 0; i < secrets.size() * actions; ++i) grid.push_back(Rational(uniform(0, 9)));
    return privpipe::LossFunction(secrets, privpipe::int_range(static_cast<std::int64_t>(actions)),
                                  std::move(grid));
  }

  privpipe::Prior prior(const std::vector<Label>& over) {
    std::vector<long> raw(over.size());
    long sum = 0;
    for (auto& v : raw) {
      v = uniform(1, 9);
      sum += v;
    }
    std::vector<Rational> probs;
    probs.reserve(raw.size());
    for (long v : raw) probs.emplace_back(v, sum);
    return privpipe::Prior(over, std::move(probs));
  }
};

}  // namespace testrng

#endif  // PRIVPIPE_TESTS_TEST_RNG_HPP_
