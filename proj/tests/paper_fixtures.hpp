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

// Reference matrices used by both the unit tests and the acceptance suite.

#ifndef PRIVPIPE_TESTS_PAPER_FIXTURES_HPP_
#define PRIVPIPE_TESTS_PAPER_FIXTURES_HPP_

#include <sstream>
#include <string>
#include <vector>

#include "privpipe/matrix.hpp"

namespace fixtures {

// Builds a matrix from whitespace-separated exact entries (row-major).
inline privpipe::Matrix mat(const std::vector<privpipe::Label>& rows,
                            const std::vector<privpipe::Label>& cols, const std::string& body) {
  std::istringstream in(body);
  std::vector<privpipe::Rational> entries;
  std::string tok;
  while (in >> tok) entries.push_back(privpipe::Rational::parse(tok));
  return privpipe::Matrix(rows, cols, std::move(entries));
}

inline privpipe::Matrix g2() {
  return mat(privpipe::int_range(3), privpipe::int_range(3),
             "2/3 1/6 1/6 "
             "1/3 1/3 1/3 "
             "1/6 1/6 2/3");
}

inline privpipe::Matrix g3() {
  return mat(privpipe::int_range(3), privpipe::int_range(3),
             "3/4 1/6 1/12 "
             "1/4 1/2 1/4 "
             "1/12 1/6 3/4");
}

inline privpipe::Matrix r2() {
  return mat(privpipe::int_range(3), privpipe::int_range(3),
             "1/2 1/4 1/4 "
             "1/4 1/2 1/4 "
             "1/4 1/4 1/2");
}

inline privpipe::Matrix r3() {
  return mat(privpipe::int_range(3), privpipe::int_range(3),
             "3/5 1/5 1/5 "
             "1/5 3/5 1/5 "
             "1/5 1/5 3/5");
}

// invert(G3) . G2, recomputed exactly. The originally published table has a
// stale middle row (7/30 8/15 7/30) that fails G3 . W = G2.
inline privpipe::Matrix geometric_witness_exact() {
  return mat(privpipe::int_range(3), privpipe::int_range(3),
             "5/6 1/12 1/12 "
             "5/24 7/12 5/24 "
             "1/12 1/12 5/6");
}

// The published table, kept verbatim for the acceptance check against it.
inline privpipe::Matrix geometric_witness_published() {
  return mat(privpipe::int_range(3), privpipe::int_range(3),
             "5/6 1/12 1/12 "
             "7/30 8/15 7/30 "
             "1/12 1/12 5/6");
}

// Truncated geometric on {0..6} at alpha = 2/7 (eps = ln 3.5).
inline privpipe::Matrix perturber_ln35() {
  return mat(privpipe::int_range(7), privpipe::int_range(7),
             "7/9 10/63 20/441 40/3087 80/21609 160/151263 64/151263 "
             "2/9 5/9 10/63 20/441 40/3087 80/21609 32/21609 "
             "4/63 10/63 5/9 10/63 20/441 40/3087 16/3087 "
             "8/441 20/441 10/63 5/9 10/63 20/441 8/441 "
             "16/3087 40/3087 20/441 10/63 5/9 10/63 4/63 "
             "32/21609 80/21609 40/3087 20/441 10/63 5/9 2/9 "
             "64/151263 160/151263 80/21609 40/3087 20/441 10/63 7/9");
}

// Truncated geometric on {0..6} at alpha = 100/351 (eps = ln 3.51).
inline privpipe::Matrix perturber_ln351() {
  return mat(
      privpipe::int_range(7), privpipe::int_range(7),
      "351/451 25100/158301 2510000/55563651 251000000/19502841501 25100000000/6845497366851 "
      "2510000000000/2402769575764701 1000000000000/2402769575764701 "
      "100/451 251/451 25100/158301 2510000/55563651 251000000/19502841501 "
      "25100000000/6845497366851 10000000000/6845497366851 "
      "10000/158301 25100/158301 251/451 25100/158301 2510000/55563651 251000000/19502841501 "
      "100000000/19502841501 "
      "1000000/55563651 2510000/55563651 25100/158301 251/451 25100/158301 2510000/55563651 "
      "1000000/55563651 "
      "100000000/19502841501 251000000/19502841501 2510000/55563651 25100/158301 251/451 "
      "25100/158301 10000/158301 "
      "10000000000/6845497366851 25100000000/6845497366851 251000000/19502841501 "
      "2510000/55563651 25100/158301 251/451 100/451 "
      "1000000000000/2402769575764701 2510000000000/2402769575764701 "
      "25100000000/6845497366851 251000000/19502841501 2510000/55563651 25100/158301 351/451");
}

// Count-of-zeros channel for known values (0,1,1) at alpha = 2/7.
inline privpipe::Matrix count_channel_ln35() {
  return mat(privpipe::int_range(7), privpipe::int_range(5),
             "196/6561 1484/6561 1067/2187 1484/6561 196/6561 "
             "686/6561 2989/6561 742/2187 604/6561 56/6561 "
             "826/6561 3419/6561 4544/15309 2468/45927 16/6561 "
             "866/6561 24793/45927 30508/107163 13756/321489 32/45927 "
             "6142/45927 175271/321489 210956/750141 89252/2250423 64/321489 "
             "43154/321489 1230337/2250423 1471492/5250987 610684/15752961 128/2250423 "
             "302398/2250423 8619239/15752961 10290044/36756909 4246628/110270727 256/15752961");
}

// Same at alpha = 100/351.
inline privpipe::Matrix count_channel_ln351() {
  return mat(
      privpipe::int_range(7), privpipe::int_range(5),
      "1232010000/41371966801 9350710200/41371966801 20206526401/41371966801 "
      "9350710200/41371966801 1232010000/41371966801 "
      "4324355100/41371966801 18874516401/41371966801 14026065300/41371966801 "
      "3796030000/41371966801 351000000/41371966801 "
      "5205365100/41371966801 21587851501/41371966801 4305102810200/14521560347151 "
      "776938510000/14521560347151 100000000/41371966801 "
      "5456365100/41371966801 7848669386851/14521560347151 1449286475370200/5097067681850001 "
      "217158615010000/5097067681850001 10000000000/14521560347151 "
      "1940284150100/14521560347151 2782016305784701/5097067681850001 "
      "502519091753940200/1789070756329350351 70667993668510000/1789070756329350351 "
      "1000000000000/5097067681850001 "
      "683549736685100/5097067681850001 979201058430430051/1789070756329350351 "
      "175766155095533010200/627963835471601973201 24248997757647010000/627963835471601973201 "
      "100000000000000/1789070756329350351 "
      "240176957576470100/1789070756329350351 343970905019080947901/627963835471601973201 "
      "61632115827522086580200/220415306250532292593551 "
      "8455851410934100510000/220415306250532292593551 "
      "10000000000000000/627963835471601973201");
}

inline const char* appendix_d_loss_low() { return "1276949536000/771895089"; }
inline const char* appendix_d_loss_high() {
  return "2552438666271995640492212000/1542907143753726048154857";
}

// (R3 x R3) . S as published (decimals are exact hundredths). Rows are pairs
// over {0,1,2} in lexicographic order, columns are sums 0..4.
inline privpipe::Matrix sum_pipeline_r3() {
  std::vector<privpipe::Label> rows;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) rows.push_back(privpipe::Label::tuple({a, b}));
  }
  return mat(rows, privpipe::int_range(5),
             "0.36 0.24 0.28 0.08 0.04 "
             "0.12 0.40 0.28 0.16 0.04 "
             "0.12 0.16 0.44 0.16 0.12 "
             "0.12 0.40 0.28 0.16 0.04 "
             "0.04 0.24 0.44 0.24 0.04 "
             "0.04 0.16 0.28 0.40 0.12 "
             "0.12 0.16 0.44 0.16 0.12 "
             "0.04 0.16 0.28 0.40 0.12 "
             "0.04 0.08 0.28 0.24 0.36");
}

// (R2 x R2) . S as published.
inline privpipe::Matrix sum_pipeline_r2() {
  std::vector<privpipe::Label> rows;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) rows.push_back(privpipe::Label::tuple({a, b}));
  }
  return mat(rows, privpipe::int_range(5),
             "0.25 0.25 0.3125 0.125 0.0625 "
             "0.125 0.3125 0.3125 0.1875 0.0625 "
             "0.125 0.1875 0.375 0.1875 0.125 "
             "0.125 0.3125 0.3125 0.1875 0.0625 "
             "0.0625 0.25 0.375 0.25 0.0625 "
             "0.0625 0.1875 0.3125 0.3125 0.125 "
             "0.125 0.1875 0.375 0.1875 0.125 "
             "0.0625 0.1875 0.3125 0.3125 0.125 "
             "0.0625 0.125 0.3125 0.25 0.25");
}

}  // namespace fixtures

#endif  // PRIVPIPE_TESTS_PAPER_FIXTURES_HPP_
