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

#ifndef PRIVPIPE_MATRIX_HPP_
#define PRIVPIPE_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "privpipe/label.hpp"
#include "privpipe/rational.hpp"

namespace privpipe {

// Dense exact-rational matrix with labelled row/column index sets.
// Labels within each axis are unique. All operations treat matrices as
// immutable values; mutable access exists only to fill entries right after
// construction.
class Matrix {
 public:
  Matrix(std::vector<Label> rows, std::vector<Label> cols);
  Matrix(std::vector<Label> rows, std::vector<Label> cols, std::vector<Rational> entries);

  static Matrix identity(const std::vector<Label>& labels);

  size_t n_rows() const { return rows_.size(); }
  size_t n_cols() const { return cols_.size(); }
  const std::vector<Label>& row_labels() const { return rows_; }
  const std::vector<Label>& col_labels() const { return cols_; }
  std::optional<size_t> row_index(const Label& l) const;
  std::optional<size_t> col_index(const Label& l) const;

  const Rational& at(size_t r, size_t c) const { return entries_[r * cols_.size() + c]; }
  Rational& at(size_t r, size_t c) { return entries_[r * cols_.size() + c]; }

  // Shape and entries, ignoring labels. Labels are presentation; the algebra
  // is positional.
  bool same_entries(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix with_row_labels(std::vector<Label> rows) const;
  Matrix with_col_labels(std::vector<Label> cols) const;

 private:
  std::vector<Label> rows_, cols_;
  std::vector<Rational> entries_;  // row-major
};

// Kronecker product; defined for all shapes. Rows/columns are labelled by
// pairs (label of a, label of b); shape mp x nq.
Matrix kronecker(const Matrix& a, const Matrix& b);

// N-fold Kronecker power. n = 0 gives the 1x1 identity; n = 1 gives a itself;
// n >= 2 labels rows/columns with flat n-tuples of a's labels.
Matrix kron_power(const Matrix& a, int n);

// Exact product. a's columns are re-bound to b's rows positionally; the
// result carries a's row labels and b's column labels.
Matrix matmul(const Matrix& a, const Matrix& b);

// Entries >= 0 and every row sums to exactly 1.
bool is_stochastic(const Matrix& m);

// 0/1 entries, exactly one 1 per row, and no all-zero column.
bool is_deterministic(const Matrix& m);

// Canonical left inverse of a deterministic matrix: row z of the result is
// the point distribution on the first row y (in row order) with p[y,z] = 1.
Matrix left_inverse(const Matrix& p);

// Exact inverse by Gaussian elimination; throws SingularError.
Matrix invert(const Matrix& a);

// Row-stochastic matrix: for each secret row, a distribution over columns.
class Channel {
 public:
  explicit Channel(Matrix m);
  const Matrix& matrix() const { return m_; }
  size_t n_rows() const { return m_.n_rows(); }
  size_t n_cols() const { return m_.n_cols(); }
  const std::vector<Label>& row_labels() const { return m_.row_labels(); }
  const std::vector<Label>& col_labels() const { return m_.col_labels(); }
  const Rational& at(size_t r, size_t c) const { return m_.at(r, c); }

 private:
  Matrix m_;
};

// Deterministic channel: a total map on observations with no unused output.
class PostProcessor {
 public:
  explicit PostProcessor(Matrix m);
  const Matrix& matrix() const { return m_; }
  size_t n_rows() const { return m_.n_rows(); }
  size_t n_cols() const { return m_.n_cols(); }

  // Column index each row maps to.
  size_t image_of(size_t row) const;

 private:
  Matrix m_;
};

// Channel composition (the product of two channels is a channel).
Channel compose(const Channel& c, const Matrix& post);

}  // namespace privpipe

#endif  // PRIVPIPE_MATRIX_HPP_
