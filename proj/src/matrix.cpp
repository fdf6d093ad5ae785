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

#include "privpipe/matrix.hpp"

#include <algorithm>
#include <utility>

namespace privpipe {
namespace {

void check_unique(const std::vector<Label>& labels, const char* axis) {
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw DomainError(std::string("duplicate ") + axis + " label: " + sorted[i].str());
    }
  }
}

}  // namespace

Matrix::Matrix(std::vector<Label> rows, std::vector<Label> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(rows_.size() * cols_.size()) {
  check_unique(rows_, "row");
  check_unique(cols_, "column");
}

Matrix::Matrix(std::vector<Label> rows, std::vector<Label> cols, std::vector<Rational> entries)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)) {
  check_unique(rows_, "row");
  check_unique(cols_, "column");
  if (entries_.size() != rows_.size() * cols_.size()) {
    throw DimensionError("entry count does not match matrix shape");
  }
}

Matrix Matrix::identity(const std::vector<Label>& labels) {
  Matrix m(labels, labels);
  for (size_t i = 0; i < labels.size(); ++i) m.at(i, i) = 1;
  return m;
}

std::optional<size_t> Matrix::row_index(const Label& l) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == l) return i;
  }
  return std::nullopt;
}

std::optional<size_t> Matrix::col_index(const Label& l) const {
  for (size_t i = 0; i < cols_.size(); ++i) {
    if (cols_[i] == l) return i;
  }
  return std::nullopt;
}

bool Matrix::same_entries(const Matrix& o) const {
  return rows_.size() == o.rows_.size() && cols_.size() == o.cols_.size() && entries_ == o.entries_;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix Matrix::with_row_labels(std::vector<Label> rows) const {
  if (rows.size() != rows_.size()) throw DimensionError("row label count mismatch");
  return Matrix(std::move(rows), cols_, entries_);
}

Matrix Matrix::with_col_labels(std::vector<Label> cols) const {
  if (cols.size() != cols_.size()) throw DimensionError("column label count mismatch");
  return Matrix(rows_, std::move(cols), entries_);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  std::vector<Label> rows, cols;
  rows.reserve(a.n_rows() * b.n_rows());
  cols.reserve(a.n_cols() * b.n_cols());
  for (const Label& x : a.row_labels()) {
    for (const Label& x2 : b.row_labels()) rows.push_back(Label::tuple({x, x2}));
  }
  for (const Label& y : a.col_labels()) {
    for (const Label& y2 : b.col_labels()) cols.push_back(Label::tuple({y, y2}));
  }
  Matrix out(std::move(rows), std::move(cols));
  for (size_t i = 0; i < a.n_rows(); ++i) {
    for (size_t j = 0; j < a.n_cols(); ++j) {
      const Rational& aij = a.at(i, j);
      for (size_t i2 = 0; i2 < b.n_rows(); ++i2) {
        for (size_t j2 = 0; j2 < b.n_cols(); ++j2) {
          out.at(i * b.n_rows() + i2, j * b.n_cols() + j2) = aij * b.at(i2, j2);
        }
      }
    }
  }
  return out;
}

namespace {

// All n-tuples over `base` in lexicographic order, first coordinate most
// significant (the order kronecker enumerates).
std::vector<Label> flat_tuples(const std::vector<Label>& base, int n) {
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

}  // namespace

Matrix kron_power(const Matrix& a, int n) {
  if (n < 0) throw DomainError("negative Kronecker power");
  if (n == 0) {
    return Matrix({Label::tuple({})}, {Label::tuple({})}, {Rational(1)});
  }
  if (n == 1) return a;
  Matrix acc = a;
  for (int i = 1; i < n; ++i) acc = kronecker(acc, a);
  // Nested pair labels flattened to n-tuples; entries are unchanged.
  return acc.with_row_labels(flat_tuples(a.row_labels(), n))
      .with_col_labels(flat_tuples(a.col_labels(), n));
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.n_cols() != b.n_rows()) {
    throw DimensionError("matmul shape mismatch: " + std::to_string(a.n_cols()) + " columns vs " +
                         std::to_string(b.n_rows()) + " rows");
  }
  Matrix out(a.row_labels(), b.col_labels());
  for (size_t i = 0; i < a.n_rows(); ++i) {
    for (size_t k = 0; k < a.n_cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.n_cols(); ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

bool is_stochastic(const Matrix& m) {
  for (size_t i = 0; i < m.n_rows(); ++i) {
    Rational sum;
    for (size_t j = 0; j < m.n_cols(); ++j) {
      if (m.at(i, j).sign() < 0) return false;
      sum += m.at(i, j);
    }
    if (sum != Rational(1)) return false;
  }
  return true;
}

bool is_deterministic(const Matrix& m) {
  std::vector<bool> col_hit(m.n_cols(), false);
  for (size_t i = 0; i < m.n_rows(); ++i) {
    size_t ones = 0;
    for (size_t j = 0; j < m.n_cols(); ++j) {
      const Rational& e = m.at(i, j);
      if (e == Rational(1)) {
        ++ones;
        col_hit[j] = true;
      } else if (!e.is_zero()) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (bool hit : col_hit) {
    if (!hit) return false;
  }
  return true;
}

Matrix left_inverse(const Matrix& p) {
  if (!is_deterministic(p)) throw DomainError("left_inverse requires a deterministic matrix");
  Matrix out(p.col_labels(), p.row_labels());
  for (size_t z = 0; z < p.n_cols(); ++z) {
    for (size_t y = 0; y < p.n_rows(); ++y) {
      if (p.at(y, z) == Rational(1)) {
        out.at(z, y) = 1;
        break;
      }
    }
  }
  return out;
}

Matrix invert(const Matrix& a) {
  if (a.n_rows() != a.n_cols()) throw DimensionError("invert requires a square matrix");
  const size_t n = a.n_rows();
  // Gauss-Jordan on [a | I].
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = a.at(i, j);
    t[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && t[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularError("singular matrix");
    std::swap(t[col], t[piv]);
    const Rational p = t[col][col];
    for (size_t j = 0; j < 2 * n; ++j) t[col][j] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || t[i][col].is_zero()) continue;
      const Rational f = t[i][col];
      for (size_t j = 0; j < 2 * n; ++j) t[i][j] -= f * t[col][j];
    }
  }
  Matrix out(a.col_labels(), a.row_labels());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out.at(i, j) = t[i][n + j];
  }
  return out;
}

Channel::Channel(Matrix m) : m_(std::move(m)) {
  if (!is_stochastic(m_)) throw DomainError("channel rows must be nonnegative and sum to 1");
}

PostProcessor::PostProcessor(Matrix m) : m_(std::move(m)) {
  if (!is_deterministic(m_)) {
    throw DomainError("post-processor must be deterministic with no unused column");
  }
}

size_t PostProcessor::image_of(size_t row) const {
  for (size_t j = 0; j < m_.n_cols(); ++j) {
    if (m_.at(row, j) == Rational(1)) return j;
  }
  throw Error("deterministic matrix without a 1 in a row");  // unreachable
}

Channel compose(const Channel& c, const Matrix& post) {
  return Channel(matmul(c.matrix(), post));
}

}  // namespace privpipe
