// Copyright (c) 2026 The qcy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcy/matrix.hpp"

#include "qcy/errors.hpp"

namespace qcy {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
  ScalarMatrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += at(r, k) * o.at(k, c);
    }
  return m;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix difference shape mismatch");
  ScalarMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

namespace {

// Row-reduce `w` in place; returns (rank, det) where det is meaningful
// only when the matrix is square.
std::pair<std::size_t, Scalar> eliminate(std::vector<std::vector<Scalar>>& w) {
  std::size_t rows = w.size();
  std::size_t cols = rows == 0 ? 0 : w[0].size();
  Scalar det(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && w[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) {
      det = Scalar(0);
      continue;
    }
    if (pivot != rank) {
      std::swap(w[pivot], w[rank]);
      det = -det;
    }
    det *= w[rank][col];
    Scalar inv = w[rank][col].inverse();
    for (std::size_t c = col; c < cols; ++c) w[rank][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || w[r][col].is_zero()) continue;
      Scalar f = w[r][col];
      for (std::size_t c = col; c < cols; ++c) w[r][c] -= f * w[rank][c];
    }
    ++rank;
  }
  if (rank < rows) det = Scalar(0);
  return {rank, det};
}

}  // namespace

Scalar ScalarMatrix::det() const {
  if (rows_ != cols_) throw internal_error("determinant of a non-square matrix");
  std::vector<std::vector<Scalar>> w(rows_, std::vector<Scalar>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) w[r][c] = at(r, c);
  return eliminate(w).second;
}

std::size_t ScalarMatrix::rank() const {
  std::vector<std::vector<Scalar>> w(rows_, std::vector<Scalar>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) w[r][c] = at(r, c);
  return eliminate(w).first;
}

ScalarMatrix ScalarMatrix::inverse() const {
  if (rows_ != cols_) throw internal_error("inverse of a non-square matrix");
  std::size_t n = rows_;
  std::vector<std::vector<Scalar>> w(n, std::vector<Scalar>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) w[r][c] = at(r, c);
    w[r][n + r] = Scalar(1);
  }
  auto [rank, det] = eliminate(w);
  if (rank != n) throw arithmetic_error("matrix is singular");
  ScalarMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = w[r][n + c];
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
  IntMatrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(at(r, k)) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += at(r, k) * o.at(k, c);
    }
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix sum shape mismatch");
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix difference shape mismatch");
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : a_)
    if (sgn(v) != 0) return false;
  return true;
}

}  // namespace qcy
