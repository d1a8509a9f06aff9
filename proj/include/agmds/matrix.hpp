/**************************************************************************
 * Copyright 2026 The agmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

// Dense exact linear algebra over a Field.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "agmds/errors.hpp"
#include "agmds/field.hpp"

namespace agmds {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols) {}

  Matrix(Field field, const std::vector<Vec>& rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows.size()), cols_(cols), a_(rows.size() * cols) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (rows[r].size() != cols_) throw Error(ErrorKind::DegreeMismatch, "ragged matrix rows");
      std::copy(rows[r].begin(), rows[r].end(), a_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
    }
  }

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

  void append_row(std::span<const Elem> v) {
    if (v.size() != cols_) throw Error(ErrorKind::DegreeMismatch, "row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
    return m;
  }

  /// this * diag(d)
  Matrix scale_columns(std::span<const Elem> d) const {
    Matrix m = *this;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = field_.mul(m(r, c), d[c]);
    return m;
  }

  bool is_zero() const {
    for (auto e : a_)
      if (e.v != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw Error(ErrorKind::DegreeMismatch, "matrix product shape mismatch");
    const Field& f = x.field_;
    Matrix z(f, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Elem a = x(i, k);
        if (a.v == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) = f.add(z(i, j), f.mul(a, y(k, j)));
      }
    return z;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.field_ == y.field_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot is the first nonzero entry scanning rows in order.
inline RrefResult rref_rank(Matrix m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).v == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).v == 0) continue;
      const Elem factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref_rank(m).rank; }

/// Nonzero rows of the RREF: a canonical basis of the row space.
inline Matrix row_space_basis(const Matrix& m) {
  auto res = rref_rank(m);
  Matrix out(m.field(), 0, m.cols());
  for (std::size_t r = 0; r < res.rank; ++r) out.append_row(res.rref.row(r));
  return out;
}

/// Basis (as rows) of { v : M v^T = 0 }.
inline Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  auto res = rref_rank(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivots) is_pivot[c] = true;
  Matrix out(f, 0, m.cols());
  for (std::size_t freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    Vec v(m.cols(), f.zero());
    v[freec] = f.one();
    for (std::size_t i = 0; i < res.rank; ++i) v[res.pivots[i]] = f.neg(res.rref(i, freec));
    out.append_row(v);
  }
  return out;
}

/// Basis of { v in F^n : G diag(v) G^T = 0 }, from the k(k+1)/2 equations
/// sum_i v_i G[a][i] G[b][i] = 0 for a <= b.
inline Matrix diagonal_bilinear_solve(const Matrix& g) {
  const Field& f = g.field();
  Matrix eq(f, 0, g.cols());
  Vec row(g.cols());
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (std::size_t b = a; b < g.rows(); ++b) {
      for (std::size_t i = 0; i < g.cols(); ++i) row[i] = f.mul(g(a, i), g(b, i));
      eq.append_row(row);
    }
  return kernel_basis(eq);
}

}  // namespace agmds
