// Copyright 2026 The minrank-keygen Authors
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
//
///////////////////////////////////////////////////////////////////////////////

#ifndef MINRANK_MATRIX_HPP_
#define MINRANK_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "minrank/gf.hpp"

namespace minrank {

class PrgStream;

// Dense m x n matrix over GF(q), stored row-major. The math-facing view is
// the column-major vectorization <A>, exposed through vectorize() and the
// 1-based vec_entry().
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(const Field& f, std::size_t s);
  // Inverse of vectorize(): `v` lists entries column by column.
  static Matrix devectorize(const Field& f, std::span<const Fe> v, std::size_t rows,
                            std::size_t cols);
  // Rows given top to bottom; handy for literals in tests.
  static Matrix from_rows(const Field& f, const std::vector<std::vector<Fe>>& rows);

  const Field& field() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  Fe& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Fe operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Fe> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fe> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  std::vector<Fe> vectorize() const;
  // <A>_i with 1 <= i <= m*n. Throws Error(kIndexOutOfRange).
  Fe vec_entry(std::size_t i) const;
  Fe& vec_at(std::size_t zero_based) noexcept {
    return (*this)(zero_based % rows_, zero_based / rows_);
  }
  Fe vec_at(std::size_t zero_based) const noexcept {
    return (*this)(zero_based % rows_, zero_based / rows_);
  }

  // Columns [c0, c0 + count).
  Matrix columns(std::size_t c0, std::size_t count) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

  bool is_zero() const noexcept;

  bool operator==(const Matrix& o) const noexcept {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  const Field* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fe> data_;
};

// Throw Error(kDimensionMismatch) on incompatible shapes or fields.
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Fe c, const Matrix& a);
Matrix transpose(const Matrix& a);
// acc += c * a
void add_scaled(Matrix& acc, Fe c, const Matrix& a);

// (A^L | A^R) with A^R the last r columns. Throws Error(kInvalidSplit) unless
// 0 < r < n.
std::pair<Matrix, Matrix> split_lr(const Matrix& a, std::size_t r);
Matrix join_lr(const Matrix& left, const Matrix& right);

// Gaussian elimination with first-nonzero pivoting. Running time depends on
// the entries: use only on public data.
std::size_t rank(const Matrix& a);

// rank(S A T) for fresh invertible S, T drawn from `prg`. The elimination
// then runs on a masked matrix, so its timing carries no information about A
// beyond its rank.
std::size_t rank_leakfree(const Matrix& a, PrgStream& prg);

// Unique x with A x = b, or nullopt when A is singular. Every column is
// processed with the same sequence of row operations whatever the values:
// pivot search is a masked accumulation of all lower rows, so secret
// systems can be solved without secret-dependent branches or memory access
// patterns (field table lookups aside).
std::optional<std::vector<Fe>> solve_linear(const Matrix& a, std::span<const Fe> b);

// Inverse of a square matrix (public data), or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

// The unique K (r x (n - r)) with E^L = E^R K, or nullopt when E^R does not
// have full column rank or no such K exists.
std::optional<Matrix> solve_k_matrix(const Matrix& e, std::size_t r);

struct RankRSample {
  Matrix e;
  Matrix s;
  Matrix t;
};

// i.i.d. uniform entries in column-major draw order.
Matrix sample_uniform(PrgStream& prg, const Field& f, std::size_t rows, std::size_t cols);
// Rejection sampling; throws Error(kRandomnessExhausted) after 100 attempts.
Matrix sample_invertible(PrgStream& prg, const Field& f, std::size_t s);
// E = S L T with L = (I_r 0; 0 0). Draws S before T.
RankRSample sample_rank_r(PrgStream& prg, const Field& f, std::size_t rows, std::size_t cols,
                          std::size_t r);

}  // namespace minrank

#endif  // MINRANK_MATRIX_HPP_
