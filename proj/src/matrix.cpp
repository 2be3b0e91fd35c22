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

#include "minrank/matrix.hpp"

#include <string>

#include "minrank/error.hpp"
#include "minrank/prg.hpp"

namespace minrank {
namespace {

constexpr int kInvertibleAttempts = 100;

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(op) + ": operand shapes differ");
  }
}

// 0xFFFF when x == 0, else 0, without a branch.
inline Fe zero_mask(Fe x) noexcept {
  return static_cast<Fe>(((std::uint32_t{x} - 1U) >> 16) & 0xFFFFU);
}

// Fixed-schedule Gauss-Jordan elimination on the leading `pivots` columns of
// `m`. Returns true when every pivot was nonzero. The sequence of row
// operations and memory accesses does not depend on the entries.
bool eliminate_ct(Matrix& m, std::size_t pivots) {
  const Field& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Fe all_nonzero = 0xFFFF;
  for (std::size_t c = 0; c < pivots; ++c) {
    auto prow = m.row(c);
    for (std::size_t i = c + 1; i < rows; ++i) {
      const Fe mask = zero_mask(prow[c]);
      auto src = m.row(i);
      if (f.is_binary()) {
        for (std::size_t j = 0; j < cols; ++j) prow[j] ^= static_cast<Fe>(src[j] & mask);
      } else {
        for (std::size_t j = 0; j < cols; ++j) prow[j] = f.add(prow[j], static_cast<Fe>(src[j] & mask));
      }
    }
    all_nonzero &= static_cast<Fe>(~zero_mask(prow[c]));
    f.scale(prow, f.inv_or_zero(prow[c]));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == c) continue;
      auto dst = m.row(i);
      f.axmy(dst, dst[c], prow);
    }
  }
  return all_nonzero != 0;
}

bool is_invertible_ct(const Matrix& a) {
  Matrix work = a;
  return eliminate_ct(work, a.rows());
}

}  // namespace

Matrix Matrix::identity(const Field& f, std::size_t s) {
  Matrix out(f, s, s);
  for (std::size_t i = 0; i < s; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::devectorize(const Field& f, std::span<const Fe> v, std::size_t rows,
                           std::size_t cols) {
  if (v.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "devectorize: length is not rows * cols");
  }
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) out.vec_at(i) = v[i];
  return out;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Fe>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  Matrix out(f, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

std::vector<Fe> Matrix::vectorize() const {
  std::vector<Fe> out(data_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = vec_at(i);
  return out;
}

Fe Matrix::vec_entry(std::size_t i) const {
  if (i < 1 || i > data_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vec_entry " + std::to_string(i) + " outside 1.." + std::to_string(data_.size()));
  }
  return vec_at(i - 1);
}

Matrix Matrix::columns(std::size_t c0, std::size_t count) const {
  return block(0, c0, rows_, count);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) {
    throw Error(ErrorCode::kIndexOutOfRange, "block outside matrix");
  }
  Matrix out(*field_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix out = a;
  add_scaled(out, 1, b);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sub");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) a.field().axmy(out.row(r), 1, b.row(r));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()) || a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "mul: inner dimensions differ");
  }
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t t = 0; t < a.cols(); ++t) {
      f.axpy(dst, a(i, t), b.row(t));
    }
  }
  return out;
}

Matrix operator*(Fe c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) a.field().scale(out.row(r), c);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

void add_scaled(Matrix& acc, Fe c, const Matrix& a) {
  require_same_shape(acc, a, "add_scaled");
  for (std::size_t r = 0; r < a.rows(); ++r) a.field().axpy(acc.row(r), c, a.row(r));
}

std::pair<Matrix, Matrix> split_lr(const Matrix& a, std::size_t r) {
  if (r == 0 || r >= a.cols()) {
    throw Error(ErrorCode::kInvalidSplit, "split_lr needs 0 < r < n, got r = " + std::to_string(r));
  }
  return {a.columns(0, a.cols() - r), a.columns(a.cols() - r, r)};
}

Matrix join_lr(const Matrix& left, const Matrix& right) {
  if (!(left.field() == right.field()) || left.rows() != right.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "join_lr: row counts differ");
  }
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  const Field& f = m.field();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
    std::size_t piv = rk;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rk) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rk, j));
    }
    auto prow = m.row(rk);
    f.scale(prow, f.inv(prow[c]));
    for (std::size_t i = rk + 1; i < m.rows(); ++i) {
      if (const Fe v = m(i, c); v != 0) f.axmy(m.row(i), v, prow);
    }
    ++rk;
  }
  return rk;
}

std::size_t rank_leakfree(const Matrix& a, PrgStream& prg) {
  const Matrix s = sample_invertible(prg, a.field(), a.rows());
  const Matrix t = sample_invertible(prg, a.field(), a.cols());
  return rank(s * a * t);
}

std::optional<std::vector<Fe>> solve_linear(const Matrix& a, std::span<const Fe> b) {
  const std::size_t k = a.rows();
  if (a.cols() != k || b.size() != k) {
    throw Error(ErrorCode::kDimensionMismatch, "solve_linear needs a square system");
  }
  Matrix aug(a.field(), k, k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug(r, c) = a(r, c);
    aug(r, k) = b[r];
  }
  const bool invertible = eliminate_ct(aug, k);
  if (!invertible) return std::nullopt;
  std::vector<Fe> x(k);
  for (std::size_t r = 0; r < k; ++r) x[r] = aug(r, k);
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t s = a.rows();
  if (a.cols() != s) throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  const Field& f = a.field();
  Matrix m = join_lr(a, Matrix::identity(f, s));
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t piv = c;
    while (piv < s && m(piv, c) == 0) ++piv;
    if (piv == s) return std::nullopt;
    if (piv != c) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(c, j));
    }
    auto prow = m.row(c);
    f.scale(prow, f.inv(prow[c]));
    for (std::size_t i = 0; i < s; ++i) {
      if (i == c) continue;
      if (const Fe v = m(i, c); v != 0) f.axmy(m.row(i), v, prow);
    }
  }
  return m.columns(s, s);
}

std::optional<Matrix> solve_k_matrix(const Matrix& e, std::size_t r) {
  auto [left, right] = split_lr(e, r);
  const Field& f = e.field();
  const std::size_t rows = e.rows();
  // Row-reduce (E^R | E^L) on the E^R columns.
  Matrix m = join_lr(right, left);
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) return std::nullopt;
    if (piv != c) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(c, j));
    }
    auto prow = m.row(c);
    f.scale(prow, f.inv(prow[c]));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == c) continue;
      if (const Fe v = m(i, c); v != 0) f.axmy(m.row(i), v, prow);
    }
  }
  for (std::size_t i = r; i < rows; ++i) {
    for (std::size_t j = r; j < m.cols(); ++j) {
      if (m(i, j) != 0) return std::nullopt;
    }
  }
  return m.block(0, r, r, e.cols() - r);
}

Matrix sample_uniform(PrgStream& prg, const Field& f, std::size_t rows, std::size_t cols) {
  return prg.next_matrix(f, rows, cols);
}

Matrix sample_invertible(PrgStream& prg, const Field& f, std::size_t s) {
  for (int attempt = 0; attempt < kInvertibleAttempts; ++attempt) {
    Matrix candidate = sample_uniform(prg, f, s, s);
    if (is_invertible_ct(candidate)) return candidate;
  }
  throw Error(ErrorCode::kRandomnessExhausted,
              "no invertible matrix after " + std::to_string(kInvertibleAttempts) + " draws");
}

RankRSample sample_rank_r(PrgStream& prg, const Field& f, std::size_t rows, std::size_t cols,
                          std::size_t r) {
  if (r > rows || r > cols) {
    throw Error(ErrorCode::kDimensionMismatch, "rank exceeds matrix dimensions");
  }
  Matrix s = sample_invertible(prg, f, rows);
  Matrix t = sample_invertible(prg, f, cols);
  // S L T is the product of the first r columns of S and the first r rows of T.
  Matrix e = r == 0 ? Matrix(f, rows, cols) : s.columns(0, r) * t.block(0, 0, r, cols);
  return {std::move(e), std::move(s), std::move(t)};
}

}  // namespace minrank
