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

#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <map>

#include "minrank/error.hpp"
#include "minrank/matrix.hpp"
#include "minrank/prg.hpp"
#include "minrank/stats.hpp"
#include "oracles.hpp"

namespace minrank {
namespace {

const Field& gf2() { return Field::get(2); }
const Field& gf3() { return Field::get(3); }
const Field& gf16() { return Field::get(2, 4); }

PrgStream stream(std::string_view tag) { return PrgStream(Seed::zero(128), tag); }

std::vector<std::vector<int>> to_ints(const Matrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

TEST(Matrix, ProductExamples) {
  PrgStream prg = stream("mul");
  const Matrix a = sample_uniform(prg, gf16(), 3, 3);
  EXPECT_EQ(Matrix::identity(gf16(), 3) * a, a);
  EXPECT_TRUE((a + a).is_zero());
  const Matrix x = Matrix::from_rows(gf2(), {{1, 1}, {0, 1}});
  const Matrix y = Matrix::from_rows(gf2(), {{1, 0}, {1, 1}});
  EXPECT_EQ(x * y, Matrix::from_rows(gf2(), {{0, 1}, {1, 1}}));
}

TEST(Matrix, ProductMatchesEntrywiseSum) {
  PrgStream prg = stream("mul2");
  const Matrix a = sample_uniform(prg, gf3(), 3, 4);
  const Matrix b = sample_uniform(prg, gf3(), 4, 2);
  const Matrix c = a * b;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      int s = 0;
      for (std::size_t t = 0; t < 4; ++t) s += a(i, t) * b(t, j);
      EXPECT_EQ(c(i, j), s % 3);
    }
  }
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_EQ(transpose(a * b), transpose(b) * transpose(a));
}

TEST(Matrix, ShapeErrors) {
  const Matrix a(gf2(), 2, 3);
  const Matrix b(gf2(), 2, 2);
  const Matrix c(gf3(), 2, 3);
  EXPECT_THROW(a * a, Error);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a + c, Error);
}

TEST(Matrix, Vectorization) {
  const Field& f = Field::get(5);
  const Matrix a = Matrix::from_rows(f, {{1, 2}, {3, 4}});
  EXPECT_EQ(a.vectorize(), (std::vector<Fe>{1, 3, 2, 4}));
  EXPECT_EQ(a.vec_entry(2), 3);
  EXPECT_EQ(Matrix::identity(gf2(), 4).vec_entry(1), 1);
  const std::vector<Fe> v{0, 1, 1, 0};
  EXPECT_EQ(Matrix::devectorize(gf2(), v, 2, 2), Matrix::from_rows(gf2(), {{0, 1}, {1, 0}}));
  try {
    a.vec_entry(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
  EXPECT_THROW(a.vec_entry(0), Error);
}

TEST(Matrix, SplitJoin) {
  const Matrix i3 = Matrix::identity(gf2(), 3);
  const auto [l, r] = split_lr(i3, 1);
  EXPECT_EQ(l, i3.columns(0, 2));
  EXPECT_EQ(r, i3.columns(2, 1));
  PrgStream prg = stream("split");
  const Matrix a = sample_uniform(prg, gf16(), 4, 5);
  for (std::size_t rr = 1; rr < 5; ++rr) {
    const auto [al, ar] = split_lr(a, rr);
    EXPECT_EQ(join_lr(al, ar), a);
  }
  for (std::size_t bad : {0U, 5U, 6U}) {
    try {
      split_lr(a, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidSplit);
    }
  }
  const Matrix er = sample_uniform(prg, gf16(), 5, 2);
  const Matrix k = sample_uniform(prg, gf16(), 2, 3);
  const auto [el, er2] = split_lr(join_lr(er * k, er), 2);
  EXPECT_EQ(er2 * k, el);
}

TEST(Rank, Examples) {
  for (std::size_t s = 1; s <= 6; ++s) EXPECT_EQ(rank(Matrix::identity(gf16(), s)), s);
  EXPECT_EQ(rank(Matrix(gf3(), 3, 4)), 0U);
  EXPECT_EQ(rank(Matrix::from_rows(gf2(), {{1, 1}, {1, 1}})), 1U);
}

TEST(Rank, MatchesOracleOverPrimeFields) {
  PrgStream prg = stream("rank");
  for (int i = 0; i < 2000; ++i) {
    const Field& f = i % 2 ? gf2() : gf3();
    const std::size_t rows = 1 + i % 5;
    const std::size_t cols = 1 + (i / 5) % 5;
    const Matrix a = sample_uniform(prg, f, rows, cols);
    ASSERT_EQ(rank(a), oracle::rank_mod_p(to_ints(a), static_cast<int>(f.order())));
  }
}

TEST(Rank, LeakfreeAgreesWithRank) {
  PrgStream prg = stream("leak");
  PrgStream mask = stream("mask");
  for (int i = 0; i < 10000; ++i) {
    const std::size_t rows = 1 + i % 8;
    const std::size_t cols = 1 + (i / 8) % 8;
    Matrix a = sample_uniform(prg, gf16(), rows, cols);
    if (i % 3 == 0 && rows > 1) {
      // Force a dependency so low ranks are exercised too.
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = a(0, c);
    }
    ASSERT_EQ(rank_leakfree(a, mask), rank(a));
  }
  EXPECT_EQ(rank_leakfree(Matrix::identity(gf16(), 4), mask), 4U);
  EXPECT_EQ(rank_leakfree(Matrix(gf16(), 4, 4), mask), 0U);
}

TEST(Solve, Examples) {
  PrgStream prg = stream("solve");
  const auto b = sample_uniform(prg, gf16(), 4, 1).vectorize();
  EXPECT_EQ(solve_linear(Matrix::identity(gf16(), 4), b), b);
  const std::vector<Fe> nonzero{1, 0};
  EXPECT_FALSE(solve_linear(Matrix(gf3(), 2, 2), nonzero).has_value());

  const Matrix a = Matrix::from_rows(gf3(), {{2, 1}, {1, 1}});
  const std::vector<Fe> rhs{1, 2};
  const auto x = solve_linear(a, rhs);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (std::vector<Fe>{2, 0}));
  // Substitution check.
  EXPECT_EQ((2 * (*x)[0] + (*x)[1]) % 3, 1);
  EXPECT_EQ(((*x)[0] + (*x)[1]) % 3, 2);
}

TEST(Solve, RandomSystemsAgreeWithInverse) {
  PrgStream prg = stream("solve2");
  int singular = 0;
  for (int i = 0; i < 3000; ++i) {
    const Field& f = i % 3 == 0 ? gf2() : (i % 3 == 1 ? gf3() : gf16());
    const std::size_t s = 1 + i % 6;
    const Matrix a = sample_uniform(prg, f, s, s);
    const Matrix b = sample_uniform(prg, f, s, 1);
    const auto x = solve_linear(a, b.vectorize());
    const auto inv = inverse(a);
    ASSERT_EQ(x.has_value(), inv.has_value());
    ASSERT_EQ(x.has_value(), rank(a) == s);
    if (!x) {
      ++singular;
      continue;
    }
    EXPECT_EQ(*x, ((*inv) * b).vectorize());
    EXPECT_EQ(a * Matrix::devectorize(f, *x, s, 1), b);
    EXPECT_EQ(a * (*inv), Matrix::identity(f, s));
  }
  EXPECT_GT(singular, 0);
}

TEST(SolveK, Examples) {
  const Matrix e = Matrix::from_rows(gf2(), {{1, 1}, {0, 0}});
  const auto k = solve_k_matrix(e, 1);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(*k, Matrix::from_rows(gf2(), {{1}}));

  PrgStream prg = stream("solvek");
  const Matrix er = sample_invertible(prg, gf16(), 3);
  const auto k0 = solve_k_matrix(join_lr(Matrix(gf16(), 3, 2), er), 3);
  ASSERT_TRUE(k0.has_value());
  EXPECT_TRUE(k0->is_zero());

  for (int i = 0; i < 200; ++i) {
    Matrix right = sample_uniform(prg, gf16(), 6, 2);
    if (rank(right) < 2) continue;
    const Matrix kk = sample_uniform(prg, gf16(), 2, 4);
    const auto got = solve_k_matrix(join_lr(right * kk, right), 2);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, kk);
  }
}

// solve_k_matrix succeeds on a rank-r matrix exactly when E^R has rank r.
TEST(SolveK, ExhaustiveCharacterizationGf2) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 2; n <= 3; ++n) {
      for (std::size_t r = 1; r < n && r <= m; ++r) {
        for (unsigned code = 0; code < (1U << (m * n)); ++code) {
          Matrix e(gf2(), m, n);
          for (std::size_t i = 0; i < m * n; ++i) e.vec_at(i) = (code >> i) & 1U;
          if (rank(e) != r) continue;
          const auto [el, er] = split_lr(e, r);
          const auto k = solve_k_matrix(e, r);
          ASSERT_EQ(k.has_value(), rank(er) == r) << m << "x" << n << " r=" << r << " " << code;
          if (k) {
            EXPECT_EQ(er * *k, el);
          }
        }
      }
    }
  }
}

TEST(Sampling, RankR) {
  PrgStream prg = stream("rankr");
  EXPECT_TRUE(sample_rank_r(prg, gf16(), 4, 5, 0).e.is_zero());
  for (int i = 0; i < 500; ++i) {
    const std::size_t r = i % 5;
    const auto s = sample_rank_r(prg, i % 2 ? gf2() : gf16(), 5, 6, r);
    ASSERT_EQ(rank(s.e), r);
    EXPECT_EQ(rank(s.s), 5U);
    EXPECT_EQ(rank(s.t), 6U);
  }
}

TEST(Sampling, Invertible) {
  PrgStream prg = stream("inv");
  for (int i = 0; i < 200; ++i) {
    EXPECT_EQ(rank(sample_invertible(prg, gf2(), 5)), 5U);
  }
}

TEST(Sampling, InvertibilityRateGf2) {
  PrgStream prg = stream("invrate");
  const int trials = 100000;
  int hits = 0;
  for (int i = 0; i < trials; ++i) hits += rank(sample_uniform(prg, gf2(), 8, 8)) == 8;
  // prod_{j=1..30} (1 - 2^-j)
  double expected = 1;
  for (int j = 1; j <= 30; ++j) expected *= 1 - std::ldexp(1.0, -j);
  EXPECT_NEAR(expected, 0.288788, 1e-6);
  const double sigma = std::sqrt(expected * (1 - expected) / trials);
  EXPECT_NEAR(static_cast<double>(hits) / trials, expected, 3 * sigma);
}

// Both rank samplers target the uniform law on rank-r matrices; compare
// their histograms at 2 x 2 over GF(2), rank 1 (9 matrices).
TEST(Sampling, SltMatchesRejection) {
  PrgStream a = stream("slt");
  PrgStream b = stream("rej");
  std::map<unsigned, double> ca;
  std::map<unsigned, double> cb;
  auto code = [](const Matrix& m) {
    unsigned c = 0;
    for (std::size_t i = 0; i < 4; ++i) c |= unsigned{m.vec_at(i)} << i;
    return c;
  };
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    ca[code(sample_uniform_rank(a, gf2(), 2, 2, 1, RankSampler::kSLT))] += 1;
    cb[code(sample_uniform_rank(b, gf2(), 2, 2, 1, RankSampler::kRejection))] += 1;
  }
  EXPECT_EQ(ca.size(), 9U);
  EXPECT_EQ(cb.size(), 9U);
  double stat = 0;
  for (const auto& [k, va] : ca) {
    const double vb = cb[k];
    const double e = (va + vb) / 2;
    stat += (va - e) * (va - e) / e + (vb - e) * (vb - e) / e;
  }
  const boost::math::chi_squared dist(8);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, stat)), 1e-3);
}

}  // namespace
}  // namespace minrank
