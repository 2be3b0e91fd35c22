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

#include <algorithm>
#include <cmath>

#include "minrank/error.hpp"
#include "minrank/stats.hpp"
#include "oracles.hpp"

namespace minrank {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalInconsistency;
}

Rational r(long num, long den) { return Rational(num, den); }

TEST(ClosedForms, Tau) {
  EXPECT_EQ(tau(r(1, 2)), r(72, 100));
  EXPECT_EQ(tau(r(1, 16)), r(13125, 100000));
  EXPECT_EQ(tau(r(1, 1000)), r(21, 10000));
  EXPECT_EQ(code_of([] { tau(0); }), ErrorCode::kNonPositiveInput);
  EXPECT_EQ(code_of([] { tau(r(-1, 3)); }), ErrorCode::kNonPositiveInput);
  const Rational inv4 = 1 / rational_pow(1 - tau(r(1, 16)), 4);
  EXPECT_LT(inv4, r(176, 100));
  EXPECT_GT(inv4, r(175, 100));
}

TEST(ClosedForms, RankCountExamples) {
  EXPECT_EQ(rank_count(2, 2, 2, 0), 1);
  EXPECT_EQ(rank_count(7, 3, 5, 0), 1);
  EXPECT_EQ(rank_count(2, 2, 2, 1), 9);
  EXPECT_EQ(rank_count(2, 2, 2, 2), 6);
  EXPECT_EQ(code_of([] { rank_count(2, 2, 3, 3); }), ErrorCode::kInvalidRank);
}

TEST(ClosedForms, RankCountMatchesEnumeration) {
  for (unsigned q : {2U, 3U}) {
    for (unsigned m = 1; m <= 4; ++m) {
      for (unsigned n = 1; n <= 4; ++n) {
        if (std::pow(q, m * n) > 70000) continue;
        const auto hist = oracle::enumerate_rank_histogram(q, m, n);
        BigInt total = 0;
        for (unsigned rk = 0; rk <= std::min(m, n); ++rk) {
          EXPECT_EQ(rank_count(q, m, n, rk), BigInt(hist[rk])) << q << " " << m << "x" << n;
          total += rank_count(q, m, n, rk);
        }
        EXPECT_EQ(total, boost::multiprecision::pow(BigInt(q), m * n));
      }
    }
  }
}

TEST(ClosedForms, TailProduct) {
  const double v = to_double(truncated_tail_product(2, 1, 30));
  EXPECT_NEAR(v, 0.288788, 1e-6);
  EXPECT_GT(truncated_tail_product(2, 1, 30), r(28, 100));
  EXPECT_GT(truncated_tail_product(16, 1, 64), 1 - tau(r(1, 16)));
  EXPECT_EQ(truncated_tail_product(3, 2, 1), r(8, 9));
  for (unsigned q : {2U, 3U, 4U, 16U}) {
    for (unsigned s = 1; s <= 8; ++s) {
      EXPECT_GT(truncated_tail_product(q, s, 64), 1 - tau(inverse_power(q, s))) << q << " " << s;
    }
  }
}

TEST(ClosedForms, FullRankBound) {
  EXPECT_EQ(full_rank_failure_bound(16, 15, 6), r(21, 10) * inverse_power(16, 10));
  EXPECT_TRUE(less_than_pow2(full_rank_failure_bound(16, 15, 6), -389, 10));
  EXPECT_EQ(full_rank_failure_bound(16, 5, 5), tau(r(1, 16)));
  EXPECT_EQ(full_rank_failure_bound(3, 2, 4), full_rank_failure_bound(3, 4, 2));
  for (const char* name : {"mirith-Ia", "mirith-Ib", "mirith-IIIa", "mirith-IIIb", "mirith-Va",
                           "mirith-Vb"}) {
    const Params& p = params_by_name(name);
    EXPECT_TRUE(less_than_pow2(full_rank_failure_bound(p.q, p.m, p.r), -389, 10)) << name;
  }
}

TEST(ClosedForms, LessThanPow2) {
  EXPECT_TRUE(less_than_pow2(r(1, 2), -9, 10));   // 2^-0.9 = 0.5359
  EXPECT_FALSE(less_than_pow2(r(54, 100), -9, 10));
  EXPECT_FALSE(less_than_pow2(1, 0, 1));
  EXPECT_TRUE(less_than_pow2(r(99, 100), 0, 1));
  EXPECT_TRUE(less_than_pow2(r(14, 10), 1, 2));   // sqrt 2 = 1.4142
  EXPECT_FALSE(less_than_pow2(r(142, 100), 1, 2));
  EXPECT_THROW(less_than_pow2(0, 1, 1), Error);
  EXPECT_THROW(less_than_pow2(1, 1, 0), Error);
}

TEST(Reports, BoundVerdicts) {
  // sigma = sqrt(0.25 / 10000) = 0.005; 3 sigma = 0.015
  EXPECT_TRUE(bound_report("a", ClaimKind::kLowerBound, 10000, 5000, r(51, 100)).pass);
  EXPECT_TRUE(bound_report("a", ClaimKind::kLowerBound, 10000, 5000, r(514, 1000)).pass);
  EXPECT_FALSE(bound_report("a", ClaimKind::kLowerBound, 10000, 5000, r(516, 1000)).pass);
  EXPECT_TRUE(bound_report("a", ClaimKind::kUpperBound, 10000, 5000, r(486, 1000)).pass);
  EXPECT_FALSE(bound_report("a", ClaimKind::kUpperBound, 10000, 5000, r(484, 1000)).pass);
  EXPECT_TRUE(bound_report("a", ClaimKind::kExact, 10, 10, 1).pass);
  EXPECT_FALSE(bound_report("a", ClaimKind::kExact, 10, 9, 1).pass);
  const TrialReport rep = bound_report("x", ClaimKind::kLowerBound, 10000, 5000, r(1, 2));
  EXPECT_NEAR(rep.sigma, 0.005, 1e-12);
  EXPECT_EQ(rep.estimate, r(1, 2));
  EXPECT_FALSE(bound_report("z", ClaimKind::kLowerBound, 0, 0, 0).pass);
}

TEST(Reports, CsvShape) {
  TrialReport rep = bound_report("x", ClaimKind::kLowerBound, 100, 60, r(1, 2));
  rep.details.push_back(bound_report("x.d", ClaimKind::kExact, 3, 3, 1));
  const std::string rows = rep.csv_rows();
  const std::string header = TrialReport::csv_header();
  const auto header_cols = std::count(header.begin(), header.end(), ',');
  std::size_t lines = 0;
  std::size_t start = 0;
  while (start < rows.size()) {
    const std::size_t end = rows.find('\n', start);
    const std::string line = rows.substr(start, end - start);
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), header_cols) << line;
    ++lines;
    start = end + 1;
  }
  EXPECT_EQ(lines, 2U);
  EXPECT_NE(rep.text().find("[PASS] x"), std::string::npos);
}

TEST(ChiSquare, KnownValues) {
  const auto one = chi_square_uniform({60, 40});
  EXPECT_DOUBLE_EQ(one.statistic, 4.0);
  EXPECT_EQ(one.dof, 1U);
  EXPECT_NEAR(one.p_value, 0.0455003, 1e-6);
  const auto flat = chi_square_uniform({25, 25, 25, 25});
  EXPECT_DOUBLE_EQ(flat.statistic, 0.0);
  EXPECT_DOUBLE_EQ(flat.p_value, 1.0);
  const auto same = chi_square_two_sample({10, 20, 0, 30}, {10, 20, 0, 30});
  EXPECT_DOUBLE_EQ(same.statistic, 0.0);
  EXPECT_EQ(same.dof, 2U);  // the empty cell is dropped
  const auto apart = chi_square_two_sample({100, 0}, {0, 100});
  EXPECT_NEAR(apart.statistic, 200.0, 1e-9);
  EXPECT_LT(apart.p_value, 1e-12);
  EXPECT_THROW(chi_square_two_sample({1}, {1, 2}), Error);
}

TEST(Sampler, Choice) {
  EXPECT_EQ(choose_rank_sampler(2, 3, 3, 1), RankSampler::kRejection);
  EXPECT_EQ(choose_rank_sampler(16, 6, 6, 2), RankSampler::kSLT);
  EXPECT_EQ(choose_rank_sampler(16, 15, 15, 6), RankSampler::kSLT);
}

TEST(Lemma, Names) {
  for (int k = 0; k < 8; ++k) {
    const auto kind = static_cast<LemmaKind>(k);
    EXPECT_EQ(lemma_kind_from_name(lemma_kind_name(kind)), kind);
  }
  EXPECT_EQ(lemma_kind_from_name("ix"), LemmaKind::kIXInvertible);
  EXPECT_EQ(lemma_kind_from_name("RSUCCESS"), LemmaKind::kRSuccess);
  EXPECT_FALSE(lemma_kind_from_name("bogus").has_value());
}

TEST(Lemma, AllKindsPassAtToyDimensions) {
  for (unsigned q : {2U, 3U, 16U}) {
    for (int k = 0; k < 8; ++k) {
      const auto kind = static_cast<LemmaKind>(k);
      const TrialReport rep =
          estimate_lemma(kind, default_lemma_config(kind, q), 2000, Seed::from_hex("0a0b"));
      EXPECT_TRUE(rep.pass) << rep.text();
      EXPECT_EQ(rep.trials, 2000U);
    }
  }
}

TEST(Lemma, Deterministic) {
  const auto cfg = default_lemma_config(LemmaKind::kRSuccess, 16);
  const auto a = estimate_lemma(LemmaKind::kRSuccess, cfg, 1000, Seed::zero(128));
  const auto b = estimate_lemma(LemmaKind::kRSuccess, cfg, 1000, Seed::zero(128));
  const auto c = estimate_lemma(LemmaKind::kRSuccess, cfg, 1000, Seed::from_hex("01"));
  EXPECT_EQ(a.csv_rows(), b.csv_rows());
  EXPECT_NE(a.csv_rows(), c.csv_rows());
}

TEST(Lemma, InvertibleGf2Rate) {
  LemmaConfig cfg = default_lemma_config(LemmaKind::kInvertible, 2);
  cfg.s = 8;
  const auto rep = estimate_lemma(LemmaKind::kInvertible, cfg, 100000, Seed::zero(128));
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.bound, r(28, 100));
  EXPECT_NEAR(to_double(rep.estimate), 0.288788, 3 * rep.sigma);
}

TEST(Lemma, ECalEGf16) {
  LemmaConfig cfg{16, 0, 0, 6, 6, 0, 2};
  const auto rep = estimate_lemma(LemmaKind::kEInCalE, cfg, 10000, Seed::zero(128));
  EXPECT_TRUE(rep.pass);
  EXPECT_GT(rep.estimate, 1 - tau(r(1, 16)));
}

TEST(Lemma, RSuccessGf16) {
  const auto rep = estimate_lemma(LemmaKind::kRSuccess, default_lemma_config(LemmaKind::kRSuccess, 16),
                                  10000, Seed::zero(128));
  EXPECT_TRUE(rep.pass) << rep.text();
  EXPECT_GT(rep.estimate, rational_pow(1 - tau(r(1, 16)), 4));
  ASSERT_EQ(rep.details.size(), 4U);
  for (const auto& d : rep.details) EXPECT_TRUE(d.pass) << d.text();
}

TEST(Lemma, ConfigErrors) {
  const auto bad = ErrorCode::kInvalidKindParams;
  const Seed s = Seed::zero(128);
  EXPECT_EQ(code_of([&] { estimate_lemma(LemmaKind::kFullRank, default_lemma_config(LemmaKind::kFullRank, 2), 999, s); }), bad);
  EXPECT_EQ(code_of([&] { estimate_lemma(LemmaKind::kFullRank, LemmaConfig{2, 0, 3}, 1000, s); }), bad);
  EXPECT_EQ(code_of([&] { estimate_lemma(LemmaKind::kInvertible, LemmaConfig{6, 3}, 1000, s); }), bad);
  EXPECT_EQ(code_of([&] { estimate_lemma(LemmaKind::kProductUniform, LemmaConfig{16, 3, 3}, 1000, s); }), bad);
  EXPECT_EQ(code_of([&] { estimate_lemma(LemmaKind::kRSuccess, LemmaConfig{2, 0, 0, 3, 3, 4, 1}, 1000, s); }), bad);
  EXPECT_EQ(code_of([&] { estimate_lemma(LemmaKind::kEInCalE, LemmaConfig{2, 0, 0, 3, 3, 2, 3}, 1000, s); }), bad);
}

TEST(BruteForce, NonInstancesAreUsuallyEmpty) {
  const Field& f = Field::get(2);
  PrgStream prg(Seed::zero(128), "brute");
  int empty = 0;
  for (int i = 0; i < 50; ++i) {
    MinRankInstance inst;
    for (int j = 0; j < 3; ++j) inst.matrices.push_back(sample_uniform(prg, f, 3, 3));
    const auto sols = brute_solve_minrank(inst, 0);
    empty += sols.empty();
    for (const auto& s : sols) EXPECT_TRUE(inst.evaluate(s.alpha).is_zero());
  }
  EXPECT_GE(empty, 45);
}

TEST(BruteForce, EnumeratesInLexOrder) {
  const Field& f = Field::get(3);
  MinRankInstance inst;
  inst.matrices = {Matrix(f, 2, 2), Matrix(f, 2, 2), Matrix(f, 2, 2)};
  const auto sols = brute_solve_minrank(inst, 0);
  ASSERT_EQ(sols.size(), 9U);
  EXPECT_EQ(sols.front().alpha, (std::vector<Fe>{0, 0}));
  EXPECT_EQ(sols[1].alpha, (std::vector<Fe>{0, 1}));
  EXPECT_EQ(sols.back().alpha, (std::vector<Fe>{2, 2}));
}

TEST(BruteForce, TooLarge) {
  const Params& p = toy_params_for(16);
  const auto inst = decompress_pk(keygen1(derive_seed(Seed::zero(128), "t", 0, 128), p).pk, p);
  EXPECT_EQ(code_of([&] { brute_solve_minrank(inst, p.r); }), ErrorCode::kTooLarge);
}

TEST(Distribution, IdenticalGeneratorsPass) {
  const Params& p = toy_params_for(2);
  const auto rep = distribution_projection_test(keygen3_generator(p), keygen3_generator(p),
                                                standard_projections(p), 2000, Seed::zero(128));
  EXPECT_TRUE(rep.pass) << rep.text();
  EXPECT_EQ(rep.details.size(), 4U);
}

TEST(Distribution, ReductionMatchesKeygen3) {
  const Params& p = toy_params_for(2);
  const auto rep = distribution_projection_test(reduction_generator(p), keygen3_generator(p),
                                                standard_projections(p), 3000, Seed::from_hex("77"));
  EXPECT_TRUE(rep.pass) << rep.text();
}

TEST(Distribution, BiasedControlIsDetected) {
  const Params& p = toy_params_for(2);
  const auto rep = distribution_projection_test(biased_generator(p), keygen3_generator(p),
                                                standard_projections(p), 2000, Seed::zero(128));
  EXPECT_FALSE(rep.pass);
  for (const auto& d : rep.details) {
    if (d.name.ends_with("alpha1")) {
      EXPECT_FALSE(d.pass);
    }
  }
}

TEST(Distribution, InsufficientSamples) {
  const Params& p = toy_params_for(2);
  const SampleGenerator never = [](const Seed&) { return std::optional<InstanceSample>(); };
  EXPECT_EQ(code_of([&] {
              distribution_projection_test(never, keygen3_generator(p), standard_projections(p), 1,
                                           Seed::zero(128));
            }),
            ErrorCode::kInsufficientSamples);
}

}  // namespace
}  // namespace minrank
