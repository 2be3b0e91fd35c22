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

#ifndef MINRANK_STATS_HPP_
#define MINRANK_STATS_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minrank/canonical.hpp"
#include "minrank/keygen.hpp"
#include "minrank/matrix.hpp"
#include "minrank/params.hpp"
#include "minrank/prg.hpp"

namespace minrank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Closed forms. Everything here is exact.

// min(0.72, 2.1 x). Throws Error(kNonPositiveInput) for x <= 0.
Rational tau(const Rational& x);

// Number of m x n matrices of rank r over GF(q). Throws Error(kInvalidRank)
// when r > min(m, n).
BigInt rank_count(unsigned q, unsigned m, unsigned n, unsigned r);

// prod_{j=s}^{s+terms-1} (1 - q^-j)
Rational truncated_tail_product(unsigned q, unsigned s, unsigned terms);

// tau(q^(-|s-t|-1)): upper bound on Pr[rank(A) < min(s, t)] for uniform A.
Rational full_rank_failure_bound(unsigned q, unsigned s, unsigned t);

// q^-e as an exact rational (e >= 0).
Rational inverse_power(unsigned q, unsigned e);
Rational rational_pow(const Rational& x, unsigned e);

// x < 2^(num / den), decided exactly (den > 0, x > 0).
bool less_than_pow2(const Rational& x, long num, long den);

double to_double(const Rational& x);

// ---------------------------------------------------------------------------
// Reports

enum class ClaimKind {
  kLowerBound,  // estimate >= bound - 3 sigma
  kUpperBound,  // estimate <= bound + 3 sigma
  kChiSquare,   // p-value > significance
  kExact,       // successes == trials
};

inline constexpr double kChiSquareSignificance = 1e-3;

struct TrialReport {
  std::string name;
  ClaimKind claim = ClaimKind::kLowerBound;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  Rational estimate = 0;
  Rational bound = 0;
  double sigma = 0.0;
  double chi2 = 0.0;
  unsigned dof = 0;
  double p_value = 1.0;
  bool pass = false;
  std::vector<TrialReport> details;

  static std::string csv_header();
  // This report, then its details, one CSV row each.
  std::string csv_rows() const;
  std::string text() const;
};

// Fills estimate/sigma/pass for a bound claim. The 3-sigma comparison is done
// in exact rational arithmetic (sigma^2 = est (1 - est) / trials).
TrialReport bound_report(std::string name, ClaimKind claim, std::uint64_t trials,
                         std::uint64_t successes, const Rational& bound);

struct ChiSquareResult {
  double statistic = 0.0;
  unsigned dof = 0;
  double p_value = 1.0;
};
// Goodness of fit against the uniform distribution on counts.size() cells.
ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& counts);
// Homogeneity of two samples over the same cells; empty cells are dropped.
ChiSquareResult chi_square_two_sample(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b);

// ---------------------------------------------------------------------------
// Samplers used by the estimators

enum class RankSampler { kRejection, kSLT };

// Rejection from uniform matrices when a draw has rank r with probability at
// least 1/64, else S L T.
RankSampler choose_rank_sampler(unsigned q, unsigned m, unsigned n, unsigned r);
// Uniform over the m x n matrices of rank exactly r.
Matrix sample_uniform_rank(PrgStream& prg, const Field& f, std::size_t m, std::size_t n,
                           std::size_t r, RankSampler how);

// Stream for trial `index` of an experiment.
PrgStream trial_stream(const Seed& master, std::string_view purpose, std::uint64_t index);

// ---------------------------------------------------------------------------
// Monte Carlo estimators

enum class LemmaKind {
  kFullRank,
  kInvertible,
  kEInCalE,
  kKUniform,
  kCanonicalReducible,
  kIXInvertible,
  kProductUniform,
  kRSuccess,
};

const char* lemma_kind_name(LemmaKind kind);
std::optional<LemmaKind> lemma_kind_from_name(std::string_view name);

struct LemmaConfig {
  unsigned q = 2;
  unsigned s = 0;  // FullRank, Invertible, ProductUniform
  unsigned t = 0;  // FullRank, ProductUniform
  unsigned m = 0, n = 0, k = 0, r = 0;  // instance-shaped kinds
};

// Toy dimensions for `kind` over GF(q), q in {2, 3, 16}.
LemmaConfig default_lemma_config(LemmaKind kind, unsigned q);

// Runs `trials` independent trials, trial i driven only by (master_seed, i).
// Throws Error(kInvalidKindParams) for trials < 1000 or dimensions the kind
// cannot use.
TrialReport estimate_lemma(LemmaKind kind, const LemmaConfig& cfg, std::uint64_t trials,
                           const Seed& master_seed);

// ---------------------------------------------------------------------------
// Brute-force MinRank oracle

struct MinRankSolution {
  std::vector<Fe> alpha;
  std::size_t rank;
};

// Every alpha in GF(q)^k with rank(M_0 + sum alpha_i M_i) <= r, in
// lexicographic order of alpha. Throws Error(kTooLarge) when q^k > 2^24.
std::vector<MinRankSolution> brute_solve_minrank(const MinRankInstance& inst, std::size_t r);

struct OracleCheck {
  std::uint64_t instances = 0;
  std::uint64_t planted_found = 0;
  std::uint64_t unique = 0;
};
// Generates `count` keys of `variant`, decompresses both halves and searches
// the public instance exhaustively.
OracleCheck oracle_check(const Params& p, Variant variant, std::uint64_t count,
                         const Seed& master_seed);

struct RetryStats {
  std::uint64_t keys = 0;
  std::uint64_t attempts = 0;
};
RetryStats keygen3_retry_stats(const Params& p, std::uint64_t keys, const Seed& master_seed);

// ---------------------------------------------------------------------------
// Distribution equivalence

struct InstanceSample {
  MinRankInstance instance;
  std::vector<Fe> alpha;
  Matrix k;
};

// nullopt when the generator's own procedure fails for this seed.
using SampleGenerator = std::function<std::optional<InstanceSample>(const Seed& trial_seed)>;

struct Projection {
  std::string name;
  std::size_t cells;
  std::function<std::size_t(const InstanceSample&)> cell;
};

// <M_0>_{k+1}, (<M_1>_{k+1}, <M_0^R>_1), alpha_1, K_11.
std::vector<Projection> standard_projections(const Params& p);

// Canonical forms of KeyGen1 instances that the reduction accepts.
SampleGenerator reduction_generator(const Params& p);
// Decompressed KeyGen3 keys.
SampleGenerator keygen3_generator(const Params& p);
// KeyGen3 keys with alpha forced to zero (and M_0 := E); a test-power control.
SampleGenerator biased_generator(const Params& p);

// Collects `samples` successes from each generator and runs a two-sample
// chi-square per projection. Throws Error(kInsufficientSamples) when either
// side yields fewer than 100 successes within 1000 * samples attempts.
TrialReport distribution_projection_test(const SampleGenerator& gen_a, const SampleGenerator& gen_b,
                                         const std::vector<Projection>& projections,
                                         std::uint64_t samples, const Seed& master_seed);

}  // namespace minrank

#endif  // MINRANK_STATS_HPP_
