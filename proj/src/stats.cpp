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

#include "minrank/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "minrank/error.hpp"

namespace minrank {
namespace {

constexpr int kRejectionAttempts = 100000;
constexpr std::uint64_t kMinTrials = 1000;
constexpr std::uint64_t kMinSamples = 100;
constexpr std::size_t kMaxChiSquareCells = 4096;

BigInt big_pow(unsigned base, unsigned e) {
  BigInt v = 1;
  for (unsigned i = 0; i < e; ++i) v *= base;
  return v;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

const char* claim_name(ClaimKind c) {
  switch (c) {
    case ClaimKind::kLowerBound: return "lower";
    case ClaimKind::kUpperBound: return "upper";
    case ClaimKind::kChiSquare: return "chi2";
    case ClaimKind::kExact: return "exact";
  }
  return "?";
}

[[noreturn]] void bad_config(const std::string& why) {
  throw Error(ErrorCode::kInvalidKindParams, why);
}

std::size_t matrix_cell(const Matrix& m) {
  const unsigned q = m.field().order();
  std::size_t idx = 0;
  for (std::size_t i = m.size(); i-- > 0;) idx = idx * q + m.vec_at(i);
  return idx;
}

TrialReport chi_square_report(std::string name, std::uint64_t trials, std::uint64_t successes,
                              const ChiSquareResult& chi) {
  TrialReport rep;
  rep.name = std::move(name);
  rep.claim = ClaimKind::kChiSquare;
  rep.trials = trials;
  rep.successes = successes;
  rep.estimate = trials == 0 ? Rational(0) : Rational(BigInt(successes), BigInt(trials));
  rep.bound = 0;
  rep.chi2 = chi.statistic;
  rep.dof = chi.dof;
  rep.p_value = chi.p_value;
  rep.pass = chi.p_value > kChiSquareSignificance;
  return rep;
}

Params params_from(const LemmaConfig& cfg) {
  try {
    return make_params(cfg.q, cfg.m, cfg.n, cfg.k, cfg.r, 128);
  } catch (const Error& e) {
    bad_config(e.what());
  }
}

std::string describe(LemmaKind kind, const LemmaConfig& c) {
  std::ostringstream os;
  os << lemma_kind_name(kind) << "(q=" << c.q;
  switch (kind) {
    case LemmaKind::kFullRank:
    case LemmaKind::kProductUniform: os << ",s=" << c.s << ",t=" << c.t; break;
    case LemmaKind::kInvertible: os << ",s=" << c.s; break;
    case LemmaKind::kEInCalE:
    case LemmaKind::kKUniform: os << ",m=" << c.m << ",n=" << c.n << ",r=" << c.r; break;
    default: os << ",m=" << c.m << ",n=" << c.n << ",k=" << c.k << ",r=" << c.r; break;
  }
  os << ")";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

Rational tau(const Rational& x) {
  if (x <= 0) throw Error(ErrorCode::kNonPositiveInput, "tau needs x > 0");
  const Rational cap(72, 100);
  const Rational lin = Rational(21, 10) * x;
  return lin < cap ? lin : cap;
}

BigInt rank_count(unsigned q, unsigned m, unsigned n, unsigned r) {
  if (r > std::min(m, n)) throw Error(ErrorCode::kInvalidRank, "rank exceeds min(m, n)");
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < r; ++i) {
    const BigInt qi = big_pow(q, i);
    num *= (big_pow(q, m) - qi) * (big_pow(q, n) - qi);
    den *= big_pow(q, r) - qi;
  }
  return num / den;
}

Rational inverse_power(unsigned q, unsigned e) { return Rational(BigInt(1), big_pow(q, e)); }

Rational rational_pow(const Rational& x, unsigned e) {
  Rational v = 1;
  for (unsigned i = 0; i < e; ++i) v *= x;
  return v;
}

Rational truncated_tail_product(unsigned q, unsigned s, unsigned terms) {
  Rational v = 1;
  for (unsigned j = s; j < s + terms; ++j) v *= 1 - inverse_power(q, j);
  return v;
}

Rational full_rank_failure_bound(unsigned q, unsigned s, unsigned t) {
  const unsigned gap = s > t ? s - t : t - s;
  return tau(inverse_power(q, gap + 1));
}

bool less_than_pow2(const Rational& x, long num, long den) {
  if (den <= 0 || x <= 0) throw Error(ErrorCode::kNonPositiveInput, "less_than_pow2 domain");
  BigInt lhs = boost::multiprecision::pow(boost::multiprecision::numerator(x),
                                          static_cast<unsigned>(den));
  BigInt rhs = boost::multiprecision::pow(boost::multiprecision::denominator(x),
                                          static_cast<unsigned>(den));
  if (num >= 0) {
    rhs <<= static_cast<unsigned>(num);
  } else {
    lhs <<= static_cast<unsigned>(-num);
  }
  return lhs < rhs;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

// ---------------------------------------------------------------------------

std::string TrialReport::csv_header() {
  return "name,claim,trials,successes,estimate,bound,sigma,chi2,dof,p_value,verdict";
}

std::string TrialReport::csv_rows() const {
  std::ostringstream os;
  os << name << ',' << claim_name(claim) << ',' << trials << ',' << successes << ','
     << format_double(to_double(estimate)) << ',' << format_double(to_double(bound)) << ','
     << format_double(sigma) << ',' << format_double(chi2) << ',' << dof << ','
     << format_double(p_value) << ',' << (pass ? "pass" : "fail") << '\n';
  for (const auto& d : details) os << d.csv_rows();
  return os.str();
}

std::string TrialReport::text() const {
  std::ostringstream os;
  os << (pass ? "[PASS] " : "[FAIL] ") << name << ": ";
  switch (claim) {
    case ClaimKind::kLowerBound:
    case ClaimKind::kUpperBound:
      os << "estimate " << format_double(to_double(estimate)) << " (" << successes << '/'
         << trials << ") " << (claim == ClaimKind::kLowerBound ? ">=" : "<=") << " bound "
         << format_double(to_double(bound)) << (claim == ClaimKind::kLowerBound ? " - " : " + ")
         << "3 sigma, sigma " << format_double(sigma);
      break;
    case ClaimKind::kChiSquare:
      os << "chi2 " << format_double(chi2) << " on " << dof << " dof, p " << format_double(p_value)
         << " (" << successes << " samples)";
      break;
    case ClaimKind::kExact:
      os << successes << '/' << trials << " hold";
      break;
  }
  for (const auto& d : details) os << "\n  " << d.text();
  return os.str();
}

TrialReport bound_report(std::string name, ClaimKind claim, std::uint64_t trials,
                         std::uint64_t successes, const Rational& bound) {
  TrialReport rep;
  rep.name = std::move(name);
  rep.claim = claim;
  rep.trials = trials;
  rep.successes = successes;
  rep.bound = bound;
  if (trials == 0) {
    rep.pass = false;
    return rep;
  }
  rep.estimate = Rational(BigInt(successes), BigInt(trials));
  const Rational variance = rep.estimate * (1 - rep.estimate) / BigInt(trials);
  rep.sigma = std::sqrt(to_double(variance));
  switch (claim) {
    case ClaimKind::kLowerBound:
    case ClaimKind::kUpperBound: {
      const Rational gap = claim == ClaimKind::kLowerBound ? bound - rep.estimate
                                                           : rep.estimate - bound;
      rep.pass = gap <= 0 || gap * gap <= 9 * variance;
      break;
    }
    case ClaimKind::kExact: rep.pass = successes == trials; break;
    case ClaimKind::kChiSquare: rep.pass = false; break;
  }
  return rep;
}

ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  ChiSquareResult res;
  if (counts.size() < 2) return res;
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) return res;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    res.statistic += d * d / expected;
  }
  res.dof = static_cast<unsigned>(counts.size() - 1);
  res.p_value = boost::math::gamma_q(res.dof / 2.0, res.statistic / 2.0);
  return res;
}

ChiSquareResult chi_square_two_sample(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) {
  ChiSquareResult res;
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "cell counts differ");
  std::uint64_t na = 0;
  std::uint64_t nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += a[i];
    nb += b[i];
  }
  if (na == 0 || nb == 0) return res;
  const double n = static_cast<double>(na + nb);
  unsigned used = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double col = static_cast<double>(a[i] + b[i]);
    if (col == 0) continue;
    ++used;
    const double ea = col * static_cast<double>(na) / n;
    const double eb = col * static_cast<double>(nb) / n;
    res.statistic += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
  }
  if (used < 2) return res;
  res.dof = used - 1;
  res.p_value = boost::math::gamma_q(res.dof / 2.0, res.statistic / 2.0);
  return res;
}

// ---------------------------------------------------------------------------

RankSampler choose_rank_sampler(unsigned q, unsigned m, unsigned n, unsigned r) {
  return rank_count(q, m, n, r) * 64 >= big_pow(q, m * n) ? RankSampler::kRejection
                                                          : RankSampler::kSLT;
}

Matrix sample_uniform_rank(PrgStream& prg, const Field& f, std::size_t m, std::size_t n,
                           std::size_t r, RankSampler how) {
  if (how == RankSampler::kSLT) return sample_rank_r(prg, f, m, n, r).e;
  for (int i = 0; i < kRejectionAttempts; ++i) {
    Matrix a = sample_uniform(prg, f, m, n);
    if (rank(a) == r) return a;
  }
  throw Error(ErrorCode::kRandomnessExhausted, "rank rejection sampler did not terminate");
}

PrgStream trial_stream(const Seed& master, std::string_view purpose, std::uint64_t index) {
  std::string tag(purpose);
  tag.push_back('/');
  for (int i = 0; i < 8; ++i) tag.push_back(static_cast<char>((index >> (8 * i)) & 0xFF));
  return PrgStream(master, tag);
}

// ---------------------------------------------------------------------------

const char* lemma_kind_name(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::kFullRank: return "FullRank";
    case LemmaKind::kInvertible: return "Invertible";
    case LemmaKind::kEInCalE: return "EInCalE";
    case LemmaKind::kKUniform: return "KUniform";
    case LemmaKind::kCanonicalReducible: return "CanonicalReducible";
    case LemmaKind::kIXInvertible: return "IXInvertible";
    case LemmaKind::kProductUniform: return "ProductUniform";
    case LemmaKind::kRSuccess: return "RSuccess";
  }
  return "?";
}

std::optional<LemmaKind> lemma_kind_from_name(std::string_view name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static const std::pair<const char*, LemmaKind> kAliases[] = {
      {"fullrank", LemmaKind::kFullRank},
      {"invertible", LemmaKind::kInvertible},
      {"eincale", LemmaKind::kEInCalE},
      {"ecale", LemmaKind::kEInCalE},
      {"kuniform", LemmaKind::kKUniform},
      {"canonicalreducible", LemmaKind::kCanonicalReducible},
      {"canonical", LemmaKind::kCanonicalReducible},
      {"ixinvertible", LemmaKind::kIXInvertible},
      {"ix", LemmaKind::kIXInvertible},
      {"productuniform", LemmaKind::kProductUniform},
      {"product", LemmaKind::kProductUniform},
      {"rsuccess", LemmaKind::kRSuccess},
  };
  for (const auto& [alias, kind] : kAliases) {
    if (lower == alias) return kind;
  }
  return std::nullopt;
}

LemmaConfig default_lemma_config(LemmaKind kind, unsigned q) {
  LemmaConfig c;
  c.q = q;
  const Params& toy = toy_params_for(q);
  c.m = toy.m;
  c.n = toy.n;
  c.k = toy.k;
  c.r = toy.r;
  switch (kind) {
    case LemmaKind::kFullRank:
      c.s = 4;
      c.t = 3;
      break;
    case LemmaKind::kInvertible: c.s = q == 2 ? 8 : (q == 3 ? 6 : 4); break;
    case LemmaKind::kProductUniform:
      c.s = 2;
      c.t = q == 16 ? 1 : 2;
      break;
    default: break;
  }
  return c;
}

TrialReport estimate_lemma(LemmaKind kind, const LemmaConfig& cfg, std::uint64_t trials,
                           const Seed& master_seed) {
  if (trials < kMinTrials) bad_config("at least 1000 trials are required");
  const Field* fp = nullptr;
  try {
    fp = &Field::for_order(cfg.q);
  } catch (const Error& e) {
    bad_config(e.what());
  }
  const Field& f = *fp;
  const std::string name = describe(kind, cfg);
  const std::string_view purpose = lemma_kind_name(kind);
  const Rational one_minus_tau = 1 - tau(Rational(1, cfg.q));

  switch (kind) {
    case LemmaKind::kFullRank: {
      if (cfg.s == 0 || cfg.t == 0) bad_config("FullRank needs s, t >= 1");
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < trials; ++i) {
        PrgStream prg = trial_stream(master_seed, purpose, i);
        hits += rank(sample_uniform(prg, f, cfg.s, cfg.t)) == std::min(cfg.s, cfg.t);
      }
      return bound_report(name, ClaimKind::kLowerBound, trials, hits,
                          1 - full_rank_failure_bound(cfg.q, cfg.s, cfg.t));
    }

    case LemmaKind::kInvertible: {
      if (cfg.s == 0) bad_config("Invertible needs s >= 1");
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < trials; ++i) {
        PrgStream prg = trial_stream(master_seed, purpose, i);
        hits += rank(sample_uniform(prg, f, cfg.s, cfg.s)) == cfg.s;
      }
      return bound_report(name, ClaimKind::kLowerBound, trials, hits, one_minus_tau);
    }

    case LemmaKind::kEInCalE:
    case LemmaKind::kKUniform: {
      if (!(cfg.r >= 1 && cfg.r < cfg.n && cfg.r <= cfg.m)) bad_config("need 1 <= r < n, r <= m");
      const RankSampler how = choose_rank_sampler(cfg.q, cfg.m, cfg.n, cfg.r);
      const std::size_t k_entries = std::size_t{cfg.r} * (cfg.n - cfg.r);
      // Full K when the cell count allows it, else its first two entries.
      std::size_t proj_entries = k_entries;
      std::size_t cells = 1;
      for (std::size_t i = 0; i < proj_entries; ++i) {
        if (cells * cfg.q > kMaxChiSquareCells) {
          proj_entries = std::min<std::size_t>(k_entries, 2);
          break;
        }
        cells *= cfg.q;
      }
      cells = 1;
      for (std::size_t i = 0; i < proj_entries; ++i) cells *= cfg.q;
      std::vector<std::uint64_t> counts(cells, 0);
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < trials; ++i) {
        PrgStream prg = trial_stream(master_seed, purpose, i);
        const Matrix e = sample_uniform_rank(prg, f, cfg.m, cfg.n, cfg.r, how);
        auto k_mat = solve_k_matrix(e, cfg.r);
        if (!k_mat) continue;
        ++hits;
        std::size_t idx = 0;
        for (std::size_t j = proj_entries; j-- > 0;) idx = idx * cfg.q + k_mat->vec_at(j);
        ++counts[idx];
      }
      if (kind == LemmaKind::kEInCalE) {
        return bound_report(name, ClaimKind::kLowerBound, trials, hits, one_minus_tau);
      }
      return chi_square_report(name, trials, hits, chi_square_uniform(counts));
    }

    case LemmaKind::kCanonicalReducible: {
      const Params p = params_from(cfg);
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < trials; ++i) {
        const Seed root = derive_seed(master_seed, purpose, i, p.lambda);
        const auto kp = keygen1(root, p);
        hits += to_canonical(decompress_pk(kp.pk, p)).has_value();
      }
      return bound_report(name, ClaimKind::kLowerBound, trials, hits, one_minus_tau);
    }

    case LemmaKind::kIXInvertible: {
      if (!(cfg.r >= 1 && cfg.r < cfg.n) || cfg.k == 0 ||
          std::size_t{cfg.k} > std::size_t{cfg.m} * (cfg.n - cfg.r)) {
        bad_config("IXInvertible needs 1 <= r < n and 1 <= k <= m(n - r)");
      }
      std::uint64_t hits = 0;
      const Matrix zero_right(f, cfg.m, cfg.r);
      for (std::uint64_t i = 0; i < trials; ++i) {
        PrgStream prg = trial_stream(master_seed, purpose, i);
        std::vector<Matrix> blocks;
        blocks.reserve(cfg.k);
        for (unsigned j = 0; j < cfg.k; ++j) blocks.push_back(sample_uniform(prg, f, cfg.m, cfg.r));
        const Matrix k_mat = sample_uniform(prg, f, cfg.r, cfg.n - cfg.r);
        hits += inverse(build_star_system(zero_right, blocks, k_mat).lhs).has_value();
      }
      return bound_report(name, ClaimKind::kLowerBound, trials, hits,
                          one_minus_tau * one_minus_tau);
    }

    case LemmaKind::kProductUniform: {
      if (cfg.s == 0 || cfg.t == 0) bad_config("ProductUniform needs s, t >= 1");
      std::size_t cells = 1;
      for (unsigned i = 0; i < cfg.s * cfg.t; ++i) {
        cells *= cfg.q;
        if (cells > kMaxChiSquareCells) bad_config("too many cells for a chi-square test");
      }
      std::vector<std::uint64_t> ab(cells, 0);
      std::vector<std::uint64_t> ca(cells, 0);
      for (std::uint64_t i = 0; i < trials; ++i) {
        PrgStream prg = trial_stream(master_seed, purpose, i);
        // A is invertible but far from uniform: the identity half the time.
        const bool use_identity = prg.next_fe(Field::get(2)) == 0;
        const Matrix a = use_identity ? Matrix::identity(f, cfg.s) : sample_invertible(prg, f, cfg.s);
        const Matrix b = sample_uniform(prg, f, cfg.s, cfg.t);
        const Matrix c = sample_uniform(prg, f, cfg.t, cfg.s);
        ++ab[matrix_cell(a * b)];
        ++ca[matrix_cell(c * a)];
      }
      TrialReport rep = chi_square_report(name, trials, trials, ChiSquareResult{});
      rep.details.push_back(chi_square_report(name + ".AB", trials, trials, chi_square_uniform(ab)));
      rep.details.push_back(chi_square_report(name + ".CA", trials, trials, chi_square_uniform(ca)));
      rep.p_value = std::min(rep.details[0].p_value, rep.details[1].p_value);
      rep.chi2 = std::max(rep.details[0].chi2, rep.details[1].chi2);
      rep.dof = rep.details[0].dof;
      rep.pass = rep.details[0].pass && rep.details[1].pass;
      return rep;
    }

    case LemmaKind::kRSuccess: {
      const Params p = params_from(cfg);
      std::uint64_t stage_reached[3] = {0, 0, 0};
      std::uint64_t stage_failed[3] = {0, 0, 0};
      std::uint64_t successes = 0;
      std::uint64_t valid = 0;
      for (std::uint64_t i = 0; i < trials; ++i) {
        const Seed root = derive_seed(master_seed, purpose, i, p.lambda);
        const auto [inst, wit] = decompress_sk(SecretKey{Variant::kKeyGen1, Seed(), root}, p);
        const ReductionResult res = reduce_r(inst, wit, p.r);
        if (const auto* stage = std::get_if<AbortStage>(&res)) {
          const int s = static_cast<int>(*stage);
          for (int j = 0; j <= s; ++j) ++stage_reached[j];
          ++stage_failed[s];
          continue;
        }
        for (auto& reached : stage_reached) ++reached;
        ++successes;
        const auto& ok = std::get<ReductionSuccess>(res);
        valid += rank(ok.instance.evaluate(ok.alpha)) == p.r &&
                 in_solution_set(ok.instance, ok.e, ok.alpha, p.r);
      }
      const Rational t = tau(Rational(1, cfg.q));
      TrialReport rep = bound_report(name, ClaimKind::kLowerBound, trials, successes,
                                     rational_pow(one_minus_tau, 4));
      rep.details.push_back(bound_report(name + ".abort.EnotInCalE", ClaimKind::kUpperBound,
                                         stage_reached[0], stage_failed[0], t));
      rep.details.push_back(bound_report(name + ".abort.NotReducible", ClaimKind::kUpperBound,
                                         stage_reached[1], stage_failed[1], t));
      rep.details.push_back(bound_report(name + ".abort.IXSingular", ClaimKind::kUpperBound,
                                         stage_reached[2], stage_failed[2],
                                         1 - one_minus_tau * one_minus_tau));
      rep.details.push_back(bound_report(name + ".success.in_S", ClaimKind::kExact, successes,
                                         valid, 1));
      for (const auto& d : rep.details) rep.pass = rep.pass && d.pass;
      return rep;
    }
  }
  bad_config("unknown kind");
}

// ---------------------------------------------------------------------------

std::vector<MinRankSolution> brute_solve_minrank(const MinRankInstance& inst, std::size_t r) {
  const std::size_t k = inst.k();
  const Field& f = inst.m0().field();
  BigInt space = big_pow(f.order(), static_cast<unsigned>(k));
  if (space > BigInt(1) << 24) throw Error(ErrorCode::kTooLarge, "q^k exceeds 2^24");
  std::vector<MinRankSolution> out;
  std::vector<Fe> alpha(k, 0);
  for (;;) {
    const std::size_t rk = rank(inst.evaluate(alpha));
    if (rk <= r) out.push_back({alpha, rk});
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++alpha[i] < f.order()) break;
      alpha[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

OracleCheck oracle_check(const Params& p, Variant variant, std::uint64_t count,
                         const Seed& master_seed) {
  OracleCheck res;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Seed root = derive_seed(master_seed, "ORACLE", i, p.lambda);
    const KeyPair kp = keygen(variant, root, p);
    const MinRankInstance inst = decompress_pk(kp.pk, p);
    const auto [inst_sk, wit] = decompress_sk(kp.sk, p);
    if (!(inst == inst_sk)) {
      throw Error(ErrorCode::kInternalInconsistency, "public and secret decompression disagree");
    }
    const auto sols = brute_solve_minrank(inst, p.r);
    ++res.instances;
    res.planted_found += std::any_of(sols.begin(), sols.end(),
                                     [&](const MinRankSolution& s) { return s.alpha == wit.alpha; });
    res.unique += sols.size() == 1;
  }
  return res;
}

RetryStats keygen3_retry_stats(const Params& p, std::uint64_t keys, const Seed& master_seed) {
  RetryStats st;
  for (std::uint64_t i = 0; i < keys; ++i) {
    const Seed root = derive_seed(master_seed, "RETRY", i, p.lambda);
    st.attempts += keygen3(root, p).attempts;
    ++st.keys;
  }
  return st;
}

// ---------------------------------------------------------------------------

std::vector<Projection> standard_projections(const Params& p) {
  const unsigned q = p.q;
  const std::size_t k = p.k;
  const std::size_t r = p.r;
  std::vector<Projection> out;
  out.push_back({"M0[k+1]", q, [k](const InstanceSample& s) {
                   return std::size_t{s.instance.m0().vec_at(k)};
                 }});
  out.push_back({"(M1[k+1],M0R[1])", std::size_t{q} * q, [k, q, r](const InstanceSample& s) {
                   const Matrix& m0 = s.instance.m0();
                   const Fe m0r1 = m0(0, m0.cols() - r);
                   return std::size_t{s.instance.matrices[1].vec_at(k)} * q + m0r1;
                 }});
  out.push_back({"alpha1", q, [](const InstanceSample& s) { return std::size_t{s.alpha.at(0)}; }});
  out.push_back({"K11", q, [](const InstanceSample& s) { return std::size_t{s.k(0, 0)}; }});
  return out;
}

SampleGenerator reduction_generator(const Params& p) {
  return [p](const Seed& seed) -> std::optional<InstanceSample> {
    const auto [inst, wit] = decompress_sk(SecretKey{Variant::kKeyGen1, Seed(), seed}, p);
    ReductionResult res = reduce_r(inst, wit, p.r);
    auto* ok = std::get_if<ReductionSuccess>(&res);
    if (ok == nullptr) return std::nullopt;
    return InstanceSample{std::move(ok->instance), std::move(ok->alpha), std::move(ok->k)};
  };
}

SampleGenerator keygen3_generator(const Params& p) {
  return [p](const Seed& seed) -> std::optional<InstanceSample> {
    const KeyPair kp = keygen3(seed, p);
    auto [inst, wit] = decompress_sk(kp.sk, p);
    return InstanceSample{std::move(inst), std::move(wit.alpha), std::move(*wit.k)};
  };
}

SampleGenerator biased_generator(const Params& p) {
  return [p](const Seed& seed) -> std::optional<InstanceSample> {
    const KeyPair kp = keygen3(seed, p);
    auto [inst, wit] = decompress_sk(kp.sk, p);
    inst.matrices[0] = wit.e;
    return InstanceSample{std::move(inst), std::vector<Fe>(p.k, 0), std::move(*wit.k)};
  };
}

TrialReport distribution_projection_test(const SampleGenerator& gen_a, const SampleGenerator& gen_b,
                                         const std::vector<Projection>& projections,
                                         std::uint64_t samples, const Seed& master_seed) {
  using Counts = std::vector<std::vector<std::uint64_t>>;
  auto collect = [&](const SampleGenerator& gen, std::string_view side, Counts& counts) {
    counts.clear();
    for (const auto& pr : projections) counts.emplace_back(pr.cells, 0);
    std::uint64_t got = 0;
    const std::uint64_t max_attempts = 1000 * samples;
    for (std::uint64_t i = 0; i < max_attempts && got < samples; ++i) {
      const auto sample = gen(derive_seed(master_seed, side, i));
      if (!sample) continue;
      ++got;
      for (std::size_t j = 0; j < projections.size(); ++j) ++counts[j][projections[j].cell(*sample)];
    }
    if (got < kMinSamples) {
      throw Error(ErrorCode::kInsufficientSamples,
                  "generator " + std::string(side) + " produced " + std::to_string(got) + " samples");
    }
    return got;
  };
  Counts ca;
  Counts cb;
  const std::uint64_t na = collect(gen_a, "A", ca);
  const std::uint64_t nb = collect(gen_b, "B", cb);

  TrialReport rep;
  rep.name = "DistributionProjection";
  rep.claim = ClaimKind::kChiSquare;
  rep.trials = samples;
  rep.successes = std::min(na, nb);
  rep.estimate = Rational(BigInt(rep.successes), BigInt(samples));
  rep.pass = true;
  for (std::size_t j = 0; j < projections.size(); ++j) {
    TrialReport d = chi_square_report("DistributionProjection." + projections[j].name, samples,
                                      std::min(na, nb), chi_square_two_sample(ca[j], cb[j]));
    rep.pass = rep.pass && d.pass;
    if (j == 0 || d.p_value < rep.p_value) {
      rep.p_value = d.p_value;
      rep.chi2 = d.chi2;
      rep.dof = d.dof;
    }
    rep.details.push_back(std::move(d));
  }
  return rep;
}

}  // namespace minrank
