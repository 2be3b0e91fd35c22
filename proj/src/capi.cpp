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

// extern "C" surface over the C++ core. Every entry point converts
// exceptions into status codes and records the message per thread.

#include "minrank/minrank.h"

#include <openssl/rand.h>

#include <cstring>
#include <limits>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "minrank/canonical.hpp"
#include "minrank/error.hpp"
#include "minrank/keygen.hpp"
#include "minrank/params.hpp"
#include "minrank/stats.hpp"

struct minrank_params {
  minrank::Params p;
};

struct minrank_keypair {
  minrank::Params p;
  minrank::Variant variant;
  std::optional<minrank::PublicKey> pk;
  std::optional<minrank::SecretKey> sk;
  std::vector<std::uint8_t> pk_blob;
  std::vector<std::uint8_t> sk_blob;
  unsigned attempts = 0;
};

namespace {

thread_local std::string g_last_error;

minrank_status fail(minrank_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

minrank_status map_code(minrank::ErrorCode c) {
  using minrank::ErrorCode;
  switch (c) {
    case ErrorCode::kInvalidParams:
    case ErrorCode::kInvalidField: return MINRANK_E_INVALID_PARAMS;
    case ErrorCode::kMalformedKey: return MINRANK_E_MALFORMED_KEY;
    case ErrorCode::kRetryLimitExceeded: return MINRANK_E_RETRY_LIMIT;
    case ErrorCode::kRandomnessExhausted: return MINRANK_E_RANDOMNESS;
    case ErrorCode::kInvalidKindParams: return MINRANK_E_INVALID_KIND;
    case ErrorCode::kTooLarge: return MINRANK_E_TOO_LARGE;
    case ErrorCode::kInsufficientSamples: return MINRANK_E_INSUFFICIENT_SAMPLES;
    case ErrorCode::kNonPositiveInput:
    case ErrorCode::kInvalidRank:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kInvalidSplit:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kZeroInverse: return MINRANK_E_INVALID_ARGUMENT;
    case ErrorCode::kInternalInconsistency: return MINRANK_E_INTERNAL;
  }
  return MINRANK_E_INTERNAL;
}

template <typename Fn>
minrank_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const minrank::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MINRANK_E_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(MINRANK_E_INTERNAL, e.what());
  } catch (...) {
    return fail(MINRANK_E_INTERNAL, "unknown exception");
  }
}

minrank_status to_variant(int v, minrank::Variant* out) {
  if (v < 1 || v > 3) return fail(MINRANK_E_INVALID_ARGUMENT, "variant must be 1, 2 or 3");
  *out = minrank::variant_from_int(v);
  return MINRANK_OK;
}

minrank_status copy_out(const std::vector<std::uint8_t>& blob, std::uint8_t* buf, size_t cap,
                        size_t* written) {
  if (written == nullptr) return fail(MINRANK_E_INVALID_ARGUMENT, "written is NULL");
  *written = blob.size();
  if (buf == nullptr && cap == 0) return MINRANK_OK;
  if (buf == nullptr || cap < blob.size()) {
    return fail(MINRANK_E_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(cap) + " of " +
                                                std::to_string(blob.size()) + " bytes");
  }
  std::memcpy(buf, blob.data(), blob.size());
  return MINRANK_OK;
}

// ---------------------------------------------------------------------------
// Stats plumbing

constexpr const char* kStatsKinds[] = {"fullrank", "invertible", "eincale", "kuniform", "canonical",
                                       "ix",       "product",    "rsuccess", "distribution",
                                       "oracle"};

const char* claim_string(minrank::ClaimKind c) {
  switch (c) {
    case minrank::ClaimKind::kLowerBound: return "lower";
    case minrank::ClaimKind::kUpperBound: return "upper";
    case minrank::ClaimKind::kChiSquare: return "chi2";
    case minrank::ClaimKind::kExact: return "exact";
  }
  return "?";
}

struct Emitter {
  minrank_report_fn fn;
  void* user;
  bool all_pass = true;

  void emit(const minrank::TrialReport& rep, int depth, bool headline_counts = true) {
    std::string csv = rep.csv_rows();
    csv = csv.substr(0, csv.find('\n'));
    std::string text = rep.text();
    text = text.substr(0, text.find('\n'));
    minrank_report out{};
    out.depth = depth;
    out.name = rep.name.c_str();
    out.claim = claim_string(rep.claim);
    out.trials = rep.trials;
    out.successes = rep.successes;
    out.estimate = minrank::to_double(rep.estimate);
    out.bound = minrank::to_double(rep.bound);
    out.sigma = rep.sigma;
    out.chi2 = rep.chi2;
    out.dof = rep.dof;
    out.p_value = rep.p_value;
    out.pass = rep.pass ? 1 : 0;
    out.text = text.c_str();
    out.csv_row = csv.c_str();
    if (depth == 0 && headline_counts) all_pass = all_pass && rep.pass;
    if (fn != nullptr) fn(&out, user);
    for (const auto& d : rep.details) emit(d, depth + 1);
  }

  // A measured quantity with no verdict attached.
  void record(const std::string& name, std::uint64_t trials, std::uint64_t count) {
    const double rate = trials == 0 ? 0.0 : static_cast<double>(count) / trials;
    std::ostringstream text;
    text << "[INFO] " << name << ": " << count << '/' << trials << " = " << rate;
    std::ostringstream csv;
    csv << name << ",record," << trials << ',' << count << ',' << rate << ",0,0,0,0,1,info";
    const std::string t = text.str();
    const std::string c = csv.str();
    minrank_report out{};
    out.name = name.c_str();
    out.claim = "record";
    out.trials = trials;
    out.successes = count;
    out.estimate = rate;
    out.p_value = 1.0;
    out.pass = 1;
    out.text = t.c_str();
    out.csv_row = c.c_str();
    if (fn != nullptr) fn(&out, user);
  }
};

minrank::LemmaConfig fill_config(minrank::LemmaKind kind, const minrank_stats_config* cfg) {
  const unsigned q = cfg != nullptr && cfg->q != 0 ? cfg->q : 16;
  minrank::LemmaConfig c = minrank::default_lemma_config(kind, q);
  if (cfg == nullptr) return c;
  if (cfg->s != 0) c.s = cfg->s;
  if (cfg->t != 0) c.t = cfg->t;
  if (cfg->m != 0) c.m = cfg->m;
  if (cfg->n != 0) c.n = cfg->n;
  if (cfg->k != 0) c.k = cfg->k;
  if (cfg->r != 0) c.r = cfg->r;
  return c;
}

// Instance-shaped suites default to the GF(2) toy set.
minrank::Params instance_params(const minrank_stats_config* cfg) {
  const unsigned q = cfg != nullptr && cfg->q != 0 ? cfg->q : 2;
  minrank::Params p = minrank::toy_params_for(q);
  if (cfg == nullptr) return p;
  const bool custom = cfg->m != 0 || cfg->n != 0 || cfg->k != 0 || cfg->r != 0;
  if (!custom) return p;
  try {
    return minrank::make_params(q, cfg->m != 0 ? cfg->m : p.m, cfg->n != 0 ? cfg->n : p.n,
                                cfg->k != 0 ? cfg->k : p.k, cfg->r != 0 ? cfg->r : p.r, p.lambda);
  } catch (const minrank::Error& e) {
    throw minrank::Error(minrank::ErrorCode::kInvalidKindParams, e.what());
  }
}

}  // namespace

extern "C" {

const char* minrank_version(void) { return "1.0.0"; }

const char* minrank_status_name(minrank_status status) {
  switch (status) {
    case MINRANK_OK: return "ok";
    case MINRANK_E_INVALID_ARGUMENT: return "invalid argument";
    case MINRANK_E_INVALID_PARAMS: return "invalid parameters";
    case MINRANK_E_MALFORMED_KEY: return "malformed key";
    case MINRANK_E_RETRY_LIMIT: return "retry limit exceeded";
    case MINRANK_E_BUFFER_TOO_SMALL: return "buffer too small";
    case MINRANK_E_RANDOMNESS: return "randomness unavailable";
    case MINRANK_E_INVALID_KIND: return "invalid statistics kind or configuration";
    case MINRANK_E_TOO_LARGE: return "search space too large";
    case MINRANK_E_INSUFFICIENT_SAMPLES: return "insufficient samples";
    case MINRANK_E_NO_MEMORY: return "out of memory";
    case MINRANK_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* minrank_last_error(void) { return g_last_error.c_str(); }

size_t minrank_registry_count(void) { return minrank::registry().size(); }

const char* minrank_registry_name(size_t index) {
  const auto reg = minrank::registry();
  return index < reg.size() ? reg[index].name.c_str() : nullptr;
}

minrank_status minrank_params_by_name(const char* name, minrank_params** out) {
  return guarded([&] {
    if (name == nullptr || out == nullptr) return fail(MINRANK_E_INVALID_ARGUMENT, "NULL argument");
    *out = new minrank_params{minrank::params_by_name(name)};
    return MINRANK_OK;
  });
}

minrank_status minrank_params_create(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r,
                                     unsigned lambda, minrank_params** out) {
  return guarded([&] {
    if (out == nullptr) return fail(MINRANK_E_INVALID_ARGUMENT, "out is NULL");
    *out = new minrank_params{minrank::make_params(q, m, n, k, r, lambda)};
    return MINRANK_OK;
  });
}

void minrank_params_free(minrank_params* params) { delete params; }

minrank_status minrank_params_info_get(const minrank_params* params, minrank_params_info* out) {
  if (params == nullptr || out == nullptr) return fail(MINRANK_E_INVALID_ARGUMENT, "NULL argument");
  const auto& p = params->p;
  *out = minrank_params_info{p.name.c_str(), p.q, p.m, p.n, p.k, p.r, p.lambda};
  return MINRANK_OK;
}

#define MINRANK_SIZE_FN(fn_name, type, expr)                                           \
  minrank_status fn_name(const minrank_params* params, int variant, type* out) {       \
    return guarded([&] {                                                               \
      if (params == nullptr || out == nullptr) {                                       \
        return fail(MINRANK_E_INVALID_ARGUMENT, "NULL argument");                      \
      }                                                                                \
      minrank::Variant v;                                                              \
      if (minrank_status s = to_variant(variant, &v); s != MINRANK_OK) return s;       \
      *out = static_cast<type>(expr(params->p, v));                                    \
      return MINRANK_OK;                                                               \
    });                                                                                \
  }

MINRANK_SIZE_FN(minrank_pk_size_bits, uint64_t, minrank::pk_size_bits)
MINRANK_SIZE_FN(minrank_sk_size_bits, uint64_t, minrank::sk_size_bits)
MINRANK_SIZE_FN(minrank_pk_bytes, size_t, minrank::pk_blob_bytes)
MINRANK_SIZE_FN(minrank_sk_bytes, size_t, minrank::sk_blob_bytes)

#undef MINRANK_SIZE_FN

minrank_status minrank_seed_bytes(const minrank_params* params, size_t* out) {
  if (params == nullptr || out == nullptr) return fail(MINRANK_E_INVALID_ARGUMENT, "NULL argument");
  *out = params->p.seed_bytes();
  return MINRANK_OK;
}

minrank_status minrank_random_seed(uint8_t* out, size_t len) {
  if (out == nullptr && len != 0) return fail(MINRANK_E_INVALID_ARGUMENT, "out is NULL");
  if (len > static_cast<size_t>(std::numeric_limits<int>::max())) {
    return fail(MINRANK_E_INVALID_ARGUMENT, "seed too long");
  }
  if (RAND_bytes(out, static_cast<int>(len)) != 1) {
    return fail(MINRANK_E_RANDOMNESS, "RAND_bytes failed");
  }
  return MINRANK_OK;
}

minrank_status minrank_keygen(const minrank_params* params, int variant, const uint8_t* seed,
                              size_t seed_len, minrank_keypair** out) {
  return guarded([&] {
    if (params == nullptr || out == nullptr || (seed == nullptr && seed_len != 0)) {
      return fail(MINRANK_E_INVALID_ARGUMENT, "NULL argument");
    }
    minrank::Variant v;
    if (minrank_status s = to_variant(variant, &v); s != MINRANK_OK) return s;
    if (seed_len != params->p.seed_bytes()) {
      return fail(MINRANK_E_INVALID_ARGUMENT,
                  "seed must be " + std::to_string(params->p.seed_bytes()) + " bytes");
    }
    const minrank::Seed root(std::vector<std::uint8_t>(seed, seed + seed_len));
    minrank::KeyPair kp = minrank::keygen(v, root, params->p);
    auto* h = new minrank_keypair{params->p, v, kp.pk, kp.sk, {}, {}, kp.attempts};
    h->pk_blob = minrank::serialize_pk(kp.pk, params->p);
    h->sk_blob = minrank::serialize_sk(kp.sk, params->p);
    *out = h;
    return MINRANK_OK;
  });
}

minrank_status minrank_keypair_load(const minrank_params* params, int variant, const uint8_t* pk,
                                    size_t pk_len, const uint8_t* sk, size_t sk_len,
                                    minrank_keypair** out) {
  return guarded([&] {
    if (params == nullptr || out == nullptr) return fail(MINRANK_E_INVALID_ARGUMENT, "NULL argument");
    minrank::Variant v;
    if (minrank_status s = to_variant(variant, &v); s != MINRANK_OK) return s;
    auto h = std::make_unique<minrank_keypair>(minrank_keypair{params->p, v, {}, {}, {}, {}, 0});
    if (pk != nullptr) {
      h->pk_blob.assign(pk, pk + pk_len);
      h->pk = minrank::parse_pk(h->pk_blob, params->p, v);
    }
    if (sk != nullptr) {
      h->sk_blob.assign(sk, sk + sk_len);
      h->sk = minrank::parse_sk(h->sk_blob, params->p, v);
    }
    *out = h.release();
    return MINRANK_OK;
  });
}

void minrank_keypair_free(minrank_keypair* kp) { delete kp; }

minrank_status minrank_keypair_export_pk(const minrank_keypair* kp, uint8_t* buf, size_t cap,
                                         size_t* written) {
  if (kp == nullptr || !kp->pk) return fail(MINRANK_E_INVALID_ARGUMENT, "no public key");
  return copy_out(kp->pk_blob, buf, cap, written);
}

minrank_status minrank_keypair_export_sk(const minrank_keypair* kp, uint8_t* buf, size_t cap,
                                         size_t* written) {
  if (kp == nullptr || !kp->sk) return fail(MINRANK_E_INVALID_ARGUMENT, "no secret key");
  return copy_out(kp->sk_blob, buf, cap, written);
}

unsigned minrank_keypair_attempts(const minrank_keypair* kp) {
  return kp == nullptr ? 0 : kp->attempts;
}

minrank_status minrank_keypair_verify(const minrank_keypair* kp, minrank_verify_result* out) {
  return guarded([&] {
    if (kp == nullptr || out == nullptr) return fail(MINRANK_E_INVALID_ARGUMENT, "NULL argument");
    *out = minrank_verify_result{};
    out->has_pk = kp->pk.has_value();
    out->has_sk = kp->sk.has_value();
    std::optional<minrank::MinRankInstance> from_pk;
    if (kp->pk) {
      from_pk = minrank::decompress_pk(*kp->pk, kp->p);
      out->canonical = minrank::is_canonical(*from_pk);
    }
    if (!kp->sk) return MINRANK_OK;
    try {
      auto [inst, wit] = minrank::decompress_sk(*kp->sk, kp->p);
      out->rank = static_cast<unsigned>(minrank::rank(wit.e));
      bool valid = out->rank == kp->p.r && inst.evaluate(wit.alpha) == wit.e;
      if (valid && wit.k) {
        const auto [el, er] = minrank::split_lr(wit.e, kp->p.r);
        valid = el == er * *wit.k;
      }
      out->witness_valid = valid;
      out->keys_match = from_pk.has_value() && *from_pk == inst;
      if (!from_pk) out->canonical = minrank::is_canonical(inst);
    } catch (const minrank::Error& e) {
      // A secret seed whose regenerated system is singular carries no witness.
      if (e.code() != minrank::ErrorCode::kInternalInconsistency) throw;
      g_last_error = e.what();
    }
    return MINRANK_OK;
  });
}

minrank_status minrank_decompress_pk(const minrank_params* params, int variant, const uint8_t* pk,
                                     size_t pk_len) {
  return guarded([&] {
    if (params == nullptr || pk == nullptr) return fail(MINRANK_E_INVALID_ARGUMENT, "NULL argument");
    minrank::Variant v;
    if (minrank_status s = to_variant(variant, &v); s != MINRANK_OK) return s;
    const auto key = minrank::parse_pk({pk, pk_len}, params->p, v);
    (void)minrank::decompress_pk(key, params->p);
    return MINRANK_OK;
  });
}

minrank_status minrank_decompress_sk(const minrank_params* params, int variant, const uint8_t* sk,
                                     size_t sk_len) {
  return guarded([&] {
    if (params == nullptr || sk == nullptr) return fail(MINRANK_E_INVALID_ARGUMENT, "NULL argument");
    minrank::Variant v;
    if (minrank_status s = to_variant(variant, &v); s != MINRANK_OK) return s;
    const auto key = minrank::parse_sk({sk, sk_len}, params->p, v);
    (void)minrank::decompress_sk(key, params->p);
    return MINRANK_OK;
  });
}

const char* minrank_report_csv_header(void) {
  static const std::string header = minrank::TrialReport::csv_header();
  return header.c_str();
}

size_t minrank_stats_kind_count(void) { return std::size(kStatsKinds); }

const char* minrank_stats_kind_name(size_t index) {
  return index < std::size(kStatsKinds) ? kStatsKinds[index] : nullptr;
}

minrank_status minrank_stats_run(const char* kind, const minrank_stats_config* cfg,
                                 uint64_t trials, const uint8_t* seed, size_t seed_len,
                                 minrank_report_fn fn, void* user, int* all_pass) {
  return guarded([&] {
    if (kind == nullptr || seed == nullptr || seed_len == 0) {
      return fail(MINRANK_E_INVALID_ARGUMENT, "kind and seed are required");
    }
    const minrank::Seed master(std::vector<std::uint8_t>(seed, seed + seed_len));
    Emitter em{fn, user};
    const std::string k(kind);

    if (k == "distribution") {
      const minrank::Params p = instance_params(cfg);
      const std::uint64_t n = trials == 0 ? 10000 : trials;
      const auto projections = minrank::standard_projections(p);
      em.emit(minrank::distribution_projection_test(minrank::reduction_generator(p),
                                                    minrank::keygen3_generator(p), projections, n,
                                                    master),
              0);
      // Power check: a generator with alpha forced to zero must be caught.
      minrank::TrialReport control = minrank::distribution_projection_test(
          minrank::biased_generator(p), minrank::keygen3_generator(p), projections, n, master);
      bool detected = false;
      for (const auto& d : control.details) {
        detected = detected || (d.name.ends_with(".alpha1") && !d.pass);
      }
      control.name = "BiasedControl(detected)";
      for (auto& d : control.details) d.name.replace(0, d.name.find('.'), "BiasedControl");
      control.pass = detected;
      em.emit(control, 0);
    } else if (k == "oracle") {
      const minrank::Params p = instance_params(cfg);
      const std::uint64_t n = trials == 0 ? 100 : trials;
      for (int v = 1; v <= 3; ++v) {
        const auto res = minrank::oracle_check(p, minrank::variant_from_int(v), n, master);
        const std::string base = "Oracle(" + p.name + ",v" + std::to_string(v) + ")";
        em.emit(minrank::bound_report(base + ".planted_found", minrank::ClaimKind::kExact,
                                      res.instances, res.planted_found, 1),
                0);
        em.record(base + ".unique", res.instances, res.unique);
      }
    } else {
      const auto lk = minrank::lemma_kind_from_name(k);
      if (!lk) return fail(MINRANK_E_INVALID_KIND, "unknown statistics kind '" + k + "'");
      em.emit(minrank::estimate_lemma(*lk, fill_config(*lk, cfg), trials == 0 ? 10000 : trials,
                                      master),
              0);
    }
    if (all_pass != nullptr) *all_pass = em.all_pass ? 1 : 0;
    return MINRANK_OK;
  });
}

}  // extern "C"
