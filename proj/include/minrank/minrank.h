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


#ifndef MINRANK_MINRANK_H_
#define MINRANK_MINRANK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MINRANK_BUILDING)
#define MINRANK_API __declspec(dllexport)
#else
#define MINRANK_API __declspec(dllimport)
#endif
#else
#define MINRANK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum minrank_status {
  MINRANK_OK = 0,
  MINRANK_E_INVALID_ARGUMENT = 1,
  MINRANK_E_INVALID_PARAMS = 2,
  MINRANK_E_MALFORMED_KEY = 3,
  MINRANK_E_RETRY_LIMIT = 4,
  MINRANK_E_BUFFER_TOO_SMALL = 5,
  MINRANK_E_RANDOMNESS = 6,
  MINRANK_E_INVALID_KIND = 7,
  MINRANK_E_TOO_LARGE = 8,
  MINRANK_E_INSUFFICIENT_SAMPLES = 9,
  MINRANK_E_NO_MEMORY = 10,
  MINRANK_E_INTERNAL = 11,
} minrank_status;

typedef struct minrank_params minrank_params;
typedef struct minrank_keypair minrank_keypair;

MINRANK_API const char* minrank_version(void);
MINRANK_API const char* minrank_status_name(minrank_status status);
// Message of the last failing call on this thread ("" if none).
MINRANK_API const char* minrank_last_error(void);

// ---------------------------------------------------------------------------
// Parameter sets

MINRANK_API size_t minrank_registry_count(void);
// NULL when index is out of range.
MINRANK_API const char* minrank_registry_name(size_t index);

MINRANK_API minrank_status minrank_params_by_name(const char* name, minrank_params** out);
MINRANK_API minrank_status minrank_params_create(unsigned q, unsigned m, unsigned n, unsigned k,
                                                 unsigned r, unsigned lambda,
                                                 minrank_params** out);
MINRANK_API void minrank_params_free(minrank_params* params);

typedef struct minrank_params_info {
  const char* name;  // owned by the handle; "" for ad hoc sets
  unsigned q, m, n, k, r, lambda;
} minrank_params_info;
MINRANK_API minrank_status minrank_params_info_get(const minrank_params* params,
                                                   minrank_params_info* out);

// Sizes for variant 1..3. Bits are the information content; bytes are the
// blob lengths written by the export functions.
MINRANK_API minrank_status minrank_pk_size_bits(const minrank_params* params, int variant,
                                                uint64_t* out);
MINRANK_API minrank_status minrank_sk_size_bits(const minrank_params* params, int variant,
                                                uint64_t* out);
MINRANK_API minrank_status minrank_pk_bytes(const minrank_params* params, int variant,
                                            size_t* out);
MINRANK_API minrank_status minrank_sk_bytes(const minrank_params* params, int variant,
                                            size_t* out);
// Length of the root seed keygen expects (lambda / 8).
MINRANK_API minrank_status minrank_seed_bytes(const minrank_params* params, size_t* out);

// ---------------------------------------------------------------------------
// Keys

MINRANK_API minrank_status minrank_random_seed(uint8_t* out, size_t len);

MINRANK_API minrank_status minrank_keygen(const minrank_params* params, int variant,
                                          const uint8_t* seed, size_t seed_len,
                                          minrank_keypair** out);
// Either blob may be NULL; the verify result then reports it as absent.
MINRANK_API minrank_status minrank_keypair_load(const minrank_params* params, int variant,
                                                const uint8_t* pk, size_t pk_len,
                                                const uint8_t* sk, size_t sk_len,
                                                minrank_keypair** out);
MINRANK_API void minrank_keypair_free(minrank_keypair* kp);

// Copy a blob into `buf`. With buf == NULL or a short buffer, `*written` gets
// the required size and MINRANK_E_BUFFER_TOO_SMALL is returned (NULL buf and
// cap 0 is the size query and returns MINRANK_OK).
MINRANK_API minrank_status minrank_keypair_export_pk(const minrank_keypair* kp, uint8_t* buf,
                                                     size_t cap, size_t* written);
MINRANK_API minrank_status minrank_keypair_export_sk(const minrank_keypair* kp, uint8_t* buf,
                                                     size_t cap, size_t* written);
// Generation iterations used (KeyGen3 retries; 1 otherwise, 0 for loaded keys).
MINRANK_API unsigned minrank_keypair_attempts(const minrank_keypair* kp);

typedef struct minrank_verify_result {
  int has_pk;
  int has_sk;
  int keys_match;     // instance from pk equals instance from sk
  int witness_valid;  // rank(E) = r and E = M_0 + sum alpha_i M_i
  unsigned rank;      // rank of E
  int canonical;      // instance in canonical form
} minrank_verify_result;
MINRANK_API minrank_status minrank_keypair_verify(const minrank_keypair* kp,
                                                  minrank_verify_result* out);

// Decompress a blob and discard the result (benchmarks, validation).
MINRANK_API minrank_status minrank_decompress_pk(const minrank_params* params, int variant,
                                                 const uint8_t* pk, size_t pk_len);
MINRANK_API minrank_status minrank_decompress_sk(const minrank_params* params, int variant,
                                                 const uint8_t* sk, size_t sk_len);

// ---------------------------------------------------------------------------
// Statistics

// Zero fields take the kind's toy default for field size q.
typedef struct minrank_stats_config {
  unsigned q;
  unsigned s, t;
  unsigned m, n, k, r;
} minrank_stats_config;

typedef struct minrank_report {
  int depth;  // 0 for a headline report, 1 for its details
  const char* name;
  const char* claim;  // "lower", "upper", "chi2", "exact", "record"
  uint64_t trials;
  uint64_t successes;
  double estimate;
  double bound;
  double sigma;
  double chi2;
  unsigned dof;
  double p_value;
  int pass;
  const char* text;     // one human-readable line
  const char* csv_row;  // one CSV row, no newline
} minrank_report;

typedef void (*minrank_report_fn)(const minrank_report* report, void* user);

MINRANK_API const char* minrank_report_csv_header(void);
// Kinds: fullrank, invertible, eincale, kuniform, canonical, ix, product,
// rsuccess, distribution, oracle.
MINRANK_API size_t minrank_stats_kind_count(void);
MINRANK_API const char* minrank_stats_kind_name(size_t index);

// Runs one suite and calls `fn` for every report in order. `*all_pass` is
// set to 1 iff every headline verdict passed. Deterministic in (seed, trials).
MINRANK_API minrank_status minrank_stats_run(const char* kind, const minrank_stats_config* cfg,
                                             uint64_t trials, const uint8_t* seed,
                                             size_t seed_len, minrank_report_fn fn, void* user,
                                             int* all_pass);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // MINRANK_MINRANK_H_
