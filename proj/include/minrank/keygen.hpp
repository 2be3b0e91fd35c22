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

#ifndef MINRANK_KEYGEN_HPP_
#define MINRANK_KEYGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minrank/matrix.hpp"
#include "minrank/params.hpp"
#include "minrank/prg.hpp"

namespace minrank {

// (M_0, M_1, ..., M_k): matrices[0] is M_0.
struct MinRankInstance {
  std::vector<Matrix> matrices;

  std::size_t k() const noexcept { return matrices.empty() ? 0 : matrices.size() - 1; }
  const Matrix& m0() const { return matrices.front(); }
  // E = M_0 + sum alpha_i M_i
  Matrix evaluate(std::span<const Fe> alpha) const;

  bool operator==(const MinRankInstance&) const = default;
};

struct Witness {
  std::vector<Fe> alpha;
  Matrix e;
  std::optional<Matrix> k;  // E^L = E^R K, variant 3 only
};

enum class Variant : int { kKeyGen1 = 1, kKeyGen2 = 2, kKeyGen3 = 3 };

// Throws Error(kInvalidParams) outside 1..3.
Variant variant_from_int(int v);

struct PublicKey {
  Variant variant = Variant::kKeyGen1;
  Seed seed_pk;
  // v1: <M_0>; v2: <M_0>_{k+1..mn}; v3: <M_0^L>_{k+1..m(n-r)}
  std::vector<Fe> payload;

  bool operator==(const PublicKey&) const = default;
};

struct SecretKey {
  Variant variant = Variant::kKeyGen1;
  Seed seed_pk;  // variant 3 only
  Seed seed_sk;  // v1/v2: the root seed

  bool operator==(const SecretKey&) const = default;
};

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
  unsigned attempts = 1;  // KeyGen3 iterations, including the successful one
};

inline constexpr unsigned kKeyGen3RetryLimit = 1000;

// Courtois: uniform M_1..M_k from seed_pk, M_0 = E - sum alpha_i M_i stored
// in full.
KeyPair keygen1(const Seed& root, const Params& p);
// M_1..M_k in C_1 and alpha_i = <E>_i, so M_0 lies in C_0 and only its last
// mn - k vectorized entries are stored.
KeyPair keygen2(const Seed& root, const Params& p);
// Canonical-form instance with M_0^L determined by (M_0^R, M_1..M_k, K); only
// the last m(n - r) - k entries of <M_0^L> are stored. Throws
// Error(kRetryLimitExceeded) after kKeyGen3RetryLimit failed iterations.
KeyPair keygen3(const Seed& root, const Params& p);
KeyPair keygen(Variant v, const Seed& root, const Params& p);

// Throws Error(kMalformedKey) on a payload length or element mismatch.
MinRankInstance decompress_pk(const PublicKey& pk, const Params& p);
// Throws Error(kMalformedKey), or Error(kInternalInconsistency) when a
// variant-3 key regenerates a singular system or rank-deficient E^R.
std::pair<MinRankInstance, Witness> decompress_sk(const SecretKey& sk, const Params& p);

std::uint64_t pk_size_bits(const Params& p, Variant v);
std::uint64_t sk_size_bits(const Params& p, Variant v);
std::size_t pk_payload_elements(const Params& p, Variant v);

// Blob formats: pk = seed_pk || packed payload; sk = seed_sk (v1/v2) or
// seed_pk || seed_sk (v3). Parameters and variant are out-of-band.
std::vector<std::uint8_t> serialize_pk(const PublicKey& pk, const Params& p);
std::vector<std::uint8_t> serialize_sk(const SecretKey& sk, const Params& p);
PublicKey parse_pk(std::span<const std::uint8_t> blob, const Params& p, Variant v);
SecretKey parse_sk(std::span<const std::uint8_t> blob, const Params& p, Variant v);
std::size_t pk_blob_bytes(const Params& p, Variant v);
std::size_t sk_blob_bytes(const Params& p, Variant v);

// The k x k system (I - X) alpha = rhs with X[i][j] = <M_j^R K>_i and
// rhs_i = <M_0^R K>_i (1 <= i, j <= k).
struct StarSystem {
  Matrix lhs;
  std::vector<Fe> rhs;
};
// `mi_right` holds M_1^R..M_k^R (m x r each); `k_mat` is r x (n - r).
StarSystem build_star_system(const Matrix& m0_right, std::span<const Matrix> mi_right,
                             const Matrix& k_mat);

// Patterned member of C_1: <M_i>_j = delta_ij for j <= k, the remaining
// mn - k entries drawn from `prg` in vectorized order. `index` is 1-based.
Matrix sample_c1_member(PrgStream& prg, const Params& p, std::size_t index);

}  // namespace minrank

#endif  // MINRANK_KEYGEN_HPP_
