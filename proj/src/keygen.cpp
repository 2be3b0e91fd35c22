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

#include "minrank/keygen.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "minrank/error.hpp"

namespace minrank {
namespace {

constexpr char kRootTag[] = "ROOT";
constexpr char kPkTag[] = "PK";
constexpr char kSkTag[] = "SK";

struct Generated {
  MinRankInstance instance;
  Witness witness;
  Seed seed_pk;
};

void require_seed(const Seed& s, const Params& p, const char* what) {
  if (s.bytes().size() != p.seed_bytes()) {
    throw Error(ErrorCode::kInvalidParams, std::string(what) + " must be " +
                                               std::to_string(p.seed_bytes()) + " bytes");
  }
}

std::vector<Matrix> expand_uniform_mi(const Seed& seed_pk, const Params& p) {
  PrgStream ps(seed_pk, kPkTag);
  std::vector<Matrix> out;
  out.reserve(p.k);
  for (unsigned i = 0; i < p.k; ++i) out.push_back(ps.next_matrix(*p.field, p.m, p.n));
  return out;
}

// M_1..M_k in C_1.
std::vector<Matrix> expand_c1_mi(PrgStream& ps, const Params& p) {
  std::vector<Matrix> out;
  out.reserve(p.k);
  for (unsigned i = 1; i <= p.k; ++i) out.push_back(sample_c1_member(ps, p, i));
  return out;
}

MinRankInstance assemble(Matrix m0, std::vector<Matrix> mi) {
  MinRankInstance inst;
  inst.matrices.reserve(mi.size() + 1);
  inst.matrices.push_back(std::move(m0));
  for (auto& m : mi) inst.matrices.push_back(std::move(m));
  return inst;
}

Matrix m0_from(const Matrix& e, std::span<const Fe> alpha, std::span<const Matrix> mi) {
  Matrix m0 = e;
  for (std::size_t i = 0; i < mi.size(); ++i) add_scaled(m0, e.field().neg(alpha[i]), mi[i]);
  return m0;
}

Generated generate_v1(const Seed& root, const Params& p) {
  PrgStream rs(root, kRootTag);
  Seed seed_pk = rs.next_seed(p.lambda);
  std::vector<Fe> alpha(p.k);
  for (auto& a : alpha) a = rs.next_fe(*p.field);
  Matrix e = sample_rank_r(rs, *p.field, p.m, p.n, p.r).e;
  std::vector<Matrix> mi = expand_uniform_mi(seed_pk, p);
  Matrix m0 = m0_from(e, alpha, mi);
  return {assemble(std::move(m0), std::move(mi)), Witness{std::move(alpha), std::move(e), {}},
          std::move(seed_pk)};
}

Generated generate_v2(const Seed& root, const Params& p) {
  PrgStream rs(root, kRootTag);
  Seed seed_pk = rs.next_seed(p.lambda);
  Matrix e = sample_rank_r(rs, *p.field, p.m, p.n, p.r).e;
  std::vector<Fe> alpha(p.k);
  for (unsigned i = 0; i < p.k; ++i) alpha[i] = e.vec_at(i);
  PrgStream ps(seed_pk, kPkTag);
  std::vector<Matrix> mi = expand_c1_mi(ps, p);
  Matrix m0 = m0_from(e, alpha, mi);
  return {assemble(std::move(m0), std::move(mi)), Witness{std::move(alpha), std::move(e), {}},
          std::move(seed_pk)};
}

// One KeyGen3 iteration from explicit seeds; nullopt when the system is
// singular or E^R is rank deficient.
std::optional<Generated> derive_v3(const Seed& seed_pk, const Seed& seed_sk, const Params& p) {
  const Field& f = *p.field;
  const std::size_t left_cols = p.n - p.r;

  PrgStream ps(seed_pk, kPkTag);
  std::vector<Matrix> mi = expand_c1_mi(ps, p);
  Matrix m0_right = ps.next_matrix(f, p.m, p.r);

  PrgStream ss(seed_sk, kSkTag);
  Matrix k_mat = ss.next_matrix(f, p.r, left_cols);

  std::vector<Matrix> mi_right;
  mi_right.reserve(p.k);
  for (const auto& m : mi) mi_right.push_back(m.columns(left_cols, p.r));

  const StarSystem star = build_star_system(m0_right, mi_right, k_mat);
  auto alpha = solve_linear(star.lhs, star.rhs);
  if (!alpha) return std::nullopt;

  Matrix e_right = m0_right;
  for (unsigned j = 0; j < p.k; ++j) add_scaled(e_right, (*alpha)[j], mi_right[j]);
  if (rank_leakfree(e_right, ss) < p.r) return std::nullopt;

  const Matrix e_left = e_right * k_mat;
  Matrix m0_left = e_left;
  for (unsigned j = 0; j < p.k; ++j) {
    add_scaled(m0_left, f.neg((*alpha)[j]), mi[j].columns(0, left_cols));
  }
  for (unsigned i = 0; i < p.k; ++i) {
    if (m0_left.vec_at(i) != 0) {
      throw Error(ErrorCode::kInternalInconsistency, "M_0^L is not in C_0 after solving");
    }
  }

  Generated g{assemble(join_lr(m0_left, m0_right), std::move(mi)),
              Witness{std::move(*alpha), join_lr(e_left, e_right), std::move(k_mat)}, seed_pk};
  return g;
}

std::uint64_t payload_bits(const Params& p, std::size_t count) {
  if ((p.q & (p.q - 1)) == 0) {
    return count * static_cast<std::uint64_t>(p.field->sample_bits());
  }
  if (count == 0) return 0;
  // ceil(log2 q^count) for q odd: q^count is never a power of two
  boost::multiprecision::cpp_int v = 1;
  for (std::size_t i = 0; i < count; ++i) v *= p.q;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(v)) + 1;
}

}  // namespace

Matrix MinRankInstance::evaluate(std::span<const Fe> alpha) const {
  if (alpha.size() != k()) throw Error(ErrorCode::kDimensionMismatch, "alpha length is not k");
  Matrix e = matrices.front();
  for (std::size_t i = 0; i < alpha.size(); ++i) add_scaled(e, alpha[i], matrices[i + 1]);
  return e;
}

Variant variant_from_int(int v) {
  if (v < 1 || v > 3) throw Error(ErrorCode::kInvalidParams, "variant must be 1, 2 or 3");
  return static_cast<Variant>(v);
}

Matrix sample_c1_member(PrgStream& prg, const Params& p, std::size_t index) {
  Matrix out(*p.field, p.m, p.n);
  for (std::size_t j = 0; j < p.mn(); ++j) {
    out.vec_at(j) = j < p.k ? static_cast<Fe>(j + 1 == index ? 1 : 0) : prg.next_fe(*p.field);
  }
  return out;
}

StarSystem build_star_system(const Matrix& m0_right, std::span<const Matrix> mi_right,
                             const Matrix& k_mat) {
  const Field& f = m0_right.field();
  const std::size_t k = mi_right.size();
  StarSystem sys{Matrix(f, k, k), std::vector<Fe>(k)};
  const Matrix rhs = m0_right * k_mat;
  if (rhs.size() < k) {
    throw Error(ErrorCode::kDimensionMismatch, "k exceeds m(n - r)");
  }
  for (std::size_t i = 0; i < k; ++i) sys.rhs[i] = rhs.vec_at(i);
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix prod = mi_right[j] * k_mat;
    for (std::size_t i = 0; i < k; ++i) {
      sys.lhs(i, j) = f.sub(static_cast<Fe>(i == j ? 1 : 0), prod.vec_at(i));
    }
  }
  return sys;
}

KeyPair keygen1(const Seed& root, const Params& p) {
  require_seed(root, p, "root seed");
  Generated g = generate_v1(root, p);
  return {PublicKey{Variant::kKeyGen1, std::move(g.seed_pk), g.instance.m0().vectorize()},
          SecretKey{Variant::kKeyGen1, Seed(), root}, 1};
}

KeyPair keygen2(const Seed& root, const Params& p) {
  require_seed(root, p, "root seed");
  Generated g = generate_v2(root, p);
  const auto v = g.instance.m0().vectorize();
  return {PublicKey{Variant::kKeyGen2, std::move(g.seed_pk),
                    std::vector<Fe>(v.begin() + p.k, v.end())},
          SecretKey{Variant::kKeyGen2, Seed(), root}, 1};
}

KeyPair keygen3(const Seed& root, const Params& p) {
  require_seed(root, p, "root seed");
  PrgStream rs(root, kRootTag);
  for (unsigned attempt = 1; attempt <= kKeyGen3RetryLimit; ++attempt) {
    Seed seed_pk = rs.next_seed(p.lambda);
    Seed seed_sk = rs.next_seed(p.lambda);
    auto g = derive_v3(seed_pk, seed_sk, p);
    if (!g) continue;
    const auto v = g->instance.m0().columns(0, p.n - p.r).vectorize();
    return {PublicKey{Variant::kKeyGen3, seed_pk, std::vector<Fe>(v.begin() + p.k, v.end())},
            SecretKey{Variant::kKeyGen3, seed_pk, std::move(seed_sk)}, attempt};
  }
  throw Error(ErrorCode::kRetryLimitExceeded,
              "KeyGen3 failed " + std::to_string(kKeyGen3RetryLimit) + " times for " + p.name);
}

KeyPair keygen(Variant v, const Seed& root, const Params& p) {
  switch (v) {
    case Variant::kKeyGen1: return keygen1(root, p);
    case Variant::kKeyGen2: return keygen2(root, p);
    case Variant::kKeyGen3: return keygen3(root, p);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown variant");
}

std::size_t pk_payload_elements(const Params& p, Variant v) {
  switch (v) {
    case Variant::kKeyGen1: return p.mn();
    case Variant::kKeyGen2: return p.mn() - p.k;
    case Variant::kKeyGen3: return p.left_size() - p.k;
  }
  return 0;
}

std::uint64_t pk_size_bits(const Params& p, Variant v) {
  return p.lambda + payload_bits(p, pk_payload_elements(p, v));
}

std::uint64_t sk_size_bits(const Params& p, Variant v) {
  return v == Variant::kKeyGen3 ? 2ULL * p.lambda : p.lambda;
}

MinRankInstance decompress_pk(const PublicKey& pk, const Params& p) {
  const Field& f = *p.field;
  if (pk.seed_pk.bytes().size() != p.seed_bytes()) {
    throw Error(ErrorCode::kMalformedKey, "seed_pk length mismatch");
  }
  if (pk.payload.size() != pk_payload_elements(p, pk.variant)) {
    throw Error(ErrorCode::kMalformedKey, "payload has " + std::to_string(pk.payload.size()) +
                                              " elements, expected " +
                                              std::to_string(pk_payload_elements(p, pk.variant)));
  }
  for (auto v : pk.payload) {
    if (!f.valid(v)) throw Error(ErrorCode::kMalformedKey, "payload element out of range");
  }
  std::vector<Fe> prefixed(p.k, 0);
  prefixed.insert(prefixed.end(), pk.payload.begin(), pk.payload.end());
  switch (pk.variant) {
    case Variant::kKeyGen1:
      return assemble(Matrix::devectorize(f, pk.payload, p.m, p.n), expand_uniform_mi(pk.seed_pk, p));
    case Variant::kKeyGen2: {
      PrgStream ps(pk.seed_pk, kPkTag);
      auto mi = expand_c1_mi(ps, p);
      return assemble(Matrix::devectorize(f, prefixed, p.m, p.n), std::move(mi));
    }
    case Variant::kKeyGen3: {
      PrgStream ps(pk.seed_pk, kPkTag);
      auto mi = expand_c1_mi(ps, p);
      Matrix m0_right = ps.next_matrix(f, p.m, p.r);
      Matrix m0_left = Matrix::devectorize(f, prefixed, p.m, p.n - p.r);
      return assemble(join_lr(m0_left, m0_right), std::move(mi));
    }
  }
  throw Error(ErrorCode::kMalformedKey, "unknown variant");
}

std::pair<MinRankInstance, Witness> decompress_sk(const SecretKey& sk, const Params& p) {
  if (sk.seed_sk.bytes().size() != p.seed_bytes()) {
    throw Error(ErrorCode::kMalformedKey, "seed_sk length mismatch");
  }
  switch (sk.variant) {
    case Variant::kKeyGen1: {
      Generated g = generate_v1(sk.seed_sk, p);
      return {std::move(g.instance), std::move(g.witness)};
    }
    case Variant::kKeyGen2: {
      Generated g = generate_v2(sk.seed_sk, p);
      return {std::move(g.instance), std::move(g.witness)};
    }
    case Variant::kKeyGen3: {
      if (sk.seed_pk.bytes().size() != p.seed_bytes()) {
        throw Error(ErrorCode::kMalformedKey, "seed_pk length mismatch");
      }
      auto g = derive_v3(sk.seed_pk, sk.seed_sk, p);
      if (!g) {
        throw Error(ErrorCode::kInternalInconsistency,
                    "secret key regenerates a singular system or rank-deficient E^R");
      }
      return {std::move(g->instance), std::move(g->witness)};
    }
  }
  throw Error(ErrorCode::kMalformedKey, "unknown variant");
}

std::size_t pk_blob_bytes(const Params& p, Variant v) {
  return p.seed_bytes() + packed_size(*p.field, pk_payload_elements(p, v));
}

std::size_t sk_blob_bytes(const Params& p, Variant v) {
  return v == Variant::kKeyGen3 ? 2 * p.seed_bytes() : p.seed_bytes();
}

std::vector<std::uint8_t> serialize_pk(const PublicKey& pk, const Params& p) {
  if (pk.seed_pk.bytes().size() != p.seed_bytes() ||
      pk.payload.size() != pk_payload_elements(p, pk.variant)) {
    throw Error(ErrorCode::kMalformedKey, "public key does not match parameters");
  }
  std::vector<std::uint8_t> out(pk.seed_pk.bytes().begin(), pk.seed_pk.bytes().end());
  const auto packed = pack_elements(*p.field, pk.payload);
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

std::vector<std::uint8_t> serialize_sk(const SecretKey& sk, const Params& p) {
  std::vector<std::uint8_t> out;
  if (sk.variant == Variant::kKeyGen3) {
    if (sk.seed_pk.bytes().size() != p.seed_bytes()) {
      throw Error(ErrorCode::kMalformedKey, "seed_pk length mismatch");
    }
    out.assign(sk.seed_pk.bytes().begin(), sk.seed_pk.bytes().end());
  }
  if (sk.seed_sk.bytes().size() != p.seed_bytes()) {
    throw Error(ErrorCode::kMalformedKey, "seed_sk length mismatch");
  }
  out.insert(out.end(), sk.seed_sk.bytes().begin(), sk.seed_sk.bytes().end());
  return out;
}

PublicKey parse_pk(std::span<const std::uint8_t> blob, const Params& p, Variant v) {
  if (blob.size() != pk_blob_bytes(p, v)) {
    throw Error(ErrorCode::kMalformedKey, "public key blob is " + std::to_string(blob.size()) +
                                              " bytes, expected " +
                                              std::to_string(pk_blob_bytes(p, v)));
  }
  const auto seed = blob.first(p.seed_bytes());
  PublicKey pk;
  pk.variant = v;
  pk.seed_pk = Seed(std::vector<std::uint8_t>(seed.begin(), seed.end()));
  pk.payload = unpack_elements(*p.field, blob.subspan(p.seed_bytes()), pk_payload_elements(p, v));
  return pk;
}

SecretKey parse_sk(std::span<const std::uint8_t> blob, const Params& p, Variant v) {
  if (blob.size() != sk_blob_bytes(p, v)) {
    throw Error(ErrorCode::kMalformedKey, "secret key blob is " + std::to_string(blob.size()) +
                                              " bytes, expected " +
                                              std::to_string(sk_blob_bytes(p, v)));
  }
  SecretKey sk;
  sk.variant = v;
  auto rest = blob;
  if (v == Variant::kKeyGen3) {
    sk.seed_pk = Seed(std::vector<std::uint8_t>(rest.begin(), rest.begin() + p.seed_bytes()));
    rest = rest.subspan(p.seed_bytes());
  }
  sk.seed_sk = Seed(std::vector<std::uint8_t>(rest.begin(), rest.end()));
  return sk;
}

}  // namespace minrank
