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

#include "minrank/gf.hpp"

#include <memory>
#include <mutex>
#include <string>

#include "minrank/error.hpp"

namespace minrank {
namespace {

// Default moduli for GF(2^e), bitmask form. x^4 + x + 1 for GF(16).
constexpr unsigned kDefaultBinaryModulus[9] = {
    0, 0, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11B,
};

unsigned gf2_mulmod(unsigned a, unsigned b, unsigned modulus, unsigned e) {
  unsigned acc = 0;
  for (unsigned i = 0; i < e; ++i) {
    if ((b >> i) & 1U) acc ^= a << i;
  }
  for (int bit = static_cast<int>(2 * e) - 2; bit >= static_cast<int>(e); --bit) {
    if ((acc >> bit) & 1U) acc ^= modulus << (bit - static_cast<int>(e));
  }
  return acc;
}

int poly_degree(unsigned p) {
  int d = -1;
  while (p != 0) {
    ++d;
    p >>= 1;
  }
  return d;
}

unsigned gf2_polymod(unsigned a, unsigned b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<std::unique_ptr<Field>>& registry() {
  static std::vector<std::unique_ptr<Field>> fields;
  return fields;
}

const Field& intern(unsigned p, unsigned e, unsigned modulus) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  for (const auto& f : registry()) {
    if (f->characteristic() == p && f->degree() == e && f->modulus_bits() == modulus) return *f;
  }
  registry().push_back(std::make_unique<Field>(p, e, modulus));
  return *registry().back();
}

}  // namespace

bool is_prime(unsigned v) noexcept {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

bool is_irreducible_gf2(unsigned poly) noexcept {
  const int deg = poly_degree(poly);
  if (deg < 1) return false;
  // Any reducible polynomial has a factor of degree <= deg / 2.
  for (unsigned d = 2; poly_degree(d) <= deg / 2; ++d) {
    if (gf2_polymod(poly, d) == 0) return false;
  }
  return true;
}

Field::Field(unsigned p, unsigned e, unsigned modulus)
    : p_(p), e_(e), q_(1), modulus_(modulus), sample_bits_(0) {
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  while ((1U << sample_bits_) < q_) ++sample_bits_;

  if (q_ > 256) {
    return;  // prime field, arithmetic by reduction
  }

  mul_table_.assign(std::size_t{q_} * q_, 0);
  inv_table_.assign(q_, 0);
  if (e_ == 1) {
    for (unsigned a = 0; a < q_; ++a) {
      for (unsigned b = 0; b < q_; ++b) mul_table_[a * q_ + b] = static_cast<Fe>((a * b) % p_);
    }
  } else {
    // log/antilog tables over a primitive element, then the full product table
    std::vector<unsigned> exp_table(q_ - 1);
    std::vector<unsigned> log_table(q_, 0);
    for (unsigned g = 2; g < q_; ++g) {
      unsigned x = 1;
      unsigned order = 0;
      do {
        exp_table[order] = x;
        x = gf2_mulmod(x, g, modulus_, e_);
        ++order;
      } while (x != 1 && order < q_ - 1);
      if (x == 1 && order == q_ - 1) break;
    }
    for (unsigned i = 0; i < q_ - 1; ++i) log_table[exp_table[i]] = i;
    for (unsigned a = 1; a < q_; ++a) {
      for (unsigned b = 1; b < q_; ++b) {
        mul_table_[a * q_ + b] =
            static_cast<Fe>(exp_table[(log_table[a] + log_table[b]) % (q_ - 1)]);
      }
    }
  }
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_table_[a * q_ + b] == 1) {
        inv_table_[a] = static_cast<Fe>(b);
        break;
      }
    }
  }
}

const Field& Field::get(unsigned p, unsigned e) {
  if (e == 1) {
    if (!is_prime(p) || p >= (1U << 16)) {
      throw Error(ErrorCode::kInvalidField, "characteristic " + std::to_string(p) +
                                                " is not a prime below 2^16");
    }
    return intern(p, 1, 0);
  }
  if (p != 2 || e == 0 || e > 8) {
    throw Error(ErrorCode::kInvalidField, "only GF(p) and GF(2^e) with e <= 8 are supported");
  }
  return intern(2, e, kDefaultBinaryModulus[e]);
}

const Field& Field::get(unsigned p, unsigned e, std::span<const unsigned> modulus) {
  if (e == 1) return get(p, 1);
  if (p != 2 || e == 0 || e > 8) {
    throw Error(ErrorCode::kInvalidField, "only GF(p) and GF(2^e) with e <= 8 are supported");
  }
  if (modulus.size() != e + 1 || modulus[e] != 1) {
    throw Error(ErrorCode::kInvalidField, "modulus must be monic of degree e");
  }
  unsigned bits = 0;
  for (std::size_t i = 0; i < modulus.size(); ++i) {
    if (modulus[i] > 1) throw Error(ErrorCode::kInvalidField, "modulus coefficient not in GF(2)");
    bits |= modulus[i] << i;
  }
  if (!is_irreducible_gf2(bits)) {
    throw Error(ErrorCode::kInvalidField, "modulus is reducible");
  }
  return intern(2, e, bits);
}

const Field& Field::for_order(unsigned order) {
  if (order >= 2 && (order & (order - 1)) == 0) {
    unsigned e = 0;
    while ((1U << e) < order) ++e;
    return e == 1 ? get(2, 1) : get(2, e);
  }
  return get(order, 1);
}

Fe Field::inv(Fe a) const {
  if (a == 0) throw Error(ErrorCode::kZeroInverse, "inverse of zero");
  return inv_or_zero(a);
}

Fe Field::inv_or_zero(Fe a) const noexcept {
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);  // Fermat; pow(0, .) = 0
}

Fe Field::pow(Fe a, std::uint64_t exp) const noexcept {
  Fe result = 1;
  Fe base = a;
  while (exp != 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

void Field::axpy(std::span<Fe> dst, Fe c, std::span<const Fe> src) const noexcept {
  const std::size_t n = dst.size();
  if (const Fe* row = mul_row(c)) {
    if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i) dst[i] ^= row[src[i]];
    } else {
      for (std::size_t i = 0; i < n; ++i) dst[i] = add(dst[i], row[src[i]]);
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) dst[i] = add(dst[i], mul(c, src[i]));
}

void Field::axmy(std::span<Fe> dst, Fe c, std::span<const Fe> src) const noexcept {
  axpy(dst, neg(c), src);
}

void Field::scale(std::span<Fe> dst, Fe c) const noexcept {
  if (const Fe* row = mul_row(c)) {
    for (auto& v : dst) v = row[v];
    return;
  }
  for (auto& v : dst) v = mul(c, v);
}

std::size_t packed_size(const Field& f, std::size_t count) noexcept {
  if (f.order() <= 16) return (count + 1) / 2;
  if (f.order() <= 256) return count;
  return 2 * count;
}

std::vector<std::uint8_t> pack_elements(const Field& f, std::span<const Fe> elems) {
  std::vector<std::uint8_t> out(packed_size(f, elems.size()), 0);
  if (f.order() <= 16) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      out[i / 2] |= static_cast<std::uint8_t>((elems[i] & 0xF) << (4 * (i % 2)));
    }
  } else if (f.order() <= 256) {
    for (std::size_t i = 0; i < elems.size(); ++i) out[i] = static_cast<std::uint8_t>(elems[i]);
  } else {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      out[2 * i] = static_cast<std::uint8_t>(elems[i] & 0xFF);
      out[2 * i + 1] = static_cast<std::uint8_t>(elems[i] >> 8);
    }
  }
  return out;
}

std::vector<Fe> unpack_elements(const Field& f, std::span<const std::uint8_t> bytes,
                                std::size_t count) {
  if (bytes.size() != packed_size(f, count)) {
    throw Error(ErrorCode::kMalformedKey, "packed length " + std::to_string(bytes.size()) +
                                              ", expected " +
                                              std::to_string(packed_size(f, count)));
  }
  std::vector<Fe> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (f.order() <= 16) {
      out[i] = static_cast<Fe>((bytes[i / 2] >> (4 * (i % 2))) & 0xF);
    } else if (f.order() <= 256) {
      out[i] = bytes[i];
    } else {
      out[i] = static_cast<Fe>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
    }
    if (!f.valid(out[i])) throw Error(ErrorCode::kMalformedKey, "element out of range");
  }
  if (f.order() <= 16 && count % 2 == 1 && (bytes.back() >> 4) != 0) {
    throw Error(ErrorCode::kMalformedKey, "nonzero padding nibble");
  }
  return out;
}

}  // namespace minrank
