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

#ifndef MINRANK_GF_HPP_
#define MINRANK_GF_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace minrank {

// Field element. For GF(2^e) the value is the coefficient vector of the
// residue polynomial, constant term in bit 0. For GF(p) it is the residue.
using Fe = std::uint16_t;

// A finite field GF(p^e): either a prime field with p < 2^16 or a binary
// extension field GF(2^e) with 1 <= e <= 8.
//
// Instances are interned and live for the whole program, so `const Field&`
// and `const Field*` may be stored freely. All operations are pure.
//
// Multiplication and inversion for q <= 256 are single table lookups with no
// data-dependent branches. Cache-timing behaviour of those lookups is accepted
// at this library's assurance level.
class Field {
 public:
  // GF(p) for prime p, or GF(2^e) with its default modulus (x^4 + x + 1 for
  // GF(16)). Throws Error(kInvalidField) for unsupported (p, e).
  static const Field& get(unsigned p, unsigned e = 1);

  // GF(2^e) with an explicit modulus given as coefficients, constant term
  // first (length e + 1, leading coefficient 1). The modulus must be
  // irreducible.
  static const Field& get(unsigned p, unsigned e, std::span<const unsigned> modulus);

  // The field with `order` elements (prime or power of two).
  static const Field& for_order(unsigned order);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  unsigned order() const noexcept { return q_; }
  bool is_binary() const noexcept { return p_ == 2; }
  // Modulus bitmask for binary fields (bit i = coefficient of x^i); 0 for
  // prime fields.
  unsigned modulus_bits() const noexcept { return modulus_; }
  // ceil(log2 q): width of a raw sample in the PRG.
  unsigned sample_bits() const noexcept { return sample_bits_; }

  bool valid(Fe a) const noexcept { return a < q_; }

  Fe add(Fe a, Fe b) const noexcept {
    if (p_ == 2) return static_cast<Fe>(a ^ b);
    unsigned s = unsigned{a} + b;
    return static_cast<Fe>(s >= p_ ? s - p_ : s);
  }
  Fe neg(Fe a) const noexcept {
    if (p_ == 2) return a;
    return static_cast<Fe>(a == 0 ? 0 : p_ - a);
  }
  Fe sub(Fe a, Fe b) const noexcept { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const noexcept {
    if (!mul_table_.empty()) return mul_table_[std::size_t{a} * q_ + b];
    return static_cast<Fe>((std::uint32_t{a} * b) % p_);
  }

  // Throws Error(kZeroInverse) for a == 0.
  Fe inv(Fe a) const;
  // Inverse with inv(0) := 0; branch-free for q <= 256.
  Fe inv_or_zero(Fe a) const noexcept;

  Fe pow(Fe a, std::uint64_t exp) const noexcept;

  // Row of the multiplication table for `a` (length q), or nullptr when the
  // field is too large for tables.
  const Fe* mul_row(Fe a) const noexcept {
    return mul_table_.empty() ? nullptr : mul_table_.data() + std::size_t{a} * q_;
  }

  // dst[i] += c * src[i]
  void axpy(std::span<Fe> dst, Fe c, std::span<const Fe> src) const noexcept;
  // dst[i] -= c * src[i]
  void axmy(std::span<Fe> dst, Fe c, std::span<const Fe> src) const noexcept;
  // dst[i] *= c
  void scale(std::span<Fe> dst, Fe c) const noexcept;

  bool operator==(const Field& o) const noexcept { return this == &o; }

  Field(unsigned p, unsigned e, unsigned modulus);

 private:
  unsigned p_;
  unsigned e_;
  unsigned q_;
  unsigned modulus_;
  unsigned sample_bits_;
  std::vector<Fe> mul_table_;
  std::vector<Fe> inv_table_;
};

bool is_prime(unsigned v) noexcept;

// Irreducibility of a binary polynomial (bitmask form) by trial division.
bool is_irreducible_gf2(unsigned poly) noexcept;

// Wire encoding of field elements: one element per nibble for q <= 16 (low
// nibble first), one per byte for q <= 256, two bytes little-endian above.
std::size_t packed_size(const Field& f, std::size_t count) noexcept;
std::vector<std::uint8_t> pack_elements(const Field& f, std::span<const Fe> elems);
// Throws Error(kMalformedKey) on a length mismatch, out-of-range element or a
// nonzero padding nibble.
std::vector<Fe> unpack_elements(const Field& f, std::span<const std::uint8_t> bytes,
                                std::size_t count);

}  // namespace minrank

#endif  // MINRANK_GF_HPP_
