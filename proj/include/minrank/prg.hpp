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

#ifndef MINRANK_PRG_HPP_
#define MINRANK_PRG_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minrank/gf.hpp"

namespace minrank {

class Matrix;

// A lambda-bit seed (lambda / 8 bytes).
class Seed {
 public:
  Seed() = default;
  explicit Seed(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  // Throws Error(kInvalidParams) on odd length or a non-hex digit.
  static Seed from_hex(std::string_view hex);
  static Seed zero(std::size_t lambda_bits) { return Seed(std::vector<std::uint8_t>(lambda_bits / 8)); }

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::size_t size_bits() const noexcept { return 8 * bytes_.size(); }
  std::string hex() const;

  bool operator==(const Seed&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

std::string to_hex(std::span<const std::uint8_t> bytes);

// Deterministic byte/element stream: SHAKE128 over (seed || tag), squeezed
// without bound.
//
// Field elements are read as ceil(log2 q)-bit chunks, least significant bit
// first across the byte stream; chunks >= q are rejected and redrawn. For
// GF(16) this reads the low nibble of each byte before the high nibble.
// Byte reads discard any partially consumed byte.
//
// Single owner, not thread-safe. Copies continue independently from the same
// position.
class PrgStream {
 public:
  PrgStream(std::span<const std::uint8_t> seed, std::string_view tag);
  PrgStream(const Seed& seed, std::string_view tag) : PrgStream(seed.bytes(), tag) {}
  ~PrgStream();
  PrgStream(const PrgStream& other);
  PrgStream& operator=(const PrgStream& other);
  PrgStream(PrgStream&&) noexcept;
  PrgStream& operator=(PrgStream&&) noexcept;

  std::uint8_t next_byte();
  void next_bytes(std::span<std::uint8_t> out);
  std::vector<std::uint8_t> next_bytes(std::size_t count);
  Seed next_seed(std::size_t lambda_bits);

  Fe next_fe(const Field& f);
  // Entries drawn in column-major order: the first m draws fill column 1.
  Matrix next_matrix(const Field& f, std::size_t rows, std::size_t cols);

  std::uint64_t bytes_emitted() const noexcept { return emitted_; }

 private:
  unsigned next_bits(unsigned count);
  void refill();

  struct Xof;
  std::unique_ptr<Xof> xof_;
  std::vector<std::uint8_t> buffer_;  // squeezed, not yet consumed
  std::size_t pos_ = 0;
  std::uint64_t squeezed_ = 0;
  std::uint64_t emitted_ = 0;
  std::uint32_t bit_buf_ = 0;
  unsigned bit_count_ = 0;
};

// Per-trial seed derived from (master, index); schedule independent.
Seed derive_seed(const Seed& master, std::string_view purpose, std::uint64_t index,
                 std::size_t lambda_bits = 128);

}  // namespace minrank

#endif  // MINRANK_PRG_HPP_
