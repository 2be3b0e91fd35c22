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

#include "minrank/prg.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstring>

#include "minrank/error.hpp"
#include "minrank/matrix.hpp"

namespace minrank {
namespace {

constexpr std::size_t kShake128Rate = 168;

const EVP_MD* shake128() {
  static EVP_MD* md = EVP_MD_fetch(nullptr, "SHAKE128", nullptr);
  if (md == nullptr) throw Error(ErrorCode::kRandomnessExhausted, "SHAKE128 unavailable");
  return md;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

struct PrgStream::Xof {
  EVP_MD_CTX* ctx = nullptr;

  Xof() : ctx(EVP_MD_CTX_new()) {
    if (ctx == nullptr) throw Error(ErrorCode::kRandomnessExhausted, "EVP_MD_CTX_new failed");
  }
  Xof(const Xof& o) : Xof() {
    if (EVP_MD_CTX_copy_ex(ctx, o.ctx) != 1) {
      throw Error(ErrorCode::kRandomnessExhausted, "EVP_MD_CTX_copy_ex failed");
    }
  }
  Xof& operator=(const Xof&) = delete;
  ~Xof() { EVP_MD_CTX_free(ctx); }
};

Seed Seed::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(ErrorCode::kInvalidParams, "seed hex has odd length");
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::kInvalidParams, "seed is not hex");
    bytes[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return Seed(std::move(bytes));
}

std::string Seed::hex() const { return to_hex(bytes_); }

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

PrgStream::PrgStream(std::span<const std::uint8_t> seed, std::string_view tag)
    : xof_(std::make_unique<Xof>()) {
  if (EVP_DigestInit_ex(xof_->ctx, shake128(), nullptr) != 1 ||
      EVP_DigestUpdate(xof_->ctx, seed.data(), seed.size()) != 1 ||
      EVP_DigestUpdate(xof_->ctx, tag.data(), tag.size()) != 1) {
    throw Error(ErrorCode::kRandomnessExhausted, "SHAKE128 absorb failed");
  }
}

PrgStream::~PrgStream() = default;
PrgStream::PrgStream(PrgStream&&) noexcept = default;
PrgStream& PrgStream::operator=(PrgStream&&) noexcept = default;

PrgStream::PrgStream(const PrgStream& other)
    : xof_(std::make_unique<Xof>(*other.xof_)),
      buffer_(other.buffer_),
      pos_(other.pos_),
      squeezed_(other.squeezed_),
      emitted_(other.emitted_),
      bit_buf_(other.bit_buf_),
      bit_count_(other.bit_count_) {}

PrgStream& PrgStream::operator=(const PrgStream& other) {
  if (this != &other) *this = PrgStream(other);
  return *this;
}

// OpenSSL 3.0 has no incremental squeeze, so the absorbed state is cloned and
// finalized to a longer output; earlier output is a prefix of later output.
void PrgStream::refill() {
  const std::uint64_t total = std::max<std::uint64_t>(2 * squeezed_, squeezed_ + kShake128Rate);
  std::vector<std::uint8_t> out(total);
  Xof copy(*xof_);
  if (EVP_DigestFinalXOF(copy.ctx, out.data(), out.size()) != 1) {
    throw Error(ErrorCode::kRandomnessExhausted, "SHAKE128 squeeze failed");
  }
  buffer_.erase(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(pos_));
  buffer_.insert(buffer_.end(), out.begin() + static_cast<std::ptrdiff_t>(squeezed_), out.end());
  pos_ = 0;
  squeezed_ = total;
}

std::uint8_t PrgStream::next_byte() {
  if (pos_ == buffer_.size()) refill();
  ++emitted_;
  return buffer_[pos_++];
}

void PrgStream::next_bytes(std::span<std::uint8_t> out) {
  bit_buf_ = 0;
  bit_count_ = 0;
  for (auto& b : out) b = next_byte();
}

std::vector<std::uint8_t> PrgStream::next_bytes(std::size_t count) {
  std::vector<std::uint8_t> out(count);
  next_bytes(out);
  return out;
}

Seed PrgStream::next_seed(std::size_t lambda_bits) { return Seed(next_bytes(lambda_bits / 8)); }

unsigned PrgStream::next_bits(unsigned count) {
  while (bit_count_ < count) {
    bit_buf_ |= std::uint32_t{next_byte()} << bit_count_;
    bit_count_ += 8;
  }
  const unsigned v = bit_buf_ & ((1U << count) - 1U);
  bit_buf_ >>= count;
  bit_count_ -= count;
  return v;
}

Fe PrgStream::next_fe(const Field& f) {
  for (;;) {
    const unsigned v = next_bits(f.sample_bits());
    if (v < f.order()) return static_cast<Fe>(v);
  }
}

Matrix PrgStream::next_matrix(const Field& f, std::size_t rows, std::size_t cols) {
  Matrix out(f, rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = next_fe(f);
  }
  return out;
}

Seed derive_seed(const Seed& master, std::string_view purpose, std::uint64_t index,
                 std::size_t lambda_bits) {
  std::string tag(purpose);
  for (int i = 0; i < 8; ++i) tag.push_back(static_cast<char>((index >> (8 * i)) & 0xFF));
  PrgStream s(master, tag);
  return s.next_seed(lambda_bits);
}

}  // namespace minrank
