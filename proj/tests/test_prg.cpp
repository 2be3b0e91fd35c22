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

#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include "minrank/error.hpp"
#include "minrank/matrix.hpp"
#include "minrank/prg.hpp"
#include "oracles.hpp"

namespace minrank {
namespace {

std::string hex_of(PrgStream& prg, std::size_t count) { return to_hex(prg.next_bytes(count)); }

TEST(Seed, HexRoundTrip) {
  const Seed s = Seed::from_hex("00ff10Ab");
  EXPECT_EQ(s.hex(), "00ff10ab");
  EXPECT_EQ(s.size_bits(), 32U);
  EXPECT_THROW(Seed::from_hex("abc"), Error);
  EXPECT_THROW(Seed::from_hex("zz"), Error);
  EXPECT_EQ(Seed::zero(128).hex(), std::string(32, '0'));
}

TEST(Prg, GoldenVector) {
  PrgStream prg(Seed::zero(128), "PK");
  EXPECT_EQ(hex_of(prg, 32), oracle::kShakeZeroPk0);
  PrgStream sk(Seed::zero(128), "SK");
  EXPECT_EQ(hex_of(sk, 8), oracle::kShakeZeroSk0);
}

TEST(Prg, LongSqueezeMatchesOneShotOutput) {
  PrgStream prg(Seed::zero(128), "PK");
  prg.next_bytes(160);
  EXPECT_EQ(hex_of(prg, 40), oracle::kShakeZeroPk160);
  prg.next_bytes(4000 - 200);
  EXPECT_EQ(hex_of(prg, 32), oracle::kShakeZeroPk4000);
  EXPECT_EQ(prg.bytes_emitted(), 4032U);
}

TEST(Prg, ByteAtATimeEqualsBulk) {
  PrgStream a(Seed::zero(128), "PK");
  PrgStream b(Seed::zero(128), "PK");
  const auto bulk = a.next_bytes(1000);
  for (std::size_t i = 0; i < bulk.size(); ++i) ASSERT_EQ(b.next_byte(), bulk[i]) << i;
}

TEST(Prg, DeterminismAndDomainSeparation) {
  const Seed seed = Seed::from_hex("000102030405060708090a0b0c0d0e0f");
  PrgStream a(seed, "PK");
  PrgStream b(seed, "PK");
  PrgStream c(seed, "SK");
  const auto first = a.next_bytes(64);
  EXPECT_EQ(first, b.next_bytes(64));
  EXPECT_NE(first, c.next_bytes(64));
}

TEST(Prg, CopiesContinueIndependently) {
  PrgStream a(Seed::zero(128), "PK");
  a.next_bytes(100);
  PrgStream b = a;
  EXPECT_EQ(a.next_bytes(300), b.next_bytes(300));
  PrgStream c(Seed::zero(128), "SK");
  c = a;
  EXPECT_EQ(a.next_byte(), c.next_byte());
  PrgStream d = std::move(c);
  EXPECT_EQ(a.next_byte(), d.next_byte());
}

TEST(Prg, Gf16NibbleOrder) {
  // First byte of the golden stream is 0x19: low nibble first.
  PrgStream prg(Seed::zero(128), "PK");
  const Field& f = Field::get(2, 4);
  EXPECT_EQ(prg.next_fe(f), 0x9);
  EXPECT_EQ(prg.next_fe(f), 0x1);
  EXPECT_EQ(prg.next_fe(f), 0x7);
  EXPECT_EQ(prg.next_fe(f), 0x6);
}

TEST(Prg, Gf2BitOrder) {
  PrgStream prg(Seed::zero(128), "PK");
  const Field& f = Field::get(2);
  const unsigned byte0 = 0x19;
  for (unsigned i = 0; i < 8; ++i) EXPECT_EQ(prg.next_fe(f), (byte0 >> i) & 1U) << i;
}

TEST(Prg, Gf3RejectsThree) {
  // 2-bit chunks of 0x19 0x67 ...: 1, 2, 1, 0 | 3 (rejected), 1, 2, 1
  PrgStream prg(Seed::zero(128), "PK");
  const Field& f = Field::get(3);
  const std::vector<Fe> expect{1, 2, 1, 0, 1, 2, 1};
  for (Fe e : expect) EXPECT_EQ(prg.next_fe(f), e);
}

TEST(Prg, ByteReadDiscardsPartialByte) {
  PrgStream prg(Seed::zero(128), "PK");
  prg.next_fe(Field::get(2, 4));
  EXPECT_EQ(prg.next_byte(), 0x67);
}

TEST(Prg, MatrixGoldenAndFillOrder) {
  PrgStream prg(Seed::zero(128), "PK");
  const Matrix m = prg.next_matrix(Field::get(2, 4), 2, 2);
  EXPECT_EQ(m, Matrix::from_rows(Field::get(2, 4), {{0x9, 0x7}, {0x1, 0x6}}));
  PrgStream again(Seed::zero(128), "PK");
  EXPECT_EQ(again.next_matrix(Field::get(2, 4), 2, 2), m);
}

TEST(Prg, Gf13ChiSquare) {
  const Field& f = Field::get(13);
  PrgStream prg(Seed::from_hex("0123456789abcdef0123456789abcdef"), "chi");
  std::vector<double> counts(13, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const Fe v = prg.next_fe(f);
    ASSERT_LT(v, 13);
    counts[v] += 1;
  }
  double stat = 0;
  const double expected = draws / 13.0;
  for (double c : counts) stat += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(12);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, stat)), 1e-3);
}

TEST(Prg, DeriveSeed) {
  const Seed master = Seed::zero(128);
  const Seed a = derive_seed(master, "trial", 0);
  const Seed b = derive_seed(master, "trial", 1);
  const Seed c = derive_seed(master, "other", 0);
  EXPECT_EQ(a.size_bits(), 128U);
  EXPECT_EQ(derive_seed(master, "trial", 0), a);
  EXPECT_NE(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(derive_seed(master, "trial", 0, 256).size_bits(), 256U);
}

}  // namespace
}  // namespace minrank
