// Copyright 2026 The chaoskey Authors
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

#include "chaoskey/aes.hpp"

#include <gtest/gtest.h>

#include <random>

#include "chaoskey/error.hpp"
#include "chaoskey/hex.hpp"
#include "test_support.hpp"

namespace chaoskey {
namespace {

Block128 block_from_hex(std::string_view hex) {
  const auto v = from_hex(hex);
  Block128 b{};
  std::copy(v.begin(), v.end(), b.begin());
  return b;
}

std::string word(const RoundKeySchedule& s, std::size_t w) {
  const Block128& rk = s[w / 4];
  return to_hex(std::span(rk).subspan(4 * (w % 4), 4));
}

struct KnownAnswer {
  const char* key;
  const char* ciphertext;
  int rounds;
};

// FIPS-197 Appendix C, plaintext 00112233445566778899aabbccddeeff.
constexpr KnownAnswer kAppendixC[] = {
    {"000102030405060708090a0b0c0d0e0f", "69c4e0d86a7b0430d8cdb78070b4c55a", 10},
    {"000102030405060708090a0b0c0d0e0f1011121314151617", "dda97ca4864cdfe06eaf70a0ec0d7191", 12},
    {"000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "8ea2b7ca516745bfeafc49904b496089", 14},
};

TEST(AesTest, AppendixCKnownAnswers) {
  const Block128 pt = block_from_hex("00112233445566778899aabbccddeeff");
  for (const auto& v : kAppendixC) {
    SCOPED_TRACE(v.key);
    const auto sched = expand_key(AesKey::from_hex(v.key));
    EXPECT_EQ(sched.rounds(), v.rounds);
    EXPECT_EQ(sched.round_keys().size(), static_cast<std::size_t>(v.rounds + 1));
    const Block128 ct = encrypt_block(pt, sched);
    EXPECT_EQ(to_hex(ct), v.ciphertext);
    EXPECT_EQ(decrypt_block(ct, sched), pt);
  }
}

TEST(AesTest, AppendixAKeyExpansionWords) {
  const auto s128 = expand_key(AesKey::from_hex("2b7e151628aed2a6abf7158809cf4f3c"));
  EXPECT_EQ(word(s128, 4), "a0fafe17");
  EXPECT_EQ(word(s128, 43), "b6630ca6");

  const auto s192 = expand_key(AesKey::from_hex("8e73b0f7da0e6452c810f32b809079e562f8ead2522c6b7b"));
  EXPECT_EQ(word(s192, 6), "fe0c91f7");
  EXPECT_EQ(word(s192, 51), "01002202");

  const auto s256 = expand_key(
      AesKey::from_hex("603deb1015ca71be2b73aef0857d77811f352c073b6108d72d9810a30914dff4"));
  EXPECT_EQ(word(s256, 8), "9ba35411");
  EXPECT_EQ(word(s256, 59), "706c631e");
}

TEST(AesTest, FirstRoundKeyIsTheKey) {
  const auto zero = expand_key(AesKey(std::vector<std::uint8_t>(16, 0)));
  EXPECT_EQ(zero[0], Block128{});
  EXPECT_EQ(zero.round_keys().size(), 11u);

  std::mt19937_64 rng(3);
  for (std::size_t len : {16u, 24u, 32u}) {
    const AesKey k = testing::random_key(rng, len);
    const auto s = expand_key(k);
    EXPECT_TRUE(std::equal(s[0].begin(), s[0].end(), k.bytes().begin()));
  }
}

TEST(AesTest, RejectsBadKeyLengths) {
  for (std::size_t len : {0u, 1u, 15u, 17u, 20u, 31u, 33u, 64u}) {
    EXPECT_THROW(AesKey(std::vector<std::uint8_t>(len, 0)), InvalidKeyLength) << len;
  }
  EXPECT_THROW(AesKey::from_hex("0011"), InvalidKeyLength);
  EXPECT_THROW(AesKey::from_hex("zz0102030405060708090a0b0c0d0e0f"), MalformedInput);
}

TEST(AesTest, DecryptionIsDeterministic) {
  const auto s = expand_key(AesKey(std::vector<std::uint8_t>(16, 0)));
  const Block128 a = decrypt_block(Block128{}, s);
  const Block128 b = decrypt_block(Block128{}, expand_key(AesKey(std::vector<std::uint8_t>(16, 0))));
  EXPECT_EQ(a, b);
}

TEST(AesTest, RoundTripRandomBlocksAllKeySizes) {
  std::mt19937_64 rng(17);
  for (std::size_t len : {16u, 24u, 32u}) {
    const auto s = expand_key(testing::random_key(rng, len));
    for (int i = 0; i < 10000 / 3 + 1; ++i) {
      Block128 pt;
      const auto bytes = testing::random_bytes(rng, 16);
      std::copy(bytes.begin(), bytes.end(), pt.begin());
      ASSERT_EQ(decrypt_block(encrypt_block(pt, s), s), pt);
      ASSERT_EQ(encrypt_block(decrypt_block(pt, s), s), pt);
    }
  }
}

TEST(AesTest, SingleBitAvalanche) {
  std::mt19937_64 rng(2026);
  const auto s = expand_key(testing::random_key(rng));
  std::size_t total = 0;
  constexpr int kTrials = 1000;
  for (int t = 0; t < kTrials; ++t) {
    Block128 pt;
    const auto bytes = testing::random_bytes(rng, 16);
    std::copy(bytes.begin(), bytes.end(), pt.begin());
    Block128 flipped = pt;
    const std::size_t bit = rng() % 128;
    flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    const Block128 a = encrypt_block(pt, s);
    const Block128 b = encrypt_block(flipped, s);
    total += testing::bit_differences(a, b);
  }
  const double mean = static_cast<double>(total) / kTrials;
  EXPECT_GE(mean, 54.0);
  EXPECT_LE(mean, 74.0);
}

}  // namespace
}  // namespace chaoskey
