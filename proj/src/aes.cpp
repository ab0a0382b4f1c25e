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

#include <algorithm>
#include <string>

#include "chaoskey/error.hpp"
#include "chaoskey/hex.hpp"

namespace chaoskey {

namespace {

constexpr std::array<std::uint8_t, 256> kSbox = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

constexpr std::array<std::uint8_t, 256> make_inverse_sbox() {
  std::array<std::uint8_t, 256> inv{};
  for (std::size_t i = 0; i < 256; ++i) inv[kSbox[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

constexpr std::array<std::uint8_t, 256> kInvSbox = make_inverse_sbox();

// Multiplication by x in GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.
constexpr std::uint8_t xtime(std::uint8_t a) {
  return static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return p;
}

void add_round_key(Block128& s, const Block128& k) {
  for (std::size_t i = 0; i < 16; ++i) s[i] ^= k[i];
}

void sub_bytes(Block128& s) {
  for (auto& b : s) b = kSbox[b];
}

void inv_sub_bytes(Block128& s) {
  for (auto& b : s) b = kInvSbox[b];
}

// State byte (row r, column c) lives at index 4c + r.
void shift_rows(Block128& s) {
  Block128 t = s;
  for (int r = 1; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) s[4 * c + r] = t[4 * ((c + r) % 4) + r];
  }
}

void inv_shift_rows(Block128& s) {
  Block128 t = s;
  for (int r = 1; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) s[4 * ((c + r) % 4) + r] = t[4 * c + r];
  }
}

void mix_columns(Block128& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = static_cast<std::uint8_t>(xtime(a0) ^ (xtime(a1) ^ a1) ^ a2 ^ a3);
    col[1] = static_cast<std::uint8_t>(a0 ^ xtime(a1) ^ (xtime(a2) ^ a2) ^ a3);
    col[2] = static_cast<std::uint8_t>(a0 ^ a1 ^ xtime(a2) ^ (xtime(a3) ^ a3));
    col[3] = static_cast<std::uint8_t>((xtime(a0) ^ a0) ^ a1 ^ a2 ^ xtime(a3));
  }
}

void inv_mix_columns(Block128& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = gmul(a0, 0x0e) ^ gmul(a1, 0x0b) ^ gmul(a2, 0x0d) ^ gmul(a3, 0x09);
    col[1] = gmul(a0, 0x09) ^ gmul(a1, 0x0e) ^ gmul(a2, 0x0b) ^ gmul(a3, 0x0d);
    col[2] = gmul(a0, 0x0d) ^ gmul(a1, 0x09) ^ gmul(a2, 0x0e) ^ gmul(a3, 0x0b);
    col[3] = gmul(a0, 0x0b) ^ gmul(a1, 0x0d) ^ gmul(a2, 0x09) ^ gmul(a3, 0x0e);
  }
}

}  // namespace

AesKey::AesKey(std::span<const std::uint8_t> bytes) {
  switch (bytes.size()) {
    case 16: size_ = KeySize::K128; break;
    case 24: size_ = KeySize::K192; break;
    case 32: size_ = KeySize::K256; break;
    default:
      throw InvalidKeyLength("AES key must be 16, 24 or 32 bytes, got " +
                             std::to_string(bytes.size()));
  }
  std::copy(bytes.begin(), bytes.end(), bytes_.begin());
}

AesKey AesKey::from_hex(std::string_view hex) {
  if (hex.size() != 32 && hex.size() != 48 && hex.size() != 64) {
    throw InvalidKeyLength("AES key must be 32, 48 or 64 hex digits, got " +
                           std::to_string(hex.size()));
  }
  return AesKey(chaoskey::from_hex(hex));
}

std::string AesKey::to_hex() const { return chaoskey::to_hex(bytes()); }

RoundKeySchedule expand_key(const AesKey& key) {
  const std::size_t nk = key_bytes(key.size()) / 4;
  const std::size_t nr = static_cast<std::size_t>(round_count(key.size()));
  const std::size_t total_words = 4 * (nr + 1);

  std::vector<std::array<std::uint8_t, 4>> w(total_words);
  const auto kb = key.bytes();
  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = 0; j < 4; ++j) w[i][j] = kb[4 * i + j];
  }

  std::uint8_t rcon = 0x01;
  for (std::size_t i = nk; i < total_words; ++i) {
    std::array<std::uint8_t, 4> temp = w[i - 1];
    if (i % nk == 0) {
      // RotWord, SubWord, Rcon
      temp = {kSbox[temp[1]], kSbox[temp[2]], kSbox[temp[3]], kSbox[temp[0]]};
      temp[0] ^= rcon;
      rcon = xtime(rcon);
    } else if (nk > 6 && i % nk == 4) {
      for (auto& b : temp) b = kSbox[b];
    }
    for (std::size_t j = 0; j < 4; ++j) w[i][j] = w[i - nk][j] ^ temp[j];
  }

  RoundKeySchedule sched;
  sched.key_size_ = key.size();
  sched.round_keys_.resize(nr + 1);
  for (std::size_t r = 0; r <= nr; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      for (std::size_t j = 0; j < 4; ++j) sched.round_keys_[r][4 * c + j] = w[4 * r + c][j];
    }
  }
  return sched;
}

Block128 encrypt_block(const Block128& plaintext, const RoundKeySchedule& schedule) {
  const int nr = schedule.rounds();
  Block128 s = plaintext;
  add_round_key(s, schedule[0]);
  for (int r = 1; r < nr; ++r) {
    sub_bytes(s);
    shift_rows(s);
    mix_columns(s);
    add_round_key(s, schedule[static_cast<std::size_t>(r)]);
  }
  sub_bytes(s);
  shift_rows(s);
  add_round_key(s, schedule[static_cast<std::size_t>(nr)]);
  return s;
}

Block128 decrypt_block(const Block128& ciphertext, const RoundKeySchedule& schedule) {
  const int nr = schedule.rounds();
  Block128 s = ciphertext;
  add_round_key(s, schedule[static_cast<std::size_t>(nr)]);
  for (int r = nr - 1; r > 0; --r) {
    inv_shift_rows(s);
    inv_sub_bytes(s);
    add_round_key(s, schedule[static_cast<std::size_t>(r)]);
    inv_mix_columns(s);
  }
  inv_shift_rows(s);
  inv_sub_bytes(s);
  add_round_key(s, schedule[0]);
  return s;
}

}  // namespace chaoskey
