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

#pragma once

// FIPS-197 AES block cipher (128/192/256-bit keys), byte-oriented table
// implementation. Not constant time: S-box lookups are indexed by secret
// data, so this code leaks through cache timing and must not be used where
// side channels matter.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace chaoskey {

/// One AES state block. Bytes map column-major onto the 4x4 state.
using Block128 = std::array<std::uint8_t, 16>;

enum class KeySize { K128 = 16, K192 = 24, K256 = 32 };

constexpr std::size_t key_bytes(KeySize size) { return static_cast<std::size_t>(size); }

constexpr int round_count(KeySize size) {
  switch (size) {
    case KeySize::K128: return 10;
    case KeySize::K192: return 12;
    case KeySize::K256: return 14;
  }
  return 0;
}

class AesKey {
 public:
  /// Throws InvalidKeyLength unless `bytes` has 16, 24 or 32 octets.
  explicit AesKey(std::span<const std::uint8_t> bytes);

  static AesKey from_hex(std::string_view hex);

  KeySize size() const { return size_; }
  std::span<const std::uint8_t> bytes() const { return {bytes_.data(), key_bytes(size_)}; }
  std::string to_hex() const;

  friend bool operator==(const AesKey& a, const AesKey& b) {
    return a.size_ == b.size_ && a.bytes_ == b.bytes_;
  }

 private:
  KeySize size_;
  std::array<std::uint8_t, 32> bytes_{};
};

/// Expanded round keys; immutable once built, safe to share across threads.
class RoundKeySchedule {
 public:
  KeySize key_size() const { return key_size_; }
  int rounds() const { return round_count(key_size_); }
  std::span<const Block128> round_keys() const { return round_keys_; }
  const Block128& operator[](std::size_t i) const { return round_keys_[i]; }

 private:
  friend RoundKeySchedule expand_key(const AesKey& key);
  KeySize key_size_ = KeySize::K128;
  std::vector<Block128> round_keys_;
};

RoundKeySchedule expand_key(const AesKey& key);

Block128 encrypt_block(const Block128& plaintext, const RoundKeySchedule& schedule);
Block128 decrypt_block(const Block128& ciphertext, const RoundKeySchedule& schedule);

}  // namespace chaoskey
