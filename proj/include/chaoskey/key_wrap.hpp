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

// Chaotic pre-encryption of the AES key. The raw key is XORed with a
// keystream (one bit per key bit, packed MSB-first) from the logistic map,
// the cross map, or both; the result is the key that AES actually expands.
// The chaos parameters act as a second shared secret and are never written
// into ciphertext.

#include <optional>
#include <string_view>

#include "chaoskey/aes.hpp"
#include "chaoskey/chaos.hpp"
#include "chaoskey/params_io.hpp"

namespace chaoskey {

enum class WrapMode { Standard, Logistic, Cross, Dual };

inline constexpr WrapMode kAllModes[] = {WrapMode::Standard, WrapMode::Logistic, WrapMode::Cross,
                                         WrapMode::Dual};

std::string_view to_string(WrapMode mode);
/// Case-sensitive lowercase names; throws DomainError on anything else.
WrapMode parse_wrap_mode(std::string_view name);

struct ChaosSecret {
  WrapMode mode = WrapMode::Standard;
  std::optional<LogisticParams> logistic;
  std::optional<CrossParams> cross;

  static ChaosSecret standard() { return {}; }
  static ChaosSecret from_params(WrapMode mode, const ChaosParamSet& params) {
    return {mode, params.logistic, params.cross};
  }

  /// Throws MissingParams when the mode lacks the parameters it needs.
  /// Unused parameters are tolerated so one params file can serve all modes.
  void validate() const;
};

/// A key after chaotic wrapping; same length and key size as its source.
struct WrappedKey {
  AesKey key;
};

/// Keystream that wrap_key XORs in, `nbits` long. Empty for Standard.
Bitstream wrap_keystream(const ChaosSecret& secret, std::size_t nbits);

/// key XOR packed(stream). Throws DomainError unless stream has exactly
/// 8 * key-length bits.
AesKey apply_keystream(const AesKey& key, const Bitstream& stream);

WrappedKey wrap_key(const AesKey& key, const ChaosSecret& secret);
AesKey unwrap_key(const WrappedKey& wrapped, const ChaosSecret& secret);

/// The key handed to expand_key on both the encrypting and decrypting side:
/// the wrapped key for chaotic modes, the raw key for Standard.
AesKey effective_cipher_key(const AesKey& key, const ChaosSecret& secret);

}  // namespace chaoskey
