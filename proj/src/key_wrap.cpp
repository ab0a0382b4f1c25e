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

#include "chaoskey/key_wrap.hpp"

#include <string>
#include <vector>

#include "chaoskey/error.hpp"
#include "chaoskey/kernels.hpp"

namespace chaoskey {

std::string_view to_string(WrapMode mode) {
  switch (mode) {
    case WrapMode::Standard: return "standard";
    case WrapMode::Logistic: return "logistic";
    case WrapMode::Cross: return "cross";
    case WrapMode::Dual: return "dual";
  }
  return "?";
}

WrapMode parse_wrap_mode(std::string_view name) {
  for (WrapMode m : kAllModes) {
    if (to_string(m) == name) return m;
  }
  throw DomainError("unknown wrap mode '" + std::string(name) + "'");
}

void ChaosSecret::validate() const {
  const bool need_logistic = mode == WrapMode::Logistic || mode == WrapMode::Dual;
  const bool need_cross = mode == WrapMode::Cross || mode == WrapMode::Dual;
  if (need_logistic && !logistic) {
    throw MissingParams(std::string(to_string(mode)) + " mode needs logistic parameters");
  }
  if (need_cross && !cross) {
    throw MissingParams(std::string(to_string(mode)) + " mode needs cross parameters");
  }
}

Bitstream wrap_keystream(const ChaosSecret& secret, std::size_t nbits) {
  secret.validate();
  switch (secret.mode) {
    case WrapMode::Standard: return {};
    case WrapMode::Logistic: return logistic_keystream(*secret.logistic, nbits);
    case WrapMode::Cross: return cross_keystream(*secret.cross, nbits);
    case WrapMode::Dual: return dual_keystream(*secret.logistic, *secret.cross, nbits);
  }
  return {};
}

AesKey apply_keystream(const AesKey& key, const Bitstream& stream) {
  const auto raw = key.bytes();
  if (stream.size() != raw.size() * 8) {
    throw DomainError("keystream has " + std::to_string(stream.size()) + " bits, key needs " +
                      std::to_string(raw.size() * 8));
  }
  const std::vector<std::uint8_t> pad = stream.to_bytes();
  std::vector<std::uint8_t> out(raw.size());
  kernels::active().xor_bytes(out, raw, pad);
  return AesKey(out);
}

WrappedKey wrap_key(const AesKey& key, const ChaosSecret& secret) {
  return {effective_cipher_key(key, secret)};
}

AesKey unwrap_key(const WrappedKey& wrapped, const ChaosSecret& secret) {
  return effective_cipher_key(wrapped.key, secret);
}

AesKey effective_cipher_key(const AesKey& key, const ChaosSecret& secret) {
  secret.validate();
  if (secret.mode == WrapMode::Standard) return key;
  return apply_keystream(key, wrap_keystream(secret, key.bytes().size() * 8));
}

}  // namespace chaoskey
