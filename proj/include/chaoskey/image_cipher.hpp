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

// ECB encryption of BMP pixel payloads. Each 16-byte block is encrypted
// independently, so equal plaintext blocks give equal ciphertext blocks and
// large flat regions of an image stay visible as structure.
//
// Encrypted image layout: headers, palette and dimensions are untouched; the
// pixel array holds the first |pixels| ciphertext bytes, and the remaining
// 1..16 bytes of the padded ciphertext go into a trailing chunk
//
//   "CKPD" | u32 little-endian length | ciphertext tail
//
// placed in front of any pre-existing trailer, so the file still opens as a
// same-size noise image.

#include <cstdint>
#include <span>
#include <vector>

#include "chaoskey/aes.hpp"
#include "chaoskey/bmp.hpp"
#include "chaoskey/key_wrap.hpp"

namespace chaoskey {

/// PKCS#7: appends n bytes of value n, 1 <= n <= 16.
std::vector<std::uint8_t> pad_blocks(std::span<const std::uint8_t> data);
/// Throws BadLength unless a positive multiple of 16, BadPadding on an
/// invalid pad.
std::vector<std::uint8_t> strip_padding(std::span<const std::uint8_t> padded);

std::vector<std::uint8_t> encrypt_bytes(std::span<const std::uint8_t> data,
                                        const RoundKeySchedule& schedule);
std::vector<std::uint8_t> decrypt_bytes(std::span<const std::uint8_t> data,
                                        const RoundKeySchedule& schedule);

BmpImage encrypt_image(const BmpImage& image, const RoundKeySchedule& schedule);
/// Throws MalformedInput if the cipher tail chunk is missing, BadPadding on a
/// wrong key.
BmpImage decrypt_image(const BmpImage& image, const RoundKeySchedule& schedule);

BmpImage encrypt_image(const BmpImage& image, const AesKey& key, const ChaosSecret& secret);
BmpImage decrypt_image(const BmpImage& image, const AesKey& key, const ChaosSecret& secret);

}  // namespace chaoskey
