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

#include "chaoskey/image_cipher.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "chaoskey/error.hpp"

namespace chaoskey {

namespace {

constexpr std::uint8_t kTailMagic[4] = {'C', 'K', 'P', 'D'};
constexpr std::size_t kTailHeader = 8;

}  // namespace

std::vector<std::uint8_t> pad_blocks(std::span<const std::uint8_t> data) {
  const std::size_t pad = 16 - data.size() % 16;
  std::vector<std::uint8_t> out(data.begin(), data.end());
  out.insert(out.end(), pad, static_cast<std::uint8_t>(pad));
  return out;
}

std::vector<std::uint8_t> strip_padding(std::span<const std::uint8_t> padded) {
  if (padded.empty() || padded.size() % 16 != 0) {
    throw BadLength("ciphertext length " + std::to_string(padded.size()) +
                    " is not a positive multiple of 16");
  }
  const std::uint8_t pad = padded.back();
  if (pad == 0 || pad > 16) throw BadPadding("invalid padding (wrong key or chaos secret?)");
  const auto tail = padded.last(pad);
  if (!std::all_of(tail.begin(), tail.end(), [pad](std::uint8_t b) { return b == pad; })) {
    throw BadPadding("invalid padding (wrong key or chaos secret?)");
  }
  return {padded.begin(), padded.end() - pad};
}

std::vector<std::uint8_t> encrypt_bytes(std::span<const std::uint8_t> data,
                                        const RoundKeySchedule& schedule) {
  std::vector<std::uint8_t> buf = pad_blocks(data);
  Block128 block;
  for (std::size_t off = 0; off < buf.size(); off += 16) {
    std::memcpy(block.data(), buf.data() + off, 16);
    block = encrypt_block(block, schedule);
    std::memcpy(buf.data() + off, block.data(), 16);
  }
  return buf;
}

std::vector<std::uint8_t> decrypt_bytes(std::span<const std::uint8_t> data,
                                        const RoundKeySchedule& schedule) {
  if (data.empty() || data.size() % 16 != 0) {
    throw BadLength("ciphertext length " + std::to_string(data.size()) +
                    " is not a positive multiple of 16");
  }
  std::vector<std::uint8_t> buf(data.begin(), data.end());
  Block128 block;
  for (std::size_t off = 0; off < buf.size(); off += 16) {
    std::memcpy(block.data(), buf.data() + off, 16);
    block = decrypt_block(block, schedule);
    std::memcpy(buf.data() + off, block.data(), 16);
  }
  return strip_padding(buf);
}

BmpImage encrypt_image(const BmpImage& image, const RoundKeySchedule& schedule) {
  std::vector<std::uint8_t> ct = encrypt_bytes(image.pixels, schedule);
  const std::size_t shown = image.pixels.size();
  const auto tail_len = static_cast<std::uint32_t>(ct.size() - shown);

  BmpImage out = image;
  out.pixels.assign(ct.begin(), ct.begin() + static_cast<std::ptrdiff_t>(shown));
  std::vector<std::uint8_t> trailer(kTailHeader + tail_len + image.trailer.size());
  std::memcpy(trailer.data(), kTailMagic, 4);
  for (std::size_t i = 0; i < 4; ++i) trailer[4 + i] = static_cast<std::uint8_t>(tail_len >> (8 * i));
  std::copy(ct.begin() + static_cast<std::ptrdiff_t>(shown), ct.end(), trailer.begin() + kTailHeader);
  std::copy(image.trailer.begin(), image.trailer.end(),
            trailer.begin() + static_cast<std::ptrdiff_t>(kTailHeader + tail_len));
  out.trailer = std::move(trailer);
  return out;
}

BmpImage decrypt_image(const BmpImage& image, const RoundKeySchedule& schedule) {
  const auto& tr = image.trailer;
  if (tr.size() < kTailHeader || !std::equal(std::begin(kTailMagic), std::end(kTailMagic), tr.begin())) {
    throw MalformedInput("image carries no cipher tail chunk; was it produced by encrypt?");
  }
  const std::uint32_t tail_len = static_cast<std::uint32_t>(tr[4]) |
                                 (static_cast<std::uint32_t>(tr[5]) << 8) |
                                 (static_cast<std::uint32_t>(tr[6]) << 16) |
                                 (static_cast<std::uint32_t>(tr[7]) << 24);
  if (tail_len == 0 || tail_len > 16 || tr.size() < kTailHeader + tail_len) {
    throw MalformedInput("cipher tail chunk is corrupt");
  }

  std::vector<std::uint8_t> ct = image.pixels;
  ct.insert(ct.end(), tr.begin() + kTailHeader, tr.begin() + kTailHeader + tail_len);
  std::vector<std::uint8_t> pt = decrypt_bytes(ct, schedule);
  if (pt.size() != image.pixels.size()) {
    // A wrong key can yield a valid-looking pad of the wrong length.
    throw BadPadding("decrypted payload length mismatch (wrong key or chaos secret?)");
  }

  BmpImage out = image;
  out.pixels = std::move(pt);
  out.trailer.assign(tr.begin() + kTailHeader + tail_len, tr.end());
  return out;
}

BmpImage encrypt_image(const BmpImage& image, const AesKey& key, const ChaosSecret& secret) {
  return encrypt_image(image, expand_key(effective_cipher_key(key, secret)));
}

BmpImage decrypt_image(const BmpImage& image, const AesKey& key, const ChaosSecret& secret) {
  return decrypt_image(image, expand_key(effective_cipher_key(key, secret)));
}

}  // namespace chaoskey
