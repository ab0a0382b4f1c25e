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

// Uncompressed Windows BMP (BITMAPINFOHEADER or a larger V4/V5 header),
// 8-bit palettized or 24-bit, bottom-up rows padded to 4 bytes.
//
// Everything needed to write the file back byte-for-byte is kept: header
// fields the codec does not interpret, extra info-header bytes, any gap
// between the palette and the pixel array, and bytes trailing the pixel
// array. Only the file-size field is recomputed on save.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chaoskey {

struct BmpImage {
  std::int32_t width = 0;
  std::int32_t height = 0;
  std::uint16_t bit_depth = 8;

  /// 4 bytes (B, G, R, reserved) per entry.
  std::vector<std::uint8_t> palette;
  /// Row-padded pixel array exactly as stored, bottom row first.
  std::vector<std::uint8_t> pixels;

  std::uint16_t reserved1 = 0;
  std::uint16_t reserved2 = 0;
  std::uint32_t image_size_field = 0;
  std::int32_t x_pixels_per_meter = 2835;
  std::int32_t y_pixels_per_meter = 2835;
  std::uint32_t colors_used = 0;
  std::uint32_t colors_important = 0;
  std::vector<std::uint8_t> info_extra;
  std::vector<std::uint8_t> gap;
  std::vector<std::uint8_t> trailer;

  std::size_t row_stride() const {
    return (static_cast<std::size_t>(width) * bit_depth / 8 + 3) / 4 * 4;
  }

  /// Pixel byte at (x, y) with y = 0 the top row; 24-bit images address
  /// channel c in B, G, R order.
  std::uint8_t& at(std::size_t x, std::size_t y, std::size_t c = 0);

  /// 8-bit image with a linear grey palette and zeroed pixels.
  static BmpImage gray8(std::int32_t width, std::int32_t height);
  static BmpImage rgb24(std::int32_t width, std::int32_t height);

  friend bool operator==(const BmpImage&, const BmpImage&) = default;
};

/// Throws MalformedInput (bad magic, truncation, inconsistent offsets) or
/// UnsupportedFormat (compression, top-down rows, other bit depths).
BmpImage load_bmp(std::span<const std::uint8_t> file);

std::vector<std::uint8_t> save_bmp(const BmpImage& image);

std::vector<std::uint8_t> read_file(const std::string& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace chaoskey
