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

#include "chaoskey/bmp.hpp"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "chaoskey/error.hpp"

namespace chaoskey {

namespace {

constexpr std::size_t kFileHeaderSize = 14;
constexpr std::size_t kInfoHeaderSize = 40;

std::uint16_t get_u16(std::span<const std::uint8_t> p, std::size_t off) {
  return static_cast<std::uint16_t>(p[off] | (p[off + 1] << 8));
}

std::uint32_t get_u32(std::span<const std::uint8_t> p, std::size_t off) {
  return static_cast<std::uint32_t>(p[off]) | (static_cast<std::uint32_t>(p[off + 1]) << 8) |
         (static_cast<std::uint32_t>(p[off + 2]) << 16) |
         (static_cast<std::uint32_t>(p[off + 3]) << 24);
}

std::int32_t get_i32(std::span<const std::uint8_t> p, std::size_t off) {
  return static_cast<std::int32_t>(get_u32(p, off));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void append(std::vector<std::uint8_t>& out, std::span<const std::uint8_t> bytes) {
  out.insert(out.end(), bytes.begin(), bytes.end());
}

}  // namespace

std::uint8_t& BmpImage::at(std::size_t x, std::size_t y, std::size_t c) {
  const std::size_t row = static_cast<std::size_t>(height) - 1 - y;
  return pixels[row * row_stride() + x * (bit_depth / 8) + c];
}

BmpImage BmpImage::gray8(std::int32_t width, std::int32_t height) {
  BmpImage img;
  img.width = width;
  img.height = height;
  img.bit_depth = 8;
  img.palette.resize(256 * 4);
  for (std::size_t i = 0; i < 256; ++i) {
    img.palette[4 * i + 0] = static_cast<std::uint8_t>(i);
    img.palette[4 * i + 1] = static_cast<std::uint8_t>(i);
    img.palette[4 * i + 2] = static_cast<std::uint8_t>(i);
  }
  img.colors_used = 256;
  img.pixels.assign(img.row_stride() * static_cast<std::size_t>(height), 0);
  img.image_size_field = static_cast<std::uint32_t>(img.pixels.size());
  return img;
}

BmpImage BmpImage::rgb24(std::int32_t width, std::int32_t height) {
  BmpImage img;
  img.width = width;
  img.height = height;
  img.bit_depth = 24;
  img.pixels.assign(img.row_stride() * static_cast<std::size_t>(height), 0);
  img.image_size_field = static_cast<std::uint32_t>(img.pixels.size());
  return img;
}

BmpImage load_bmp(std::span<const std::uint8_t> file) {
  if (file.size() < kFileHeaderSize + kInfoHeaderSize) {
    throw MalformedInput("BMP truncated: " + std::to_string(file.size()) + " bytes");
  }
  if (file[0] != 'B' || file[1] != 'M') throw MalformedInput("missing 'BM' magic");

  BmpImage img;
  img.reserved1 = get_u16(file, 6);
  img.reserved2 = get_u16(file, 8);
  const std::uint32_t pixel_offset = get_u32(file, 10);

  const std::uint32_t info_size = get_u32(file, 14);
  if (info_size < kInfoHeaderSize) {
    throw UnsupportedFormat("BMP info header of " + std::to_string(info_size) + " bytes");
  }
  const std::size_t info_end = kFileHeaderSize + info_size;
  if (info_end > file.size()) throw MalformedInput("BMP info header truncated");

  img.width = get_i32(file, 18);
  img.height = get_i32(file, 22);
  const std::uint16_t planes = get_u16(file, 26);
  img.bit_depth = get_u16(file, 28);
  const std::uint32_t compression = get_u32(file, 30);
  img.image_size_field = get_u32(file, 34);
  img.x_pixels_per_meter = get_i32(file, 38);
  img.y_pixels_per_meter = get_i32(file, 42);
  img.colors_used = get_u32(file, 46);
  img.colors_important = get_u32(file, 50);

  if (planes != 1) throw MalformedInput("BMP planes field must be 1");
  if (img.bit_depth != 8 && img.bit_depth != 24) {
    throw UnsupportedFormat("BMP bit depth " + std::to_string(img.bit_depth) +
                            " (only 8 and 24 are supported)");
  }
  if (compression != 0) throw UnsupportedFormat("compressed BMP (only BI_RGB is supported)");
  if (img.height < 0) throw UnsupportedFormat("top-down BMP");
  if (img.width <= 0 || img.height == 0) throw MalformedInput("BMP has empty dimensions");

  img.info_extra.assign(file.begin() + kInfoHeaderSize + kFileHeaderSize, file.begin() + info_end);

  std::size_t palette_entries = img.colors_used;
  if (img.bit_depth == 8 && palette_entries == 0) palette_entries = 256;
  if (img.bit_depth == 8 && palette_entries > 256) throw MalformedInput("BMP palette too large");
  const std::size_t palette_end = info_end + 4 * palette_entries;
  if (palette_end > pixel_offset) throw MalformedInput("BMP pixel offset overlaps the palette");
  if (pixel_offset > file.size()) throw MalformedInput("BMP pixel offset beyond end of file");
  img.palette.assign(file.begin() + info_end, file.begin() + palette_end);
  img.gap.assign(file.begin() + palette_end, file.begin() + pixel_offset);

  const std::uint64_t stride =
      (static_cast<std::uint64_t>(img.width) * img.bit_depth / 8 + 3) / 4 * 4;
  const std::uint64_t payload = stride * static_cast<std::uint64_t>(img.height);
  if (payload > file.size() - pixel_offset) {
    throw MalformedInput("BMP pixel array truncated: need " + std::to_string(payload) +
                         " bytes, have " + std::to_string(file.size() - pixel_offset));
  }
  const auto pix_begin = file.begin() + pixel_offset;
  const auto pix_end = pix_begin + static_cast<std::ptrdiff_t>(payload);
  img.pixels.assign(pix_begin, pix_end);
  img.trailer.assign(pix_end, file.end());
  return img;
}

std::vector<std::uint8_t> save_bmp(const BmpImage& img) {
  const std::size_t info_size = kInfoHeaderSize + img.info_extra.size();
  const std::size_t pixel_offset =
      kFileHeaderSize + info_size + img.palette.size() + img.gap.size();
  const std::size_t total = pixel_offset + img.pixels.size() + img.trailer.size();

  std::vector<std::uint8_t> out;
  out.reserve(total);
  out.push_back('B');
  out.push_back('M');
  put_u32(out, static_cast<std::uint32_t>(total));
  put_u16(out, img.reserved1);
  put_u16(out, img.reserved2);
  put_u32(out, static_cast<std::uint32_t>(pixel_offset));

  put_u32(out, static_cast<std::uint32_t>(info_size));
  put_u32(out, static_cast<std::uint32_t>(img.width));
  put_u32(out, static_cast<std::uint32_t>(img.height));
  put_u16(out, 1);
  put_u16(out, img.bit_depth);
  put_u32(out, 0);
  put_u32(out, img.image_size_field);
  put_u32(out, static_cast<std::uint32_t>(img.x_pixels_per_meter));
  put_u32(out, static_cast<std::uint32_t>(img.y_pixels_per_meter));
  put_u32(out, img.colors_used);
  put_u32(out, img.colors_important);
  append(out, img.info_extra);
  append(out, img.palette);
  append(out, img.gap);
  append(out, img.pixels);
  append(out, img.trailer);
  return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return bytes;
}

void write_file_atomic(const std::string& path, std::span<const std::uint8_t> bytes) {
  const std::string tmp = path + ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("error writing '" + tmp + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into '" + path + "'");
  }
}

}  // namespace chaoskey
