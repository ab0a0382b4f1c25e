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

#include <gtest/gtest.h>

#include <filesystem>

#include "chaoskey/error.hpp"
#include "test_support.hpp"

namespace chaoskey {
namespace {

void put_u32(std::vector<std::uint8_t>& f, std::size_t off, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) f[off + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v >> (8 * i));
}

TEST(BmpTest, Gray64Layout) {
  const BmpImage img = testing::textured_gray(1);
  EXPECT_EQ(img.row_stride(), 64u);
  EXPECT_EQ(img.pixels.size(), 4096u);
  const auto file = save_bmp(img);
  EXPECT_EQ(file.size(), 14u + 40u + 1024u + 4096u);
  const BmpImage back = load_bmp(file);
  EXPECT_EQ(back.width, 64);
  EXPECT_EQ(back.height, 64);
  EXPECT_EQ(back.bit_depth, 8);
  EXPECT_EQ(back.palette.size(), 1024u);
  EXPECT_EQ(back.pixels, img.pixels);
  EXPECT_EQ(back, img);
}

TEST(BmpTest, Rgb2x2RowPadding) {
  BmpImage img = BmpImage::rgb24(2, 2);
  EXPECT_EQ(img.row_stride(), 8u);
  EXPECT_EQ(img.pixels.size(), 16u);
  img.at(0, 0, 2) = 0xff;  // top-left red lives in the second stored row
  EXPECT_EQ(img.pixels[8 + 2], 0xff);
  const BmpImage back = load_bmp(save_bmp(img));
  EXPECT_EQ(back.pixels, img.pixels);
  EXPECT_TRUE(back.palette.empty());
}

TEST(BmpTest, SaveLoadIsByteIdentity) {
  BmpImage img = testing::textured_rgb(5, 13, 7);  // stride 40 with 1 pad byte
  img.info_extra.assign(68, 0x11);                 // as in a BITMAPV4HEADER
  img.gap = {1, 2, 3};
  img.trailer = {9, 9, 9, 9, 9};
  img.x_pixels_per_meter = 1234;
  img.reserved1 = 7;
  const auto file = save_bmp(img);
  const BmpImage back = load_bmp(file);
  EXPECT_EQ(back, img);
  EXPECT_EQ(save_bmp(back), file);
}

TEST(BmpTest, ShippedImagesLoad) {
  for (const char* name : {"portrait64.bmp", "moon64.bmp"}) {
    const auto file = read_file(std::string(CHAOSKEY_DATA_DIR) + "/" + name);
    const BmpImage img = load_bmp(file);
    EXPECT_EQ(img.width, 64) << name;
    EXPECT_EQ(img.height, 64) << name;
    EXPECT_EQ(img.bit_depth, 8) << name;
    EXPECT_EQ(img.pixels.size(), 4096u) << name;
    EXPECT_EQ(save_bmp(img), file) << name;
  }
}

TEST(BmpTest, RejectsBadInput) {
  const auto good = save_bmp(testing::textured_gray(2, 8, 8));

  auto f = good;
  f[0] = 'X';
  EXPECT_THROW(load_bmp(f), MalformedInput);

  EXPECT_THROW(load_bmp(std::span(good).first(30)), MalformedInput);
  EXPECT_THROW(load_bmp(std::span(good).first(good.size() - 1)), MalformedInput);

  f = good;
  put_u32(f, 30, 1);  // BI_RLE8
  EXPECT_THROW(load_bmp(f), UnsupportedFormat);

  f = good;
  f[28] = 16;
  EXPECT_THROW(load_bmp(f), UnsupportedFormat);

  f = good;
  put_u32(f, 22, static_cast<std::uint32_t>(-8));  // top-down
  EXPECT_THROW(load_bmp(f), UnsupportedFormat);

  f = good;
  put_u32(f, 14, 12);  // BITMAPCOREHEADER
  EXPECT_THROW(load_bmp(f), UnsupportedFormat);

  f = good;
  put_u32(f, 10, 60);  // pixel offset inside the palette
  EXPECT_THROW(load_bmp(f), MalformedInput);

  f = good;
  put_u32(f, 18, 0);
  EXPECT_THROW(load_bmp(f), MalformedInput);
}

TEST(BmpTest, AtomicWriteLeavesNoPartialFile) {
  testing::TempDir dir;
  const std::string path = dir.file("x.bmp");
  const std::vector<std::uint8_t> bytes{1, 2, 3};
  write_file_atomic(path, bytes);
  EXPECT_EQ(read_file(path), bytes);
  EXPECT_FALSE(std::filesystem::exists(path + ".partial"));
  EXPECT_THROW(write_file_atomic(dir.file("missing/dir/x.bmp"), bytes), IoError);
  EXPECT_THROW(read_file(dir.file("nope.bmp")), IoError);
}

}  // namespace
}  // namespace chaoskey
