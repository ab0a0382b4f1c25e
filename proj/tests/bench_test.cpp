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

#include "chaoskey/bench.hpp"

#include <gtest/gtest.h>

#include "chaoskey/error.hpp"
#include "test_support.hpp"

namespace chaoskey {
namespace {

std::vector<BenchImage> two_images() {
  return {{"a.bmp", testing::textured_gray(1)}, {"b.bmp", testing::textured_gray(2)}};
}

BenchOptions quick() {
  BenchOptions o;
  o.reps = 3;
  o.min_sample_s = 0.0005;
  return o;
}

TEST(BenchStatsTest, MedianAndStddev) {
  EXPECT_EQ(median(std::vector<double>{3, 1, 2}), 2.0);
  EXPECT_EQ(median(std::vector<double>{4, 1, 3, 2}), 2.0);  // lower median
  EXPECT_EQ(median(std::vector<double>{5}), 5.0);
  EXPECT_THROW(median(std::vector<double>{}), DomainError);
  EXPECT_EQ(stddev(std::vector<double>{1}), 0.0);
  EXPECT_NEAR(stddev(std::vector<double>{2, 4, 4, 4, 5, 5, 7, 9}), 2.138089935, 1e-9);
}

TEST(BenchTest, OneRecordPerImageAndVariant) {
  const auto images = two_images();
  const auto records = run_benchmark(images, kAllModes, AesKey::from_hex("000102030405060708090a0b0c0d0e0f"),
                                     testing::default_secret(WrapMode::Standard), quick());
  ASSERT_EQ(records.size(), 8u);
  for (const auto& r : records) {
    SCOPED_TRACE(std::string(to_string(r.variant)) + " " + r.image_name);
    EXPECT_EQ(r.repetitions, 3u);
    EXPECT_EQ(r.wrap_samples.size(), 3u);
    EXPECT_EQ(r.encrypt_samples.size(), 3u);
    EXPECT_EQ(r.decrypt_samples.size(), 3u);
    EXPECT_GE(r.wrap_time_s, 0.0);
    EXPECT_GT(r.encrypt_time_s, 0.0);
    EXPECT_GT(r.decrypt_time_s, 0.0);
    EXPECT_DOUBLE_EQ(r.total_time_s, r.wrap_time_s + r.encrypt_time_s + r.decrypt_time_s);
    EXPECT_EQ(r.encrypt_time_s, median(r.encrypt_samples));
    if (r.variant == WrapMode::Standard) {
      EXPECT_EQ(r.wrap_time_s, 0.0);
    } else {
      EXPECT_GT(r.wrap_time_s, 0.0);
    }
  }
  // Variant-major in the order given.
  EXPECT_EQ(records[0].variant, WrapMode::Standard);
  EXPECT_EQ(records[0].image_name, "a.bmp");
  EXPECT_EQ(records[1].image_name, "b.bmp");
  EXPECT_EQ(records[7].variant, WrapMode::Dual);
}

TEST(BenchTest, DualWrapCostsAtLeastEitherSingleMap) {
  const auto images = two_images();
  const auto records = run_benchmark(images, kAllModes, AesKey::from_hex("000102030405060708090a0b0c0d0e0f"),
                                     testing::default_secret(WrapMode::Standard), quick());
  for (const auto& img : images) {
    double logistic = 0, cross = 0, dual = 0;
    for (const auto& r : records) {
      if (r.image_name != img.name) continue;
      if (r.variant == WrapMode::Logistic) logistic = r.wrap_time_s;
      if (r.variant == WrapMode::Cross) cross = r.wrap_time_s;
      if (r.variant == WrapMode::Dual) dual = r.wrap_time_s;
    }
    EXPECT_GE(dual, std::max(logistic, cross)) << img.name;
  }
}

TEST(BenchTest, Preconditions) {
  const auto images = two_images();
  const AesKey key = AesKey::from_hex("000102030405060708090a0b0c0d0e0f");
  BenchOptions none = quick();
  none.reps = 0;
  EXPECT_THROW(run_benchmark(images, kAllModes, key, ChaosSecret::standard(), none), DomainError);
  const WrapMode logistic[] = {WrapMode::Logistic};
  EXPECT_THROW(run_benchmark(images, logistic, key, ChaosSecret::standard(), quick()), MissingParams);
  EXPECT_TRUE(run_benchmark({}, kAllModes, key, testing::default_secret(WrapMode::Standard), quick()).empty());
}

TEST(BenchCsvTest, HeaderOnlyWhenEmpty) {
  EXPECT_EQ(emit_csv({}), "variant,image,wrap_s,encrypt_s,decrypt_s,total_s,reps\n");
  EXPECT_TRUE(parse_csv(emit_csv({})).empty());
}

TEST(BenchCsvTest, RowOrderFormatAndRoundTrip) {
  std::vector<BenchRecord> recs;
  const char* names[] = {"lena64.bmp", "moon_64.bmp"};
  // Deliberately scrambled variant order.
  for (WrapMode m : {WrapMode::Dual, WrapMode::Standard, WrapMode::Cross, WrapMode::Logistic}) {
    for (const char* n : names) {
      BenchRecord r;
      r.variant = m;
      r.image_name = n;
      r.wrap_time_s = m == WrapMode::Standard ? 0.0 : 0.0000126;
      r.encrypt_time_s = 0.001;
      r.decrypt_time_s = 0.0015;
      r.total_time_s = r.wrap_time_s + r.encrypt_time_s + r.decrypt_time_s;
      r.repetitions = 5;
      recs.push_back(r);
    }
  }
  const std::string csv = emit_csv(recs);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  EXPECT_NE(csv.find("\nstandard,lena64.bmp,0.000000,0.001000,0.001500,0.002500,5\n"
                     "standard,moon_64.bmp,"),
            std::string::npos);
  EXPECT_NE(csv.find("\ndual,moon_64.bmp,0.000013,0.001000,0.001500,0.002513,5\n"), std::string::npos);

  const auto parsed = parse_csv(csv);
  ASSERT_EQ(parsed.size(), 8u);
  const WrapMode order[] = {WrapMode::Standard, WrapMode::Logistic, WrapMode::Cross, WrapMode::Dual};
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    EXPECT_EQ(parsed[i].variant, order[i / 2]);
    EXPECT_EQ(parsed[i].image_name, names[i % 2]);
    EXPECT_EQ(parsed[i].repetitions, 5u);
    EXPECT_NEAR(parsed[i].encrypt_time_s, 0.001, 5e-7);
  }
  EXPECT_EQ(emit_csv(parsed), csv);
}

TEST(BenchCsvTest, ParseErrors) {
  EXPECT_THROW(parse_csv(""), MalformedInput);
  EXPECT_THROW(parse_csv("a,b\n"), MalformedInput);
  const std::string h = "variant,image,wrap_s,encrypt_s,decrypt_s,total_s,reps\n";
  EXPECT_THROW(parse_csv(h + "fancy,a,0,0,0,0,1\n"), MalformedInput);
  EXPECT_THROW(parse_csv(h + "dual,a,0,0,0,0\n"), MalformedInput);
  EXPECT_THROW(parse_csv(h + "dual,a,x,0,0,0,1\n"), MalformedInput);
}

TEST(BenchCsvTest, GnuplotTable) {
  BenchRecord a;
  a.variant = WrapMode::Standard;
  a.image_name = "a";
  a.total_time_s = 0.5;
  BenchRecord b = a;
  b.variant = WrapMode::Dual;
  b.total_time_s = 0.75;
  const std::vector<BenchRecord> recs{a, b};
  EXPECT_EQ(emit_gnuplot(recs), "# image standard dual\na 0.500000 0.750000\n");
}

}  // namespace
}  // namespace chaoskey
