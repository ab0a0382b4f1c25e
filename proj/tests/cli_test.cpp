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

#include "chaoskey/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chaoskey/bench.hpp"
#include "chaoskey/bmp.hpp"
#include "chaoskey/params_io.hpp"
#include "test_support.hpp"

namespace chaoskey {
namespace {

constexpr const char* kKey = "000102030405060708090a0b0c0d0e0f";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "chaoskey");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    params_ = dir_.file("p.txt");
    write_text(params_, format_params({LogisticParams{}, CrossParams{}}));
    image_ = dir_.file("in.bmp");
    write_file_atomic(image_, save_bmp(testing::textured_gray(1)));
  }

  testing::TempDir dir_;
  std::string params_;
  std::string image_;
};

TEST_F(CliTest, WrapPrintsSameLengthHex) {
  const Result r = run({"wrap", "--key", kKey, "--mode", "logistic", "--params", params_});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "c6dbd11bf86097a53b83c370bb4229c6\n");

  const Result s = run({"wrap", "--key", kKey, "--mode", "standard"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out, std::string(kKey) + "\n");

  const std::string k256(64, 'a');
  const Result d = run({"wrap", "--key", k256, "--mode", "dual", "--params", params_});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.out.size(), 65u);
}

TEST_F(CliTest, EncryptDecryptRoundTrip) {
  for (const char* mode : {"standard", "logistic", "cross", "dual"}) {
    const std::string enc = dir_.file(std::string("enc-") + mode + ".bmp");
    const std::string dec = dir_.file(std::string("dec-") + mode + ".bmp");
    Result r = run({"encrypt", "--in", image_, "--out", enc, "--key", kKey, "--mode", mode, "--params", params_});
    ASSERT_EQ(r.code, 0) << r.err;
    r = run({"decrypt", "--in", enc, "--out", dec, "--key", kKey, "--mode", mode, "--params", params_});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(read_file(dec), read_file(image_)) << mode;
    EXPECT_NE(load_bmp(read_file(enc)).pixels, load_bmp(read_file(image_)).pixels);
  }
}

TEST_F(CliTest, WrongSecretExitsWithBadPadding) {
  const std::string enc = dir_.file("enc.bmp");
  const std::string dec = dir_.file("dec.bmp");
  ASSERT_EQ(run({"encrypt", "--in", image_, "--out", enc, "--key", kKey, "--mode", "dual", "--params", params_}).code, 0);

  ChaosParamSet wrong{LogisticParams{}, CrossParams{}};
  wrong.logistic->mu -= 1e-12;
  const std::string wrong_path = dir_.file("wrong.txt");
  write_text(wrong_path, format_params(wrong));
  const Result r = run({"decrypt", "--in", enc, "--out", dec, "--key", kKey, "--mode", "dual", "--params", wrong_path});
  EXPECT_EQ(r.code, 5);
  EXPECT_FALSE(r.err.empty());
  EXPECT_FALSE(std::filesystem::exists(dec));
  EXPECT_FALSE(std::filesystem::exists(dec + ".partial"));
}

TEST_F(CliTest, DegenerateSeedsExitThree) {
  const std::string bad = dir_.file("bad.txt");
  write_text(bad, format_params({LogisticParams{4.0, 0.5, 1000}, CrossParams{2.0, 6, 0.5, 0.5, 1000}}));
  EXPECT_EQ(run({"wrap", "--key", kKey, "--mode", "logistic", "--params", bad}).code, 3);
  EXPECT_EQ(run({"wrap", "--key", kKey, "--mode", "cross", "--params", bad}).code, 3);
  const std::string out = dir_.file("o.bmp");
  EXPECT_EQ(run({"encrypt", "--in", image_, "--out", out, "--key", kKey, "--mode", "dual", "--params", bad}).code, 3);
  EXPECT_FALSE(std::filesystem::exists(out));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"wrap", "--key", kKey, "--mode", "logistic"}).code, 2);  // no --params
  EXPECT_EQ(run({"wrap", "--key", "0011", "--mode", "standard"}).code, 2);
  EXPECT_EQ(run({"wrap", "--key", std::string(32, 'g'), "--mode", "standard"}).code, 2);
  EXPECT_EQ(run({"wrap", "--key", kKey, "--mode", "henon"}).code, 2);
  EXPECT_EQ(run({"wrap", "--mode", "standard"}).code, 2);
  EXPECT_EQ(run({"encrypt", "--in", image_, "--key", kKey, "--mode", "standard"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "--mode", "standard"}).code, 2);
  EXPECT_EQ(run({"bench", "--images", image_, "--modes", "dual,nope"}).code, 2);

  const std::string only_cross = dir_.file("cross-only.txt");
  write_text(only_cross, format_params({std::nullopt, CrossParams{}}));
  EXPECT_EQ(run({"wrap", "--key", kKey, "--mode", "dual", "--params", only_cross}).code, 2);
}

TEST_F(CliTest, IoAndFormatErrorsExitFour) {
  const std::string out = dir_.file("o.bmp");
  EXPECT_EQ(run({"encrypt", "--in", dir_.file("missing.bmp"), "--out", out, "--key", kKey, "--mode", "standard"}).code, 4);
  const std::string junk = dir_.file("junk.bmp");
  write_text(junk, "definitely not a bitmap, but long enough to have a header.........");
  EXPECT_EQ(run({"encrypt", "--in", junk, "--out", out, "--key", kKey, "--mode", "standard"}).code, 4);
  EXPECT_EQ(run({"wrap", "--key", kKey, "--mode", "logistic", "--params", dir_.file("nope.txt")}).code, 4);
  const std::string garbled = dir_.file("garbled.txt");
  write_text(garbled, "[logistic]\nmu=3.99\n");
  EXPECT_EQ(run({"wrap", "--key", kKey, "--mode", "logistic", "--params", garbled}).code, 4);
  // Decrypting a plain image: no cipher tail chunk.
  EXPECT_EQ(run({"decrypt", "--in", image_, "--out", out, "--key", kKey, "--mode", "standard"}).code, 4);
  EXPECT_FALSE(std::filesystem::exists(out));
}

TEST_F(CliTest, AnalyzeKeystream) {
  const std::string csv = dir_.file("a.csv");
  const Result r = run({"analyze", "--mode", "cross", "--params", params_, "--bits", "100000", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("source=cross\n"), std::string::npos);
  EXPECT_NE(r.out.find("bits=100000\n"), std::string::npos);
  EXPECT_NE(r.out.find("ones_fraction=0.501330\n"), std::string::npos);
  EXPECT_NE(r.out.find("serial_correlation_lag1=0.006163\n"), std::string::npos);
  const auto bytes = read_file(csv);
  const std::string text(bytes.begin(), bytes.end());
  EXPECT_EQ(text.rfind("source,bits,ones_fraction,lag,serial_correlation,byte_entropy\ncross,100000,0.501330,1,", 0), 0u);
}

TEST_F(CliTest, AnalyzeImagePayload) {
  const std::string enc = dir_.file("enc.bmp");
  ASSERT_EQ(run({"encrypt", "--in", image_, "--out", enc, "--key", kKey, "--mode", "standard"}).code, 0);
  const Result r = run({"analyze", "--in", enc});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bits=32768\n"), std::string::npos);
  const auto pos = r.out.find("byte_entropy=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_GT(std::stod(r.out.substr(pos + 13)), 7.9);
  EXPECT_EQ(run({"analyze", "--in", image_, "--raw", "--lag", "3"}).code, 0);
}

TEST_F(CliTest, BenchWritesEightRows) {
  const std::string second = dir_.file("second.bmp");
  write_file_atomic(second, save_bmp(testing::textured_gray(2)));
  const std::string csv = dir_.file("r.csv");
  const std::string plot = dir_.file("r.dat");
  const Result r = run({"bench", "--images", image_ + "," + second, "--modes", "all", "--reps", "2", "--out", csv,
                        "--gnuplot", plot});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto bytes = read_file(csv);
  const auto records = parse_csv(std::string(bytes.begin(), bytes.end()));
  ASSERT_EQ(records.size(), 8u);
  EXPECT_EQ(records[0].image_name, "in.bmp");
  EXPECT_EQ(records[1].image_name, "second.bmp");
  EXPECT_TRUE(std::filesystem::exists(plot));

  const Result subset = run({"bench", "--images", image_, "--modes", "standard,cross", "--reps", "1"});
  ASSERT_EQ(subset.code, 0) << subset.err;
  EXPECT_EQ(std::count(subset.out.begin(), subset.out.end(), '\n'), 3);
}

TEST_F(CliTest, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("encrypt"), std::string::npos);
}

}  // namespace
}  // namespace chaoskey
