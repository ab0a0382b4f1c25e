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

// CPU-time comparison of the Standard / Logistic / Cross / Dual variants.
//
// For every (image, variant) the harness times three phases separately:
// key wrapping, image encryption (key expansion + ECB) and image decryption.
// Each phase is measured `reps` times in process CPU time after one discarded
// warm-up pass. A single measurement repeats the phase in a batch long enough
// to exceed `min_sample_s` and reports the per-call mean, which keeps
// microsecond-scale phases above clock granularity.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chaoskey/aes.hpp"
#include "chaoskey/bmp.hpp"
#include "chaoskey/key_wrap.hpp"

namespace chaoskey {

struct BenchImage {
  std::string name;
  BmpImage image;
};

struct BenchOptions {
  std::size_t reps = 5;
  double min_sample_s = 0.002;
};

struct BenchRecord {
  WrapMode variant = WrapMode::Standard;
  std::string image_name;
  double wrap_time_s = 0.0;
  double encrypt_time_s = 0.0;
  double decrypt_time_s = 0.0;
  /// Sum of the three phase medians.
  double total_time_s = 0.0;
  std::size_t repetitions = 0;

  std::vector<double> wrap_samples;
  std::vector<double> encrypt_samples;
  std::vector<double> decrypt_samples;

  /// Per-repetition wrap + encrypt + decrypt.
  std::vector<double> total_samples() const;
};

/// Process (user + system) CPU time in seconds.
double process_cpu_seconds();

/// Lower median: element ceil(n/2) of the sorted samples. DomainError if empty.
double median(std::span<const double> samples);
/// Sample standard deviation (n - 1); 0 for fewer than two samples.
double stddev(std::span<const double> samples);

/// One record per (variant, image), variant-major in the order given.
/// `secret` supplies the chaos parameters; its mode is replaced per variant.
/// Throws DomainError if reps == 0.
std::vector<BenchRecord> run_benchmark(std::span<const BenchImage> images,
                                       std::span<const WrapMode> variants, const AesKey& key,
                                       const ChaosSecret& secret, const BenchOptions& options = {});

/// Header `variant,image,wrap_s,encrypt_s,decrypt_s,total_s,reps`, rows
/// ordered Standard, Logistic, Cross, Dual and then by input order, times
/// with six decimals.
std::string emit_csv(std::span<const BenchRecord> records);
/// Inverse of emit_csv (samples are not stored). Throws MalformedInput.
std::vector<BenchRecord> parse_csv(std::string_view text);

/// Whitespace table for gnuplot: one row per image, one column per variant
/// holding total seconds.
std::string emit_gnuplot(std::span<const BenchRecord> records);

}  // namespace chaoskey
