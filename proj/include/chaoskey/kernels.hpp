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

// Data-parallel inner loops used by the keystream generators, key wrapping
// and the randomness analysis. Every kernel has a scalar reference and
// optional AVX2 / NEON variants picked at runtime.
//
// Integer kernels and quantize_outer_product are bit-identical across
// variants (the latter performs the same IEEE binary64 multiply, add and
// halving per element). The f64 reductions reassociate sums and therefore
// agree only to rounding.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace chaoskey::kernels {

struct CenteredMoments {
  double saa = 0.0;  // sum (a - mean_a)^2
  double sbb = 0.0;  // sum (b - mean_b)^2
  double sab = 0.0;  // sum (a - mean_a)(b - mean_b)
};

struct KernelTable {
  std::string_view name;

  /// dst[i] = a[i] ^ b[i]. dst may alias a or b.
  void (*xor_bytes)(std::span<std::uint8_t> dst, std::span<const std::uint8_t> a,
                    std::span<const std::uint8_t> b);

  /// Sum of all bytes; for a 0/1 bit array this is the ones count.
  std::uint64_t (*sum_bytes)(std::span<const std::uint8_t> data);

  /// out[i*cols.size() + j] = ((rows[i]*cols[j] + 1) / 2 >= 0.5) for the
  /// first out.size() entries of the row-major product matrix.
  void (*quantize_outer_product)(std::span<const double> rows, std::span<const double> cols,
                                 std::span<std::uint8_t> out);

  double (*sum_f64)(std::span<const double> data);

  /// a and b must have equal length.
  CenteredMoments (*centered_moments)(std::span<const double> a, std::span<const double> b,
                                      double mean_a, double mean_b);
};

const KernelTable& scalar_kernels();

/// nullptr when not compiled in or not supported by the running CPU.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// Best available variant, chosen once. The environment variable
/// CHAOSKEY_KERNELS=scalar|avx2|neon forces a specific one when available.
const KernelTable& active();

}  // namespace chaoskey::kernels
