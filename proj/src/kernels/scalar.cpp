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

#include <cstddef>
#include <cstdint>

#include "chaoskey/kernels.hpp"

namespace chaoskey::kernels {

namespace {

void xor_bytes_scalar(std::span<std::uint8_t> dst, std::span<const std::uint8_t> a,
                      std::span<const std::uint8_t> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
}

std::uint64_t sum_bytes_scalar(std::span<const std::uint8_t> data) {
  std::uint64_t total = 0;
  for (std::uint8_t v : data) total += v;
  return total;
}

void quantize_outer_product_scalar(std::span<const double> rows, std::span<const double> cols,
                                   std::span<std::uint8_t> out) {
  const std::size_t n = cols.size();
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows.size() && k < out.size(); ++i) {
    const double r = rows[i];
    for (std::size_t j = 0; j < n && k < out.size(); ++j, ++k) {
      const double z = (r * cols[j] + 1.0) / 2.0;
      out[k] = z < 0.5 ? 0 : 1;
    }
  }
}

double sum_f64_scalar(std::span<const double> data) {
  double s = 0.0;
  for (double v : data) s += v;
  return s;
}

CenteredMoments centered_moments_scalar(std::span<const double> a, std::span<const double> b,
                                        double mean_a, double mean_b) {
  CenteredMoments m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    m.saa += da * da;
    m.sbb += db * db;
    m.sab += da * db;
  }
  return m;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",          xor_bytes_scalar, sum_bytes_scalar, quantize_outer_product_scalar,
      sum_f64_scalar,    centered_moments_scalar,
  };
  return table;
}

}  // namespace chaoskey::kernels
