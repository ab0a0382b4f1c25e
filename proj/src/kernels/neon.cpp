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

#include <arm_neon.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "chaoskey/kernels.hpp"

namespace chaoskey::kernels::detail {

namespace {

void xor_bytes_neon(std::span<std::uint8_t> dst, std::span<const std::uint8_t> a,
                    std::span<const std::uint8_t> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    vst1q_u8(dst.data() + i, veorq_u8(vld1q_u8(a.data() + i), vld1q_u8(b.data() + i)));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
}

std::uint64_t sum_bytes_neon(std::span<const std::uint8_t> data) {
  const std::size_t n = data.size();
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) total += vaddlvq_u8(vld1q_u8(data.data() + i));
  for (; i < n; ++i) total += data[i];
  return total;
}

void quantize_outer_product_neon(std::span<const double> rows, std::span<const double> cols,
                                 std::span<std::uint8_t> out) {
  const std::size_t n = cols.size();
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t half = vdupq_n_f64(0.5);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows.size() && k < out.size(); ++i) {
    const double r = rows[i];
    const float64x2_t vr = vdupq_n_f64(r);
    const std::size_t row_len = std::min(n, out.size() - k);
    std::size_t j = 0;
    for (; j + 2 <= row_len; j += 2) {
      // vmulq/vaddq, never vfmaq: the product must be rounded before the add.
      const float64x2_t z = vmulq_f64(vaddq_f64(vmulq_f64(vr, vld1q_f64(cols.data() + j)), one), half);
      const uint64x2_t ge = vcgeq_f64(z, half);
      out[k + j + 0] = static_cast<std::uint8_t>(vgetq_lane_u64(ge, 0) & 1);
      out[k + j + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(ge, 1) & 1);
    }
    for (; j < row_len; ++j) {
      const double z = (r * cols[j] + 1.0) / 2.0;
      out[k + j] = z < 0.5 ? 0 : 1;
    }
    k += row_len;
  }
}

double sum_f64_neon(std::span<const double> data) {
  const std::size_t n = data.size();
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(data.data() + i));
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) s += data[i];
  return s;
}

CenteredMoments centered_moments_neon(std::span<const double> a, std::span<const double> b,
                                      double mean_a, double mean_b) {
  const std::size_t n = a.size();
  const float64x2_t ma = vdupq_n_f64(mean_a);
  const float64x2_t mb = vdupq_n_f64(mean_b);
  float64x2_t saa = vdupq_n_f64(0.0);
  float64x2_t sbb = vdupq_n_f64(0.0);
  float64x2_t sab = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t da = vsubq_f64(vld1q_f64(a.data() + i), ma);
    const float64x2_t db = vsubq_f64(vld1q_f64(b.data() + i), mb);
    saa = vaddq_f64(saa, vmulq_f64(da, da));
    sbb = vaddq_f64(sbb, vmulq_f64(db, db));
    sab = vaddq_f64(sab, vmulq_f64(da, db));
  }
  CenteredMoments m{vgetq_lane_f64(saa, 0) + vgetq_lane_f64(saa, 1),
                    vgetq_lane_f64(sbb, 0) + vgetq_lane_f64(sbb, 1),
                    vgetq_lane_f64(sab, 0) + vgetq_lane_f64(sab, 1)};
  for (; i < n; ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    m.saa += da * da;
    m.sbb += db * db;
    m.sab += da * db;
  }
  return m;
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{
      "neon",        xor_bytes_neon, sum_bytes_neon, quantize_outer_product_neon,
      sum_f64_neon,  centered_moments_neon,
  };
  return table;
}

}  // namespace chaoskey::kernels::detail
