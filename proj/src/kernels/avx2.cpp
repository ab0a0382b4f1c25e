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

// Compiled with -mavx2 only; callers reach it through avx2_kernels(), which
// checks the CPU first.

#include <immintrin.h>

#include <algorithm>

#include <cstddef>
#include <cstdint>

#include "chaoskey/kernels.hpp"

namespace chaoskey::kernels::detail {

namespace {

void xor_bytes_avx2(std::span<std::uint8_t> dst, std::span<const std::uint8_t> a,
                    std::span<const std::uint8_t> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), _mm256_xor_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
}

std::uint64_t sum_bytes_avx2(std::span<const std::uint8_t> data) {
  const std::size_t n = data.size();
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data.data() + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += data[i];
  return total;
}

void quantize_outer_product_avx2(std::span<const double> rows, std::span<const double> cols,
                                 std::span<std::uint8_t> out) {
  const std::size_t n = cols.size();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows.size() && k < out.size(); ++i) {
    const double r = rows[i];
    const __m256d vr = _mm256_set1_pd(r);
    const std::size_t row_len = std::min(n, out.size() - k);
    std::size_t j = 0;
    for (; j + 4 <= row_len; j += 4) {
      const __m256d z = _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(vr, _mm256_loadu_pd(cols.data() + j)), one), half);
      const int mask = _mm256_movemask_pd(_mm256_cmp_pd(z, half, _CMP_GE_OQ));
      out[k + j + 0] = static_cast<std::uint8_t>(mask & 1);
      out[k + j + 1] = static_cast<std::uint8_t>((mask >> 1) & 1);
      out[k + j + 2] = static_cast<std::uint8_t>((mask >> 2) & 1);
      out[k + j + 3] = static_cast<std::uint8_t>((mask >> 3) & 1);
    }
    for (; j < row_len; ++j) {
      const double z = (r * cols[j] + 1.0) / 2.0;
      out[k + j] = z < 0.5 ? 0 : 1;
    }
    k += row_len;
  }
}

double hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double sum_f64_avx2(std::span<const double> data) {
  const std::size_t n = data.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(data.data() + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += data[i];
  return s;
}

CenteredMoments centered_moments_avx2(std::span<const double> a, std::span<const double> b,
                                      double mean_a, double mean_b) {
  const std::size_t n = a.size();
  const __m256d ma = _mm256_set1_pd(mean_a);
  const __m256d mb = _mm256_set1_pd(mean_b);
  __m256d saa = _mm256_setzero_pd();
  __m256d sbb = _mm256_setzero_pd();
  __m256d sab = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d da = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), ma);
    const __m256d db = _mm256_sub_pd(_mm256_loadu_pd(b.data() + i), mb);
    saa = _mm256_add_pd(saa, _mm256_mul_pd(da, da));
    sbb = _mm256_add_pd(sbb, _mm256_mul_pd(db, db));
    sab = _mm256_add_pd(sab, _mm256_mul_pd(da, db));
  }
  CenteredMoments m{hsum(saa), hsum(sbb), hsum(sab)};
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

const KernelTable& avx2_table() {
  static const KernelTable table{
      "avx2",        xor_bytes_avx2, sum_bytes_avx2, quantize_outer_product_avx2,
      sum_f64_avx2,  centered_moments_avx2,
  };
  return table;
}

}  // namespace chaoskey::kernels::detail
