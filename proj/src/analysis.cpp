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

#include "chaoskey/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "chaoskey/error.hpp"
#include "chaoskey/kernels.hpp"

namespace chaoskey {

double monobit_fraction(const Bitstream& bits) {
  if (bits.empty()) throw DomainError("monobit_fraction of an empty stream");
  const auto ones = kernels::active().sum_bytes(bits.bits());
  return static_cast<double>(ones) / static_cast<double>(bits.size());
}

double serial_correlation(std::span<const double> seq, std::size_t lag) {
  if (lag == 0 || lag >= seq.size()) {
    throw DomainError("serial_correlation needs 1 <= lag < n");
  }
  const auto& k = kernels::active();
  const std::size_t m = seq.size() - lag;
  const auto a = seq.first(m);
  const auto b = seq.subspan(lag, m);
  const double mean_a = k.sum_f64(a) / static_cast<double>(m);
  const double mean_b = k.sum_f64(b) / static_cast<double>(m);
  const kernels::CenteredMoments mom = k.centered_moments(a, b, mean_a, mean_b);
  if (mom.saa == 0.0 || mom.sbb == 0.0) {
    throw ConstantInput("serial_correlation of a constant sequence");
  }
  return std::clamp(mom.sab / std::sqrt(mom.saa * mom.sbb), -1.0, 1.0);
}

double serial_correlation(const Bitstream& bits, std::size_t lag) {
  std::vector<double> seq(bits.bits().begin(), bits.bits().end());
  return serial_correlation(seq, lag);
}

double byte_entropy(std::span<const std::uint8_t> data) {
  if (data.empty()) throw DomainError("byte_entropy of empty input");
  std::array<std::size_t, 256> hist{};
  for (std::uint8_t b : data) ++hist[b];
  const double n = static_cast<double>(data.size());
  double h = 0.0;
  for (std::size_t c : hist) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return std::clamp(h, 0.0, 8.0);
}

BitStats bit_stats(const Bitstream& bits) {
  BitStats s;
  s.n = bits.size();
  s.ones_fraction = monobit_fraction(bits);
  if (s.n >= 2) {
    try {
      s.serial_correlation_lag1 = serial_correlation(bits, 1);
    } catch (const ConstantInput&) {
    }
  }
  return s;
}

}  // namespace chaoskey
