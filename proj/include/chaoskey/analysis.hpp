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

// Minimal randomness battery: monobit frequency, lag-k Pearson
// autocorrelation and Shannon byte entropy.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "chaoskey/chaos.hpp"

namespace chaoskey {

struct BitStats {
  std::size_t n = 0;
  double ones_fraction = 0.0;
  /// Absent for n < 2 or constant input.
  std::optional<double> serial_correlation_lag1;
};

/// DomainError on an empty stream.
double monobit_fraction(const Bitstream& bits);

/// Pearson correlation of seq[0, n-lag) against seq[lag, n), clamped to
/// [-1, 1]. DomainError unless 1 <= lag < n; ConstantInput when either
/// window has zero variance.
double serial_correlation(std::span<const double> seq, std::size_t lag);
double serial_correlation(const Bitstream& bits, std::size_t lag);

/// Shannon entropy of the byte histogram in bits per byte, in [0, 8].
/// DomainError on empty input.
double byte_entropy(std::span<const std::uint8_t> data);

BitStats bit_stats(const Bitstream& bits);

}  // namespace chaoskey
