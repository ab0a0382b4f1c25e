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

// Chaotic orbit and keystream generators.
//
// Logistic map:   x' = mu * x * (1 - x)
// Cross map:      x' = 1 - mu * y^2,   y' = cos(k * arccos x)
//
// Keystreams must be reproducible bit-for-bit on every platform, because the
// decrypting side regenerates them. All arithmetic is IEEE-754 binary64 in
// the literal evaluation order above, the build disables FMA contraction,
// and the cross map evaluates cos(k arccos x) through the Chebyshev
// recurrence instead of libm.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chaoskey {

inline constexpr std::uint32_t kDefaultBurnIn = 1000;

struct LogisticParams {
  double mu = 3.99;  // (0, 4]
  double x0 = 0.3;   // (0, 1)
  std::uint32_t burn_in = kDefaultBurnIn;

  /// Throws DomainError unless mu is in (0, 4] and x0 in (0, 1).
  void validate() const;
  friend bool operator==(const LogisticParams&, const LogisticParams&) = default;
};

struct CrossParams {
  double mu = 2.0;     // (0, 2]; larger values push x outside [-1, 1]
  std::uint32_t k = 6;  // >= 1
  double x0 = 0.1;     // [-1, 1]
  double y0 = 0.3;     // [-1, 1]
  std::uint32_t burn_in = kDefaultBurnIn;

  void validate() const;
  friend bool operator==(const CrossParams&, const CrossParams&) = default;
};

/// Ordered keystream bits, one byte (0 or 1) per bit.
class Bitstream {
 public:
  Bitstream() = default;
  /// Throws DomainError if any element is not 0 or 1.
  explicit Bitstream(std::vector<std::uint8_t> bits);

  static Bitstream zeros(std::size_t n) { return Bitstream(std::vector<std::uint8_t>(n, 0)); }

  /// Unpacks the first `nbits` bits of `bytes`, most significant bit first.
  static Bitstream from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  /// Packs MSB-first; a trailing partial byte is zero-filled.
  std::vector<std::uint8_t> to_bytes() const;

  /// Throws DomainError on length mismatch.
  friend Bitstream operator^(const Bitstream& a, const Bitstream& b);
  friend bool operator==(const Bitstream&, const Bitstream&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Threshold quantizer: 0 below 0.5, 1 on [0.5, 1]. DomainError outside [0, 1].
std::uint8_t quantize(double z);

/// The `n` values following `burn_in` discarded iterations (the first value
/// returned is one step past the last discarded state).
///
/// Throws DegenerateOrbit when, among the first max(n, 128) post-burn-in
/// values, 128 consecutive quantized bits are equal or 128 consecutive values
/// span less than 2^-20. The check always covers 128 values so that the
/// verdict depends only on the parameters, not on how many values are asked
/// for.
std::vector<double> logistic_orbit(const LogisticParams& params, std::size_t n);

/// `len` >= 1 bits, quantize() applied to logistic_orbit().
Bitstream logistic_keystream(const LogisticParams& params, std::size_t len);

/// cos(k arccos x) via T0 = 1, T1 = x, T(j+1) = 2x T(j) - T(j-1), clamped
/// to [-1, 1]. Throws DomainError for |x| > 1 or k == 0.
double chebyshev_cos(std::uint32_t k, double x);

struct CrossPoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const CrossPoint&, const CrossPoint&) = default;
};

/// One iteration of the cross map from `state` with p.mu and p.k (the seed
/// fields of `p` are ignored).
CrossPoint cross_step(const CrossParams& p, CrossPoint state);

struct CrossOrbit {
  std::vector<double> x;
  std::vector<double> y;
};

/// Same burn-in and degeneracy rules as logistic_orbit, applied to both
/// coordinates (bits taken as quantize((v + 1) / 2)).
CrossOrbit cross_orbit(const CrossParams& params, std::size_t n);

/// Outer-product keystream. With side = ceil(sqrt(len)), Y (side values) is
/// the column and X the row; entry (i, j) = Y[i] * X[j] is mapped to [0, 1]
/// by (z + 1) / 2, quantized, flattened row-major and truncated to `len`.
Bitstream cross_keystream(const CrossParams& params, std::size_t len);

/// logistic_keystream XOR cross_keystream.
Bitstream dual_keystream(const LogisticParams& logistic, const CrossParams& cross,
                         std::size_t len);

/// Smallest s with s * s >= n.
std::size_t ceil_sqrt(std::size_t n);

}  // namespace chaoskey
