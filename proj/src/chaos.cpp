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

#include "chaoskey/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "chaoskey/error.hpp"
#include "chaoskey/kernels.hpp"

namespace chaoskey {

namespace {

constexpr std::size_t kDegenerateWindow = 128;
const double kDegenerateBand = std::ldexp(1.0, -20);

// Sliding-window detector for the two collapse patterns: a run of equal
// quantized bits, or values pinned inside a band narrower than 2^-20.
class DegeneracyWatch {
 public:
  explicit DegeneracyWatch(const char* what) : what_(what) {}

  void push(double v, std::uint8_t bit) {
    run_ = (index_ > 0 && bit == last_bit_) ? run_ + 1 : 1;
    last_bit_ = bit;
    if (run_ >= kDegenerateWindow) {
      throw DegenerateOrbit(std::string(what_) + ": " + std::to_string(kDegenerateWindow) +
                            " consecutive equal bits after burn-in");
    }

    while (!max_.empty() && max_.back().second <= v) max_.pop_back();
    while (!min_.empty() && min_.back().second >= v) min_.pop_back();
    max_.emplace_back(index_, v);
    min_.emplace_back(index_, v);
    if (index_ + 1 >= kDegenerateWindow) {
      const std::size_t first = index_ + 1 - kDegenerateWindow;
      while (max_.front().first < first) max_.pop_front();
      while (min_.front().first < first) min_.pop_front();
      if (max_.front().second - min_.front().second < kDegenerateBand) {
        throw DegenerateOrbit(std::string(what_) + ": " + std::to_string(kDegenerateWindow) +
                              " consecutive values within 2^-20 after burn-in");
      }
    }
    ++index_;
  }

 private:
  const char* what_;
  std::size_t index_ = 0;
  std::size_t run_ = 0;
  std::uint8_t last_bit_ = 0;
  std::deque<std::pair<std::size_t, double>> max_;
  std::deque<std::pair<std::size_t, double>> min_;
};

std::uint8_t quantize_signed(double v) { return quantize((v + 1.0) / 2.0); }

void require_length(std::size_t len) {
  if (len == 0) throw DomainError("keystream length must be at least 1");
}

}  // namespace

void LogisticParams::validate() const {
  if (!(mu > 0.0 && mu <= 4.0)) throw DomainError("logistic mu must lie in (0, 4]");
  if (!(x0 > 0.0 && x0 < 1.0)) throw DomainError("logistic x0 must lie in (0, 1)");
}

void CrossParams::validate() const {
  if (!(mu > 0.0 && mu <= 2.0)) throw DomainError("cross mu must lie in (0, 2]");
  if (k == 0) throw DomainError("cross k must be a positive integer");
  if (!(x0 >= -1.0 && x0 <= 1.0)) throw DomainError("cross x0 must lie in [-1, 1]");
  if (!(y0 >= -1.0 && y0 <= 1.0)) throw DomainError("cross y0 must lie in [-1, 1]");
}

Bitstream::Bitstream(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw DomainError("bitstream elements must be 0 or 1");
  }
}

Bitstream Bitstream::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  if (nbits > bytes.size() * 8) throw DomainError("not enough bytes for requested bit count");
  std::vector<std::uint8_t> bits(nbits);
  for (std::size_t i = 0; i < nbits; ++i) bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
  return Bitstream(std::move(bits));
}

std::vector<std::uint8_t> Bitstream::to_bytes() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out[i / 8] |= static_cast<std::uint8_t>(bits_[i] << (7 - i % 8));
  }
  return out;
}

Bitstream operator^(const Bitstream& a, const Bitstream& b) {
  if (a.size() != b.size()) throw DomainError("bitstream XOR needs equal lengths");
  Bitstream out;
  out.bits_.resize(a.size());
  kernels::active().xor_bytes(out.bits_, a.bits_, b.bits_);
  return out;
}

std::uint8_t quantize(double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("quantize input must lie in [0, 1]");
  return z < 0.5 ? 0 : 1;
}

std::vector<double> logistic_orbit(const LogisticParams& params, std::size_t n) {
  params.validate();
  const double mu = params.mu;
  double x = params.x0;
  for (std::uint32_t i = 0; i < params.burn_in; ++i) x = mu * x * (1.0 - x);

  DegeneracyWatch watch("logistic orbit");
  const std::size_t checked = std::max(n, kDegenerateWindow);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < checked; ++i) {
    x = mu * x * (1.0 - x);
    watch.push(x, quantize(x));
    if (i < n) out.push_back(x);
  }
  return out;
}

Bitstream logistic_keystream(const LogisticParams& params, std::size_t len) {
  require_length(len);
  const std::vector<double> orbit = logistic_orbit(params, len);
  std::vector<std::uint8_t> bits(len);
  std::transform(orbit.begin(), orbit.end(), bits.begin(), quantize);
  return Bitstream(std::move(bits));
}

double chebyshev_cos(std::uint32_t k, double x) {
  if (k == 0) throw DomainError("chebyshev_cos needs k >= 1");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("chebyshev_cos needs |x| <= 1");
  double prev = 1.0;
  double cur = x;
  for (std::uint32_t j = 1; j < k; ++j) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return std::clamp(cur, -1.0, 1.0);
}

CrossPoint cross_step(const CrossParams& p, CrossPoint state) {
  return {1.0 - p.mu * (state.y * state.y), chebyshev_cos(p.k, state.x)};
}

CrossOrbit cross_orbit(const CrossParams& params, std::size_t n) {
  params.validate();
  CrossPoint s{params.x0, params.y0};
  for (std::uint32_t i = 0; i < params.burn_in; ++i) s = cross_step(params, s);

  DegeneracyWatch watch_x("cross orbit x");
  DegeneracyWatch watch_y("cross orbit y");
  const std::size_t checked = std::max(n, kDegenerateWindow);
  CrossOrbit out;
  out.x.reserve(n);
  out.y.reserve(n);
  for (std::size_t i = 0; i < checked; ++i) {
    s = cross_step(params, s);
    watch_x.push(s.x, quantize_signed(s.x));
    watch_y.push(s.y, quantize_signed(s.y));
    if (i < n) {
      out.x.push_back(s.x);
      out.y.push_back(s.y);
    }
  }
  return out;
}

std::size_t ceil_sqrt(std::size_t n) {
  auto s = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while (s * s < n) ++s;
  return s;
}

Bitstream cross_keystream(const CrossParams& params, std::size_t len) {
  require_length(len);
  const std::size_t side = ceil_sqrt(len);
  const CrossOrbit orbit = cross_orbit(params, side);
  std::vector<std::uint8_t> bits(len);
  kernels::active().quantize_outer_product(orbit.y, orbit.x, bits);
  return Bitstream(std::move(bits));
}

Bitstream dual_keystream(const LogisticParams& logistic, const CrossParams& cross,
                         std::size_t len) {
  return logistic_keystream(logistic, len) ^ cross_keystream(cross, len);
}

}  // namespace chaoskey
