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

// Chaos parameter files.
//
//   # comment
//   [logistic]
//   mu=400feb851eb851ec
//   x0=3fd3333333333333
//   burn_in=1000
//
//   [cross]
//   mu=4000000000000000
//   k=6
//   x0=3fb999999999999a
//   y0=3fd3333333333333
//   burn_in=1000
//
// Reals are the 16 hex digits of their binary64 bit pattern (lowercase on
// write, either case on read) so that no decimal round trip can perturb a
// keystream. Integers are decimal. Within a section mu and x0 (logistic) or
// x0 and y0 (cross) are required; the rest default to LogisticParams /
// CrossParams defaults.

#include <optional>
#include <string>
#include <string_view>

#include "chaoskey/chaos.hpp"

namespace chaoskey {

struct ChaosParamSet {
  std::optional<LogisticParams> logistic;
  std::optional<CrossParams> cross;

  friend bool operator==(const ChaosParamSet&, const ChaosParamSet&) = default;
};

/// Throws MalformedInput on syntax errors and DomainError when a parsed
/// parameter violates its range.
ChaosParamSet parse_params(std::string_view text);

std::string format_params(const ChaosParamSet& params);

std::string encode_f64(double v);
double decode_f64(std::string_view hex16);

}  // namespace chaoskey
