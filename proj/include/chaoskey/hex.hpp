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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chaoskey {

/// Lowercase hex, two digits per byte.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Accepts upper or lower case; throws MalformedInput on odd length or a
/// non-hex character.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace chaoskey
