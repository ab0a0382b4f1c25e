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

#include <ostream>

namespace chaoskey::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDegenerateOrbit = 3,
  kIoOrFormat = 4,
  kBadPadding = 5,
};

/// Entry point behind the chaoskey executable. Never throws; every failure
/// is reported as one line on `err` and mapped to an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chaoskey::cli
