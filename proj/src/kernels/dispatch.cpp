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

#include <cstdlib>
#include <string_view>

#include "chaoskey/kernels.hpp"

namespace chaoskey::kernels {

namespace detail {
#if defined(CHAOSKEY_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(CHAOSKEY_HAVE_NEON)
const KernelTable& neon_table();
#endif
}  // namespace detail

const KernelTable* avx2_kernels() {
#if defined(CHAOSKEY_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(CHAOSKEY_HAVE_NEON)
  // Advanced SIMD is mandatory on AArch64.
  return &detail::neon_table();
#else
  return nullptr;
#endif
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (const auto* t = avx2_kernels()) out.push_back(t);
  if (const auto* t = neon_kernels()) out.push_back(t);
  return out;
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const auto all = available_kernels();
    if (const char* forced = std::getenv("CHAOSKEY_KERNELS")) {
      for (const auto* t : all) {
        if (t->name == std::string_view(forced)) return t;
      }
    }
    return all.back();
  }();
  return *chosen;
}

}  // namespace chaoskey::kernels
