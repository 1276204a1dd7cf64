// Copyright 2026 The tgf authors
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

#include "tgf/errors.hpp"

namespace tgf {

inline int floor_log2(std::uint64_t n) {
  if (n == 0) throw ParamError("floor_log2: argument must be positive");
  int k = 0;
  while (n >>= 1) ++k;
  return k;
}

inline int ceil_log2(std::uint64_t n) {
  if (n == 0) throw ParamError("ceil_log2: argument must be positive");
  int k = floor_log2(n);
  return (std::uint64_t(1) << k) == n ? k : k + 1;
}

inline bool is_power_of_two(std::uint64_t n) {
  return n != 0 && (n & (n - 1)) == 0;
}

}  // namespace tgf
