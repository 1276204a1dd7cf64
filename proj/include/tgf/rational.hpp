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
#include <numeric>
#include <string>

#include "errors.hpp"

namespace tgf {

// Angle in turns, reduced mod 1 to [0, 1), stored as num/den in lowest terms.
// RZ(t) = diag(1, e^{2*pi*i*t}).
struct Turn {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Turn() = default;
  Turn(std::int64_t n, std::int64_t d) {
    if (d <= 0) throw ParamError("Turn: denominator must be positive");
    n %= d;
    if (n < 0) n += d;
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
  }

  bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Turn operator+(const Turn& o) const {
    std::int64_t g = std::gcd(den, o.den);
    std::int64_t l = den / g * o.den;
    return Turn(num * (l / den) + o.num * (l / o.den), l);
  }
  Turn operator-() const { return Turn(-num, den); }
  Turn half() const { return Turn(num, 2 * den); }
  bool operator==(const Turn& o) const { return num == o.num && den == o.den; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace tgf
