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

#include <cmath>
#include <cstdint>

#include "circuit.hpp"

namespace tgf {

// T cost of synthesizing one RZ to accuracy delta.
inline std::int64_t rz_t_cost(double delta) {
  if (delta <= 0 || delta >= 1) throw ParamError("rz_t_cost: delta must be in (0,1)");
  return static_cast<std::int64_t>(std::ceil(3.0 * std::log2(1.0 / delta)));
}

struct CostModel {
  ToffoliStrategy toffoli_strategy = ToffoliStrategy::and_gadget_measured;
  bool uncompute_free_via_measurement = true;
  // Scratch qubits a builder may borrow in any state.
  int dirty_budget = 0;

  ToffoliStrategy resolve(GateKind k, const MacroPolicy& p) const {
    std::optional<ToffoliStrategy> o;
    if (k == GateKind::CCX) o = p.ccx;
    else if (k == GateKind::CSWAP) o = p.cswap;
    else o = p.and_pair;
    return o ? *o : toffoli_strategy;
  }
};

}  // namespace tgf
