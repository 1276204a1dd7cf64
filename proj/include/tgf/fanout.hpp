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

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace tgf {

enum class FanoutStrategy : std::uint8_t { linear, logarithmic, tree_reuse };

inline FanoutStrategy parse_fanout_strategy(const std::string& s) {
  if (s == "linear") return FanoutStrategy::linear;
  if (s == "logarithmic") return FanoutStrategy::logarithmic;
  if (s == "tree_reuse") return FanoutStrategy::tree_reuse;
  throw ParamError("unknown fanout strategy: " + s);
}

namespace detail {

// Copy tree on a block of targets: inverse spray, root write, spray. The spray
// doubles sources each slot, so the sandwich adds z to every block member and
// works for arbitrary initial target states.
inline void fanout_block(Circuit& c, int z, const std::vector<int>& block) {
  const int m = static_cast<int>(block.size());
  std::vector<std::pair<int, int>> edges;  // (src, dst) in doubling order
  for (std::int64_t step = 1; step < m; step *= 2)
    for (std::int64_t i = 0; i < step && i + step < m; ++i)
      edges.emplace_back(block[i], block[i + step]);
  for (auto it = edges.rbegin(); it != edges.rend(); ++it)
    c.g2(GateKind::CX, it->first, it->second);
  c.g2(GateKind::CX, z, block[0]);
  for (const auto& e : edges) c.g2(GateKind::CX, e.first, e.second);
}

// Max fanout width reachable in depth d when batch copy trees share the slot
// window: one batch per root-write slot c, tree depth min(c, d-1-c).
inline std::int64_t tree_reuse_capacity(int d) {
  std::int64_t total = 0;
  for (int cslot = 0; cslot < d; ++cslot)
    total += std::int64_t(1) << std::min(cslot, d - 1 - cslot);
  return total;
}

}  // namespace detail

// Appends CNOT_n: every target gets XOR z; targets may hold arbitrary states.
inline void append_fanout(Circuit& c, int z, const std::vector<int>& targets,
                          FanoutStrategy strategy = FanoutStrategy::logarithmic) {
  const int n = static_cast<int>(targets.size());
  if (n == 0) return;
  switch (strategy) {
    case FanoutStrategy::linear:
      for (int t : targets) c.g2(GateKind::CX, z, t);
      return;
    case FanoutStrategy::logarithmic:
      detail::fanout_block(c, z, targets);
      return;
    case FanoutStrategy::tree_reuse: {
      int d = 1;
      while (detail::tree_reuse_capacity(d) < n) ++d;
      // Assign batches largest-first to slots nearest the centre; emitting
      // batches in root-slot order keeps the ASAP schedule within depth d.
      std::vector<int> order;
      for (int cslot = 0; cslot < d; ++cslot) order.push_back(cslot);
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        int kx = std::min(x, d - 1 - x), ky = std::min(y, d - 1 - y);
        if (kx != ky) return kx > ky;
        return x < y;
      });
      std::vector<std::vector<int>> batch_of_slot(d);
      int next = 0;
      for (int cslot : order) {
        if (next >= n) break;
        int cap = 1 << std::min(cslot, d - 1 - cslot);
        int take = std::min(cap, n - next);
        for (int i = 0; i < take; ++i) batch_of_slot[cslot].push_back(targets[next + i]);
        next += take;
      }
      for (int cslot = 0; cslot < d; ++cslot)
        if (!batch_of_slot[cslot].empty())
          detail::fanout_block(c, z, batch_of_slot[cslot]);
      return;
    }
  }
}

// Standalone CNOT_n circuit: one control, n targets.
inline Circuit build_fanout(int n, FanoutStrategy strategy) {
  if (n <= 0) throw ParamError("fanout width must be positive");
  Circuit c;
  c.add_register("z", 1, Role::control);
  int t0 = c.add_register("t", n, Role::output);
  std::vector<int> targets(n);
  for (int i = 0; i < n; ++i) targets[i] = t0 + i;
  append_fanout(c, 0, targets, strategy);
  c.validate();
  return c;
}

}  // namespace tgf
