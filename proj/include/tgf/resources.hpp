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
#include <set>
#include <vector>

#include "cost_model.hpp"
#include "macros.hpp"

namespace tgf {

struct ResourceReport {
  std::int64_t t_count = 0;
  std::int64_t t_depth = 0;
  std::int64_t clifford_count = 0;
  std::int64_t clifford_depth = 0;
  std::int64_t rz_count = 0;
  std::int64_t rz_t_budget = 0;
  std::int64_t measurement_count = 0;
  std::int64_t total_gates = 0;
  int qubits_total = 0;
  int qubits_clean = 0;
  int qubits_dirty = 0;
  int classical_bits = 0;
};

namespace detail {

// Unit-duration gates; everything else is free in the depth model.
inline bool unit_duration(GateKind k) {
  switch (k) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CcCZ:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::G:
    case GateKind::Gdg:
    case GateKind::RZ:
      return true;
    default:
      return false;
  }
}

inline bool is_clifford(GateKind k) {
  switch (k) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CcX:
    case GateKind::CcZ:
    case GateKind::CcCZ:
      return true;
    default:
      return false;
  }
}

inline bool is_two_qubit_clifford(GateKind k) {
  return k == GateKind::CX || k == GateKind::CZ || k == GateKind::CcCZ;
}

}  // namespace detail

// ASAP schedule over an expanded circuit. Two-qubit Cliffords, T-family gates
// and RZ rotations take one time slot; single-qubit Cliffords and measurements
// are absorbed into the adjacent slots. t_depth counts slots holding at least
// one T-family gate; clifford_depth counts slots holding a two-qubit Clifford
// or T-family gate.
inline ResourceReport resource_report(const Circuit& circuit, const CostModel& model = {}) {
  Circuit flat = expand_macros(circuit, model);
  ResourceReport r;
  r.qubits_total = flat.n_qubits;
  r.classical_bits = flat.n_classical;
  for (const auto& reg : flat.registers)
    if (reg.role == Role::workspace_dirty) r.qubits_dirty += reg.width;
  r.qubits_clean = r.qubits_total - r.qubits_dirty;

  std::vector<std::int64_t> avail(flat.n_qubits, 0);
  std::vector<std::int64_t> cavail(flat.n_classical, 0);
  std::set<std::int64_t> t_slots;
  std::set<std::int64_t> c2_slots;
  for (const auto& g : flat.gates) {
    r.total_gates++;
    int ar = gate_arity(g.kind);
    std::int64_t start = 0;
    for (int i = 0; i < ar; ++i) start = std::max(start, avail[g.q[i]]);
    if (is_classically_controlled(g.kind)) start = std::max(start, cavail[g.cbit]);
    std::int64_t end = start + (detail::unit_duration(g.kind) ? 1 : 0);
    for (int i = 0; i < ar; ++i) avail[g.q[i]] = end;
    if (g.kind == GateKind::MZ) cavail[g.cbit] = end;

    if (is_t_family(g.kind)) {
      r.t_count++;
      t_slots.insert(start);
    } else if (g.kind == GateKind::RZ) {
      r.rz_count++;
    } else if (g.kind == GateKind::MZ) {
      r.measurement_count++;
    } else if (detail::is_clifford(g.kind)) {
      r.clifford_count++;
    }
    if (detail::is_two_qubit_clifford(g.kind)) c2_slots.insert(start);
  }
  r.t_depth = static_cast<std::int64_t>(t_slots.size());
  c2_slots.insert(t_slots.begin(), t_slots.end());
  r.clifford_depth = static_cast<std::int64_t>(c2_slots.size());
  if (r.rz_count > 0)
    r.rz_t_budget =
        r.rz_count * rz_t_cost(flat.rz_error_budget / static_cast<double>(r.rz_count));
  return r;
}

}  // namespace tgf
