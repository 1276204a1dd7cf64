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

#include "circuit.hpp"
#include "cost_model.hpp"

namespace tgf {

// Exact Toffoli, 7 T gates.
inline void append_ccx_seven_t(Circuit& c, int a, int b, int t) {
  c.g1(GateKind::H, t);
  c.g2(GateKind::CX, b, t);
  c.g1(GateKind::Tdg, t);
  c.g2(GateKind::CX, a, t);
  c.g1(GateKind::T, t);
  c.g2(GateKind::CX, b, t);
  c.g1(GateKind::Tdg, t);
  c.g2(GateKind::CX, a, t);
  c.g1(GateKind::T, b);
  c.g1(GateKind::T, t);
  c.g1(GateKind::H, t);
  c.g2(GateKind::CX, a, b);
  c.g1(GateKind::Tdg, b);
  c.g2(GateKind::CX, a, b);
  c.g1(GateKind::T, a);
}

// Exact CCZ, 7 T gates, no Hadamards.
inline void append_ccz_seven_t(Circuit& c, int a, int b, int t) {
  c.g2(GateKind::CX, b, t);
  c.g1(GateKind::Tdg, t);
  c.g2(GateKind::CX, a, t);
  c.g1(GateKind::T, t);
  c.g2(GateKind::CX, b, t);
  c.g1(GateKind::Tdg, t);
  c.g2(GateKind::CX, a, t);
  c.g1(GateKind::T, t);
  c.g1(GateKind::T, b);
  c.g2(GateKind::CX, a, b);
  c.g1(GateKind::Tdg, b);
  c.g2(GateKind::CX, a, b);
  c.g1(GateKind::T, a);
}

// Toffoli up to a relative phase: CCX followed by -1 on |a=1,b=0,t=1>.
// Self-inverse, and exact whenever the target starts in |0> (compute) or
// holds a AND b (uncompute), so it serves as a 4 T AND / ANDdg.
inline void append_ccx_relphase(Circuit& c, int a, int b, int t) {
  c.g1(GateKind::Gdg, t);
  c.g2(GateKind::CX, b, t);
  c.g1(GateKind::Gdg, t);
  c.g2(GateKind::CX, a, t);
  c.g1(GateKind::G, t);
  c.g2(GateKind::CX, b, t);
  c.g1(GateKind::G, t);
}

// Measurement-based AND uncompute: 0 T, one measurement, classical fixups.
inline void append_and_uncompute_measured(Circuit& c, int a, int b, int t) {
  int m = c.fresh_cbit();
  c.g1(GateKind::H, t);
  c.add(Gate::mz(t, m));
  c.add(Gate::cc(GateKind::CcX, m, t));
  c.add(Gate::cc(GateKind::CcCZ, m, a, b));
}

// Controlled Hadamard from one T-cost G gate pair.
inline void append_ch(Circuit& c, int ctrl, int t) {
  c.g1(GateKind::Gdg, t);
  c.g2(GateKind::CX, ctrl, t);
  c.g1(GateKind::G, t);
}

inline void append_cs(Circuit& c, int ctrl, int t) {
  c.g1(GateKind::T, ctrl);
  c.g1(GateKind::T, t);
  c.g2(GateKind::CX, ctrl, t);
  c.g1(GateKind::Tdg, t);
  c.g2(GateKind::CX, ctrl, t);
}

inline void append_csdg(Circuit& c, int ctrl, int t) {
  c.g2(GateKind::CX, ctrl, t);
  c.g1(GateKind::T, t);
  c.g2(GateKind::CX, ctrl, t);
  c.g1(GateKind::Tdg, t);
  c.g1(GateKind::Tdg, ctrl);
}

inline void append_cy(Circuit& c, int ctrl, int t) {
  c.g1(GateKind::Sdg, t);
  c.g2(GateKind::CX, ctrl, t);
  c.g1(GateKind::S, t);
}

// Controlled RZ(t) as three half-angle rotations.
inline void append_crz(Circuit& c, const Turn& angle, int ctrl, int t) {
  Turn h = angle.half();
  c.rz(h, ctrl);
  c.g2(GateKind::CX, ctrl, t);
  c.rz(-h, t);
  c.g2(GateKind::CX, ctrl, t);
  c.rz(h, t);
}

namespace detail {

inline void expand_one(Circuit& out, const Gate& g, const CostModel& model,
                       const MacroPolicy& policy) {
  ToffoliStrategy s = model.resolve(g.kind, policy);
  switch (g.kind) {
    case GateKind::CCX:
      if (s == ToffoliStrategy::relphase_four_t)
        append_ccx_relphase(out, g.q[0], g.q[1], g.q[2]);
      else
        append_ccx_seven_t(out, g.q[0], g.q[1], g.q[2]);
      break;
    case GateKind::AND:
      if (s == ToffoliStrategy::seven_t)
        append_ccx_seven_t(out, g.q[0], g.q[1], g.q[2]);
      else
        append_ccx_relphase(out, g.q[0], g.q[1], g.q[2]);
      break;
    case GateKind::ANDdg:
      if (s == ToffoliStrategy::seven_t)
        append_ccx_seven_t(out, g.q[0], g.q[1], g.q[2]);
      else if (s == ToffoliStrategy::and_gadget_measured &&
               model.uncompute_free_via_measurement)
        append_and_uncompute_measured(out, g.q[0], g.q[1], g.q[2]);
      else
        append_ccx_relphase(out, g.q[0], g.q[1], g.q[2]);
      break;
    case GateKind::CSWAP: {
      out.g2(GateKind::CX, g.q[2], g.q[1]);
      Gate mid = Gate::g3(GateKind::CCX, g.q[0], g.q[1], g.q[2]);
      if (s == ToffoliStrategy::relphase_four_t)
        append_ccx_relphase(out, mid.q[0], mid.q[1], mid.q[2]);
      else
        append_ccx_seven_t(out, mid.q[0], mid.q[1], mid.q[2]);
      out.g2(GateKind::CX, g.q[2], g.q[1]);
      break;
    }
    default:
      out.add(g);
  }
}

}  // namespace detail

// Rewrite CCX / CSWAP / AND / ANDdg into Clifford+T (+ measurement fixups).
inline Circuit expand_macros(const Circuit& c, const CostModel& model = {}) {
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.n_classical = c.n_classical;
  out.registers = c.registers;
  out.rz_error_budget = c.rz_error_budget;
  out.up_to_diagonal_phase = c.up_to_diagonal_phase;
  for (const auto& g : c.gates) detail::expand_one(out, g, model, c.policy);
  return out;
}

}  // namespace tgf
