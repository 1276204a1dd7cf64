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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace tgf {

enum class GateKind : std::uint8_t {
  X,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  G,    // Sdg.H.T.H.S, the T-cost relative-phase Y rotation
  Gdg,
  RZ,
  CX,
  CZ,
  CCX,
  CSWAP,
  AND,    // compute Toffoli onto a |0> target
  ANDdg,  // uncompute of AND
  MZ,
  CcX,  // classically controlled X
  CcZ,
  CcCZ,
};

inline int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CcCZ:
      return 2;
    case GateKind::CCX:
    case GateKind::CSWAP:
    case GateKind::AND:
    case GateKind::ANDdg:
      return 3;
    default:
      return 1;
  }
}

inline bool is_t_family(GateKind k) {
  return k == GateKind::T || k == GateKind::Tdg || k == GateKind::G || k == GateKind::Gdg;
}

inline bool is_macro(GateKind k) {
  return k == GateKind::CCX || k == GateKind::CSWAP || k == GateKind::AND ||
         k == GateKind::ANDdg;
}

inline bool is_classically_controlled(GateKind k) {
  return k == GateKind::CcX || k == GateKind::CcZ || k == GateKind::CcCZ;
}

struct Gate {
  GateKind kind;
  std::array<int, 3> q{-1, -1, -1};
  Turn angle{};   // RZ only
  int cbit = -1;  // MZ result bit, or condition bit of a classically controlled gate

  static Gate g1(GateKind k, int a) { return Gate{k, {a, -1, -1}}; }
  static Gate g2(GateKind k, int a, int b) { return Gate{k, {a, b, -1}}; }
  static Gate g3(GateKind k, int a, int b, int c) { return Gate{k, {a, b, c}}; }
  static Gate rz(const Turn& t, int a) {
    Gate g{GateKind::RZ, {a, -1, -1}};
    g.angle = t;
    return g;
  }
  static Gate mz(int a, int bit) {
    Gate g{GateKind::MZ, {a, -1, -1}};
    g.cbit = bit;
    return g;
  }
  static Gate cc(GateKind k, int bit, int a, int b = -1) {
    Gate g{k, {a, b, -1}};
    g.cbit = bit;
    return g;
  }
};

enum class Role : std::uint8_t {
  index,
  output,
  workspace_clean,
  workspace_dirty,
  control,
  fourier,
  classical,
};

inline const char* role_name(Role r) {
  switch (r) {
    case Role::index: return "index";
    case Role::output: return "output";
    case Role::workspace_clean: return "workspace-clean";
    case Role::workspace_dirty: return "workspace-dirty";
    case Role::control: return "control";
    case Role::fourier: return "fourier";
    case Role::classical: return "classical";
  }
  return "?";
}

struct Register {
  std::string name;
  int start = 0;
  int width = 0;
  Role role = Role::workspace_clean;
};

enum class ToffoliStrategy : std::uint8_t {
  seven_t,
  relphase_four_t,
  and_gadget_measured,
};

inline const char* strategy_name(ToffoliStrategy s) {
  switch (s) {
    case ToffoliStrategy::seven_t: return "seven_t";
    case ToffoliStrategy::relphase_four_t: return "relphase_four_t";
    case ToffoliStrategy::and_gadget_measured: return "and_gadget_measured";
  }
  return "?";
}

// Per-circuit strategy overrides, applied before the cost model default.
struct MacroPolicy {
  std::optional<ToffoliStrategy> ccx;
  std::optional<ToffoliStrategy> cswap;
  std::optional<ToffoliStrategy> and_pair;

  bool any() const { return ccx || cswap || and_pair; }
};

struct Circuit {
  int n_qubits = 0;
  int n_classical = 0;
  std::vector<Register> registers;
  std::vector<Gate> gates;
  MacroPolicy policy;
  // Total rotation synthesis budget, split evenly over the RZ gates present.
  double rz_error_budget = 1e-10;
  // Set when the circuit realizes its target only up to a diagonal +-1 phase.
  bool up_to_diagonal_phase = false;

  int add_register(const std::string& name, int width, Role role) {
    if (width <= 0) throw ParamError("register width must be positive");
    int start = (role == Role::classical) ? n_classical : n_qubits;
    registers.push_back({name, start, width, role});
    if (role == Role::classical)
      n_classical += width;
    else
      n_qubits += width;
    return start;
  }

  std::vector<int> reg_qubits(const std::string& name) const {
    for (const auto& r : registers) {
      if (r.name == name) {
        std::vector<int> qs(r.width);
        for (int i = 0; i < r.width; ++i) qs[i] = r.start + i;
        return qs;
      }
    }
    throw ParamError("no register named " + name);
  }

  int fresh_cbit() { return n_classical++; }

  void add(const Gate& g) { gates.push_back(g); }
  void g1(GateKind k, int a) { gates.push_back(Gate::g1(k, a)); }
  void g2(GateKind k, int a, int b) { gates.push_back(Gate::g2(k, a, b)); }
  void g3(GateKind k, int a, int b, int c) { gates.push_back(Gate::g3(k, a, b, c)); }
  void rz(const Turn& t, int a) {
    if (!t.is_zero()) gates.push_back(Gate::rz(t, a));
  }

  void validate() const;
  Circuit inverse() const;
};

inline void Circuit::validate() const {
  for (const auto& g : gates) {
    int ar = gate_arity(g.kind);
    for (int i = 0; i < ar; ++i) {
      if (g.q[i] < 0 || g.q[i] >= n_qubits)
        throw ParamError("gate qubit out of range");
    }
    for (int i = 0; i < ar; ++i)
      for (int j = i + 1; j < ar; ++j)
        if (g.q[i] == g.q[j]) throw ParamError("gate qubits must be distinct");
    if (g.kind == GateKind::MZ || is_classically_controlled(g.kind)) {
      if (g.cbit < 0 || g.cbit >= n_classical)
        throw ParamError("classical bit out of range");
    }
  }
}

// Reversal. Measurement-bearing circuits have no circuit inverse.
inline Circuit Circuit::inverse() const {
  Circuit inv;
  inv.n_qubits = n_qubits;
  inv.n_classical = n_classical;
  inv.registers = registers;
  inv.policy = policy;
  inv.rz_error_budget = rz_error_budget;
  inv.up_to_diagonal_phase = up_to_diagonal_phase;
  inv.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    Gate g = *it;
    switch (g.kind) {
      case GateKind::S: g.kind = GateKind::Sdg; break;
      case GateKind::Sdg: g.kind = GateKind::S; break;
      case GateKind::T: g.kind = GateKind::Tdg; break;
      case GateKind::Tdg: g.kind = GateKind::T; break;
      case GateKind::G: g.kind = GateKind::Gdg; break;
      case GateKind::Gdg: g.kind = GateKind::G; break;
      case GateKind::AND: g.kind = GateKind::ANDdg; break;
      case GateKind::ANDdg: g.kind = GateKind::AND; break;
      case GateKind::RZ: g.angle = -g.angle; break;
      case GateKind::MZ:
        throw ParamError("cannot invert a circuit containing measurements");
      default: break;
    }
    inv.gates.push_back(g);
  }
  return inv;
}

// Splices the gate list of 'sub' onto 'c', translating qubit ids through
// 'map' (map[i] is the host qubit carrying sub qubit i). Registers are not
// copied; macro policy stays the caller's concern and must be compatible.
// Measurement-bearing subcircuits do not splice.
inline void append_remapped(Circuit& c, const Circuit& sub,
                            const std::vector<int>& map) {
  if (static_cast<int>(map.size()) < sub.n_qubits)
    throw ParamError("qubit map smaller than subcircuit");
  for (const Gate& g : sub.gates) {
    if (g.kind == GateKind::MZ || is_classically_controlled(g.kind))
      throw ParamError("cannot splice a measurement-bearing circuit");
    Gate h = g;
    for (int i = 0; i < gate_arity(g.kind); ++i) {
      int m = map[g.q[i]];
      if (m < 0 || m >= c.n_qubits) throw ParamError("qubit map entry out of range");
      h.q[i] = m;
    }
    c.gates.push_back(h);
  }
  if (sub.up_to_diagonal_phase) c.up_to_diagonal_phase = true;
}

}  // namespace tgf
