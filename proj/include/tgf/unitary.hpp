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

// Isometry synthesis by reduction to state preparation. A partial unitary
// fixing K orthonormal columns u_k is realized on one extra qubit as a
// product of reflections about w_k = (|1>|k> - |0>|u_k>)/sqrt2: each
// reflection is B_k R B_k~ where B_k maps the fixed source state |1>|0...0>
// to w_k and R is the phase flip about the source state. For orthonormal
// columns the product sends |1>|k> to |0>|u_k> exactly, so the data register
// carries U while the ancilla returns to |0>.
//
// B_k itself is Hadamard on the ancilla, CNOTs writing k, then the state
// preparation A_k negatively controlled on the ancilla. The control is
// applied gate by gate; every macro kind used by the preparation circuits has
// an exact controlled form here, with one shared clean helper for the
// three-qubit kinds.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "tgf/bits.hpp"
#include "tgf/circuit.hpp"
#include "tgf/errors.hpp"
#include "tgf/macros.hpp"
#include "tgf/stateprep.hpp"

namespace tgf {

struct IsometrySpec {
  // K orthonormal columns of length N = 2^n; column k is the image of |k>.
  std::vector<std::vector<std::complex<double>>> columns;

  int size() const { return columns.empty() ? 0 : static_cast<int>(columns[0].size()); }
  int specified() const { return static_cast<int>(columns.size()); }

  void validate() const {
    const int K = specified();
    if (K < 1) throw ParamError("isometry needs at least one column");
    const int N = size();
    if (N < 2 || !is_power_of_two(std::uint64_t(N)))
      throw ParamError("column dimension must be a power of two, at least 2");
    if (K > N) throw ParamError("more columns than the dimension admits");
    for (const auto& col : columns) {
      if (static_cast<int>(col.size()) != N) throw ParamError("column length mismatch");
      for (const auto& a : col)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
          throw ParamError("column entries must be finite");
    }
    for (int j = 0; j < K; ++j)
      for (int k = j; k < K; ++k) {
        std::complex<double> ip{};
        for (int x = 0; x < N; ++x) ip += std::conj(columns[j][x]) * columns[k][x];
        double want = (j == k) ? 1.0 : 0.0;
        if (std::abs(ip - want) > 1e-10)
          throw ParamError("columns must be orthonormal to 1e-10");
      }
  }
};

// Modified Gram-Schmidt input utility. The result still has to pass the
// orthonormality invariant; rank-deficient input is rejected.
inline std::vector<std::vector<std::complex<double>>> gram_schmidt(
    std::vector<std::vector<std::complex<double>>> cols) {
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      std::complex<double> ip{};
      for (std::size_t x = 0; x < cols[j].size(); ++x) ip += std::conj(cols[k][x]) * cols[j][x];
      for (std::size_t x = 0; x < cols[j].size(); ++x) cols[j][x] -= ip * cols[k][x];
    }
    double n2 = 0;
    for (const auto& a : cols[j]) n2 += std::norm(a);
    if (n2 < 1e-16) throw ParamError("gram_schmidt: columns are linearly dependent");
    double inv = 1.0 / std::sqrt(n2);
    for (auto& a : cols[j]) a *= inv;
  }
  return cols;
}

struct ReflectionProgram {
  int n = 0;  // data qubits; the w_k live on n+1 qubits
  // Index layout: component (a * N + x) is |a>_anc |x>_data.
  std::vector<std::vector<std::complex<double>>> w;
  std::size_t source = 0;  // basis index of |1>|0...0>, i.e. N
};

// The classical half of the synthesis: the reflection targets w_k, checked by
// applying the product of exact reflections to every |1>|k>.
inline ReflectionProgram reflection_states(const IsometrySpec& spec) {
  spec.validate();
  const int N = spec.size();
  const int K = spec.specified();
  ReflectionProgram prog;
  prog.n = ceil_log2(std::uint64_t(N));
  prog.source = std::size_t(N);
  const double isq = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < K; ++k) {
    std::vector<std::complex<double>> wk(2 * std::size_t(N), std::complex<double>{});
    wk[std::size_t(N) + k] = isq;
    for (int x = 0; x < N; ++x) wk[x] = -isq * spec.columns[k][x];
    prog.w.push_back(std::move(wk));
  }
  for (int k = 0; k < K; ++k) {
    std::vector<std::complex<double>> v(2 * std::size_t(N), std::complex<double>{});
    v[std::size_t(N) + k] = 1.0;
    for (const auto& wk : prog.w) {
      std::complex<double> ip{};
      for (std::size_t s = 0; s < v.size(); ++s) ip += std::conj(wk[s]) * v[s];
      for (std::size_t s = 0; s < v.size(); ++s) v[s] -= 2.0 * ip * wk[s];
    }
    double worst = 0;
    for (int x = 0; x < N; ++x)
      worst = std::max(worst, std::abs(v[x] - spec.columns[k][x]));
    for (std::size_t s = N; s < v.size(); ++s) worst = std::max(worst, std::abs(v[s]));
    if (worst > 1e-10) throw VerifyError("reflection product does not reproduce the columns");
  }
  return prog;
}

namespace detail {

// Exact singly-controlled form of one (possibly macro) gate. The helper qubit
// must be clean and distinct from ctrl and the gate qubits; it is restored.
inline void append_controlled_gate(Circuit& c, const Gate& g, int ctrl, int helper) {
  const int a = g.q[0], b = g.q[1], t = g.q[2];
  auto ctoffoli = [&](int x, int y, int z) {
    c.g3(GateKind::AND, x, y, helper);
    c.g3(GateKind::CCX, ctrl, helper, z);
    c.g3(GateKind::ANDdg, x, y, helper);
  };
  switch (g.kind) {
    case GateKind::X:
      c.g2(GateKind::CX, ctrl, a);
      break;
    case GateKind::Y:
      c.g1(GateKind::Sdg, a);
      c.g2(GateKind::CX, ctrl, a);
      c.g1(GateKind::S, a);
      break;
    case GateKind::Z:
      c.g2(GateKind::CZ, ctrl, a);
      break;
    case GateKind::H:
      // H = Ry(pi/4) Z Ry(-pi/4); the G pair supplies the Ry basis change and
      // cancels to identity when the control is off.
      c.g1(GateKind::G, a);
      c.g2(GateKind::CZ, ctrl, a);
      c.g1(GateKind::Gdg, a);
      break;
    case GateKind::S:
      c.g1(GateKind::T, ctrl);
      c.g1(GateKind::T, a);
      c.g2(GateKind::CX, ctrl, a);
      c.g1(GateKind::Tdg, a);
      c.g2(GateKind::CX, ctrl, a);
      break;
    case GateKind::Sdg:
      c.g2(GateKind::CX, ctrl, a);
      c.g1(GateKind::T, a);
      c.g2(GateKind::CX, ctrl, a);
      c.g1(GateKind::Tdg, a);
      c.g1(GateKind::Tdg, ctrl);
      break;
    case GateKind::T:
      append_crz(c, Turn(1, 8), ctrl, a);
      break;
    case GateKind::Tdg:
      append_crz(c, Turn(-1, 8), ctrl, a);
      break;
    case GateKind::RZ:
      append_crz(c, g.angle, ctrl, a);
      break;
    case GateKind::CX:
      c.g3(GateKind::CCX, ctrl, a, b);
      break;
    case GateKind::CZ:
      c.g1(GateKind::H, b);
      c.g3(GateKind::CCX, ctrl, a, b);
      c.g1(GateKind::H, b);
      break;
    case GateKind::CCX:
    case GateKind::AND:
    case GateKind::ANDdg:
      // For AND kinds the CCX fires only with the control on, so the target
      // contract (reach or leave |0>) holds on both control branches.
      ctoffoli(a, b, t);
      break;
    case GateKind::CSWAP:
      c.g2(GateKind::CX, t, b);
      ctoffoli(a, b, t);
      c.g2(GateKind::CX, t, b);
      break;
    default:
      throw ParamError("gate kind has no controlled form: " +
                       std::to_string(static_cast<int>(g.kind)));
  }
}

// Splice sub into c with every gate controlled on ctrl, qubits remapped
// through map (indexed by sub qubit).
inline void append_controlled(Circuit& c, const Circuit& sub, const std::vector<int>& map,
                              int ctrl, int helper) {
  if (static_cast<int>(map.size()) < sub.n_qubits)
    throw ParamError("qubit map smaller than subcircuit");
  for (const Gate& g : sub.gates) {
    if (g.kind == GateKind::MZ || is_classically_controlled(g.kind))
      throw ParamError("cannot control a measurement-bearing circuit");
    Gate h = g;
    for (int i = 0; i < gate_arity(g.kind); ++i) h.q[i] = map[g.q[i]];
    append_controlled_gate(c, h, ctrl, helper);
  }
}

// Phase flip about |1>_anc |0...0>_psi via an AND ladder on the ctl pool.
inline void append_source_reflection(Circuit& c, int anc, int psi0, int n, int ctl0) {
  for (int i = 0; i < n; ++i) c.g1(GateKind::X, psi0 + i);
  if (n == 1) {
    c.g2(GateKind::CZ, psi0, anc);
  } else {
    c.g3(GateKind::AND, psi0, psi0 + 1, ctl0);
    for (int j = 2; j < n; ++j) c.g3(GateKind::AND, ctl0 + j - 2, psi0 + j, ctl0 + j - 1);
    c.g2(GateKind::CZ, ctl0 + n - 2, anc);
    for (int j = n - 1; j >= 2; --j) c.g3(GateKind::ANDdg, ctl0 + j - 2, psi0 + j, ctl0 + j - 1);
    c.g3(GateKind::ANDdg, psi0, psi0 + 1, ctl0);
  }
  for (int i = 0; i < n; ++i) c.g1(GateKind::X, psi0 + i);
}

}  // namespace detail

// Product of K reflections realizing the isometry on registers (anc, psi):
// |1>|k> -> |0>|u_k> up to K times the per-state preparation error.
inline Circuit build_isometry(const IsometrySpec& spec, int lambda, int b, double eps_f) {
  spec.validate();
  const int N = spec.size();
  const int K = spec.specified();
  if (lambda < 1 || lambda > N) throw ParamError("lambda must be in [1, N]");
  if (b < 1 || b > 60) throw ParamError("precision bits must be in [1, 60]");
  if (!(eps_f > 0)) throw ParamError("error budget must be positive");
  const int n = ceil_log2(std::uint64_t(N));

  std::vector<Circuit> preps;
  preps.reserve(K);
  for (int k = 0; k < K; ++k) {
    StateSpec s;
    s.amplitudes = spec.columns[k];
    preps.push_back(build_state_prep(s, lambda, b, eps_f, RotationMethod::controlled_rotation));
  }

  // Shared pools sized to the widest use of each register name.
  std::vector<std::pair<std::string, std::pair<int, Role>>> pool_order;
  auto note = [&](const Register& r) {
    for (auto& p : pool_order)
      if (p.first == r.name) {
        p.second.first = std::max(p.second.first, r.width);
        return;
      }
    pool_order.push_back({r.name, {r.width, r.role}});
  };
  for (const auto& prep : preps)
    for (const auto& r : prep.registers)
      if (r.name != "psi") note(r);

  Circuit c;
  c.policy.cswap = ToffoliStrategy::seven_t;
  c.rz_error_budget = eps_f;
  const int anc = c.add_register("anc", 1, Role::output);
  const int psi0 = c.add_register("psi", n, Role::output);
  std::vector<std::pair<std::string, int>> pool_start;
  for (const auto& p : pool_order)
    pool_start.push_back({p.first, c.add_register(p.first, p.second.first, p.second.second)});
  const int ctl0 = c.add_register("ctl", std::max(1, n - 1), Role::workspace_clean);

  auto find_pool = [&](const std::string& name) {
    for (const auto& p : pool_start)
      if (p.first == name) return p.second;
    throw ParamError("missing pool for register " + name);
  };

  for (int k = 0; k < K; ++k) {
    std::vector<int> map(preps[k].n_qubits, -1);
    for (const auto& r : preps[k].registers) {
      int base = (r.name == "psi") ? psi0 : find_pool(r.name);
      for (int i = 0; i < r.width; ++i) map[r.start + i] = base + i;
    }
    Circuit bk;
    bk.n_qubits = c.n_qubits;
    bk.g1(GateKind::H, anc);
    for (int i = 0; i < n; ++i)
      if ((k >> (n - 1 - i)) & 1) bk.g2(GateKind::CX, anc, psi0 + i);
    bk.g1(GateKind::X, anc);
    detail::append_controlled(bk, preps[k], map, anc, ctl0);
    bk.g1(GateKind::X, anc);

    // Unprepare w_k to the source state, flip it, prepare again.
    Circuit inv = bk.inverse();
    for (const Gate& g : inv.gates) c.gates.push_back(g);
    detail::append_source_reflection(c, anc, psi0, n, ctl0);
    for (const Gate& g : bk.gates) c.gates.push_back(g);
  }
  c.validate();
  return c;
}

}  // namespace tgf
