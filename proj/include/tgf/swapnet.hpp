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

#include <string>
#include <vector>

#include "tgf/bits.hpp"
#include "tgf/circuit.hpp"
#include "tgf/errors.hpp"
#include "tgf/fanout.hpp"
#include "tgf/macros.hpp"

namespace tgf {

// Variants of the n-pair controlled swap.
//
//   linear          CSWAP macros in sequence; 7n T under seven_t.
//   logarithmic     pairs toggle through borrowed helper qubits from the
//                   other half of the register, with the control fanned out
//                   once per half; exact, 8n T, O(log n) depth.
//   phase_incorrect the 4n T construction built from G gates around a single
//                   shared control fanout; correct up to a diagonal +-1 phase.
enum class SwapStrategy { linear, logarithmic, phase_incorrect };

inline const char* swap_strategy_name(SwapStrategy s) {
  switch (s) {
    case SwapStrategy::linear: return "linear";
    case SwapStrategy::logarithmic: return "logarithmic";
    case SwapStrategy::phase_incorrect: return "phase_incorrect";
  }
  return "?";
}

inline SwapStrategy parse_swap_strategy(const std::string& s) {
  if (s == "linear") return SwapStrategy::linear;
  if (s == "logarithmic") return SwapStrategy::logarithmic;
  if (s == "phase_incorrect") return SwapStrategy::phase_incorrect;
  throw ParamError("unknown swap strategy: " + s);
}

namespace detail {

// T-gate core shared by a helper qubit with pair (a, b): 4 T gates on h.
inline void append_swap_hchain(Circuit& c, int a, int b, int h) {
  c.g2(GateKind::CX, b, h);
  c.g1(GateKind::Tdg, h);
  c.g2(GateKind::CX, a, h);
  c.g1(GateKind::T, h);
  c.g2(GateKind::CX, b, h);
  c.g1(GateKind::Tdg, h);
  c.g2(GateKind::CX, a, h);
  c.g1(GateKind::T, h);
}

// Swaps (A[i], B[i]) controlled by z, exactly, with each pair borrowing a
// distinct helper qubit from `helpers`. The helpers may be in any state and
// are restored. 8 T per pair.
inline void append_swap_half(Circuit& c, int z, const std::vector<int>& A,
                             const std::vector<int>& B,
                             const std::vector<int>& helpers) {
  const std::size_t m = A.size();
  for (std::size_t i = 0; i < m; ++i) {
    c.g2(GateKind::CX, B[i], A[i]);
    c.g1(GateKind::H, B[i]);
    append_swap_hchain(c, A[i], B[i], helpers[i]);
    c.g1(GateKind::S, A[i]);
    c.g1(GateKind::S, B[i]);
    c.g2(GateKind::CX, A[i], B[i]);
    c.g1(GateKind::Sdg, B[i]);
    c.g2(GateKind::CX, A[i], B[i]);
  }
  append_fanout(c, z, helpers);
  for (std::size_t i = 0; i < m; ++i) {
    append_swap_hchain(c, A[i], B[i], helpers[i]);
    c.g1(GateKind::H, B[i]);
    c.g2(GateKind::CX, B[i], A[i]);
  }
  append_fanout(c, z, helpers);
}

}  // namespace detail

// Swaps qubit pairs (A[i], B[i]) controlled by z. All qubits must be
// distinct. phase_incorrect leaves a data-dependent +-1 phase behind.
inline void append_controlled_swap_pairs(Circuit& c, int z,
                                         const std::vector<int>& A,
                                         const std::vector<int>& B,
                                         SwapStrategy strategy) {
  if (A.size() != B.size()) throw ParamError("swap pair lists differ in size");
  const int n = static_cast<int>(A.size());
  if (n == 0) return;
  switch (strategy) {
    case SwapStrategy::linear: {
      for (int i = 0; i < n; ++i) c.g3(GateKind::CSWAP, z, A[i], B[i]);
      return;
    }
    case SwapStrategy::logarithmic: {
      if (n == 1) {
        c.g3(GateKind::CSWAP, z, A[0], B[0]);
        return;
      }
      const int h1 = (n + 1) / 2;
      std::vector<int> a1(A.begin(), A.begin() + h1);
      std::vector<int> b1(B.begin(), B.begin() + h1);
      std::vector<int> a2(A.begin() + h1, A.end());
      std::vector<int> b2(B.begin() + h1, B.end());
      std::vector<int> pool2 = a2;
      pool2.insert(pool2.end(), b2.begin(), b2.end());
      std::vector<int> pool1 = a1;
      pool1.insert(pool1.end(), b1.begin(), b1.end());
      pool2.resize(a1.size());
      pool1.resize(a2.size());
      detail::append_swap_half(c, z, a1, b1, pool2);
      detail::append_swap_half(c, z, a2, b2, pool1);
      return;
    }
    case SwapStrategy::phase_incorrect: {
      for (int i = 0; i < n; ++i) {
        c.g2(GateKind::CX, B[i], A[i]);
        c.g1(GateKind::Gdg, B[i]);
        c.g2(GateKind::CX, A[i], B[i]);
        c.g1(GateKind::Gdg, B[i]);
      }
      append_fanout(c, z, B);
      for (int i = 0; i < n; ++i) {
        c.g1(GateKind::G, B[i]);
        c.g2(GateKind::CX, A[i], B[i]);
        c.g1(GateKind::G, B[i]);
        c.g2(GateKind::CX, B[i], A[i]);
      }
      return;
    }
  }
}

// Swap between two n-qubit registers controlled by a single qubit.
inline Circuit build_controlled_swap_n(int n, SwapStrategy strategy) {
  if (n < 1) throw ParamError("controlled swap needs n >= 1");
  Circuit c;
  int z = c.add_register("z", 1, Role::control);
  int a0 = c.add_register("a", n, Role::output);
  int b0 = c.add_register("b", n, Role::output);
  std::vector<int> A(n), B(n);
  for (int i = 0; i < n; ++i) {
    A[i] = a0 + i;
    B[i] = b0 + i;
  }
  if (strategy == SwapStrategy::phase_incorrect)
    c.up_to_diagonal_phase = true;
  else
    c.policy.cswap = ToffoliStrategy::seven_t;
  append_controlled_swap_pairs(c, z, A, B, strategy);
  return c;
}

// Moves the b-qubit register indexed by |x> to position 0. Registers d1..
// end in unspecified (permuted) states.
inline Circuit build_swap_network(int N, int b, SwapStrategy strategy) {
  if (N < 1 || b < 1) throw ParamError("swap network needs N, b >= 1");
  Circuit c;
  const int nidx = N > 1 ? ceil_log2(std::uint64_t(N)) : 0;
  int idx0 = nidx > 0 ? c.add_register("index", nidx, Role::index) : 0;
  std::vector<int> base(N);
  for (int i = 0; i < N; ++i)
    base[i] = c.add_register("d" + std::to_string(i), b,
                             i == 0 ? Role::output : Role::workspace_dirty);
  if (strategy == SwapStrategy::phase_incorrect)
    c.up_to_diagonal_phase = true;
  else
    c.policy.cswap = ToffoliStrategy::seven_t;
  for (int j = 0; j < nidx; ++j) {
    std::vector<int> A, B;
    for (int i = 0; i + (1 << j) < N; i += 1 << (j + 1))
      for (int t = 0; t < b; ++t) {
        A.push_back(base[i] + t);
        B.push_back(base[i + (1 << j)] + t);
      }
    append_controlled_swap_pairs(c, idx0 + j, A, B, strategy);
  }
  return c;
}

// Multi-target controlled self-inverse gates, via toggled dirty helpers.
enum class MultiTargetKind { swap_pair, x };

namespace detail {

inline void append_cv(Circuit& c, int ctrl, const std::vector<int>& A,
                      const std::vector<int>& B, std::size_t i,
                      MultiTargetKind kind) {
  if (kind == MultiTargetKind::swap_pair)
    c.g3(GateKind::CSWAP, ctrl, A[i], B[i]);
  else
    c.g2(GateKind::CX, ctrl, A[i]);
}

// Applies V^z to every target using borrowed helpers: each target's V is
// controlled by a helper, the helpers are toggled by z, and the Vs repeat.
// V^h then V^(h xor z) composes to V^z for self-inverse V, for any helper
// state; the helpers end exactly where they started. Helpers may be shared
// between targets (assigned cyclically) at the price of depth.
inline void append_toggled_multi_cv(Circuit& c, int z, const std::vector<int>& A,
                                    const std::vector<int>& B,
                                    const std::vector<int>& helpers,
                                    MultiTargetKind kind) {
  if (helpers.empty()) throw ParamError("toggled multi-CV needs a helper");
  for (std::size_t i = 0; i < A.size(); ++i)
    append_cv(c, helpers[i % helpers.size()], A, B, i, kind);
  append_fanout(c, z, helpers);
  for (std::size_t i = 0; i < A.size(); ++i)
    append_cv(c, helpers[i % helpers.size()], A, B, i, kind);
  append_fanout(c, z, helpers);
}

}  // namespace detail

// |0><0| x I + |1><1| x V^(x)n for self-inverse V, with no ancilla: each half
// of the targets borrows helper qubits from the other half. Odd splits
// control the first target of the larger half directly by z.
inline Circuit build_multi_target_controlled(MultiTargetKind kind, int n) {
  if (n < 1) throw ParamError("multi-target control needs n >= 1");
  Circuit c;
  int z = c.add_register("z", 1, Role::control);
  std::vector<int> A(n), B;
  if (kind == MultiTargetKind::swap_pair) {
    int a0 = c.add_register("a", n, Role::output);
    int b0 = c.add_register("b", n, Role::output);
    B.resize(n);
    for (int i = 0; i < n; ++i) {
      A[i] = a0 + i;
      B[i] = b0 + i;
    }
    c.policy.cswap = ToffoliStrategy::seven_t;
  } else {
    int t0 = c.add_register("t", n, Role::output);
    for (int i = 0; i < n; ++i) A[i] = t0 + i;
  }
  if (n == 1) {
    detail::append_cv(c, z, A, B, 0, kind);
    return c;
  }
  auto qubits_of = [&](int lo, int hi) {
    std::vector<int> q;
    for (int i = lo; i < hi; ++i) {
      q.push_back(A[i]);
      if (kind == MultiTargetKind::swap_pair) q.push_back(B[i]);
    }
    return q;
  };
  auto process = [&](int lo, int hi, std::vector<int> pool) {
    std::vector<int> ta(A.begin() + lo, A.begin() + hi);
    std::vector<int> tb;
    if (kind == MultiTargetKind::swap_pair) tb.assign(B.begin() + lo, B.begin() + hi);
    std::size_t want = ta.size();
    if (pool.size() >= want) {
      pool.resize(want);
      detail::append_toggled_multi_cv(c, z, ta, tb, pool, kind);
      return;
    }
    std::size_t direct = want - pool.size();
    for (std::size_t i = 0; i < direct; ++i)
      detail::append_cv(c, z, ta, tb, i, kind);
    std::vector<int> ra(ta.begin() + direct, ta.end());
    std::vector<int> rb;
    if (!tb.empty()) rb.assign(tb.begin() + direct, tb.end());
    detail::append_toggled_multi_cv(c, z, ra, rb, pool, kind);
  };
  const int h1 = (n + 1) / 2;
  process(0, h1, qubits_of(h1, n));
  process(h1, n, qubits_of(0, h1));
  return c;
}

}  // namespace tgf
