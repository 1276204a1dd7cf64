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
#include <optional>
#include <vector>

#include "circuit.hpp"
#include "macros.hpp"

namespace tgf {

// Registers are passed as qubit id lists, little-endian: bit i of the value
// lives on reg[i].

namespace detail {

// In-place B += A (mod 2^w), A preserved. Carry ripple through AND gadgets;
// scratch needs w-1 clean qubits and is returned clean.
inline void append_add_quantum(Circuit& c, const std::vector<int>& A,
                               const std::vector<int>& B,
                               const std::vector<int>& scratch) {
  const int w = static_cast<int>(A.size());
  if (static_cast<int>(B.size()) != w) throw ParamError("adder width mismatch");
  if (static_cast<int>(scratch.size()) < w - 1) throw ParamError("adder scratch too small");
  if (w == 0) return;
  // scratch[i] accumulates carry c_{i+1}
  for (int i = 0; i <= w - 2; ++i) {
    if (i > 0) {
      c.g2(GateKind::CX, scratch[i - 1], A[i]);
      c.g2(GateKind::CX, scratch[i - 1], B[i]);
    }
    c.g3(GateKind::AND, A[i], B[i], scratch[i]);
    if (i > 0) c.g2(GateKind::CX, scratch[i - 1], scratch[i]);
  }
  if (w >= 2) c.g2(GateKind::CX, scratch[w - 2], B[w - 1]);
  c.g2(GateKind::CX, A[w - 1], B[w - 1]);
  for (int i = w - 2; i >= 0; --i) {
    if (i > 0) c.g2(GateKind::CX, scratch[i - 1], scratch[i]);
    c.g3(GateKind::ANDdg, A[i], B[i], scratch[i]);
    if (i > 0) c.g2(GateKind::CX, scratch[i - 1], A[i]);
    c.g2(GateKind::CX, A[i], B[i]);
  }
}

// B += A with the outgoing carry written to the clean qubit 'carry'.
inline void append_add_quantum_carry(Circuit& c, const std::vector<int>& A,
                                     const std::vector<int>& B, int carry,
                                     const std::vector<int>& scratch) {
  const int w = static_cast<int>(A.size());
  if (static_cast<int>(B.size()) != w) throw ParamError("adder width mismatch");
  if (static_cast<int>(scratch.size()) < w - 1) throw ParamError("adder scratch too small");
  if (w == 0) return;
  auto carry_q = [&](int i) { return i == w ? carry : scratch[i - 1]; };
  for (int i = 0; i <= w - 1; ++i) {
    if (i > 0) {
      c.g2(GateKind::CX, carry_q(i), A[i]);
      c.g2(GateKind::CX, carry_q(i), B[i]);
    }
    c.g3(GateKind::AND, A[i], B[i], carry_q(i + 1));
    if (i > 0) c.g2(GateKind::CX, carry_q(i), carry_q(i + 1));
  }
  // finish the top sum, keep the carry
  if (w >= 2) c.g2(GateKind::CX, carry_q(w - 1), A[w - 1]);
  c.g2(GateKind::CX, A[w - 1], B[w - 1]);
  for (int i = w - 2; i >= 0; --i) {
    if (i > 0) c.g2(GateKind::CX, carry_q(i), carry_q(i + 1));
    c.g3(GateKind::ANDdg, A[i], B[i], carry_q(i + 1));
    if (i > 0) c.g2(GateKind::CX, carry_q(i), A[i]);
    c.g2(GateKind::CX, A[i], B[i]);
  }
}

// B += K (mod 2^w), optionally controlled and/or with carry out. The constant
// is loaded into the clean register 'load', added, then unloaded, so the only
// T cost is the ripple itself.
inline void append_add_const(Circuit& c, std::uint64_t K, const std::vector<int>& B,
                             const std::vector<int>& load,
                             const std::vector<int>& scratch,
                             std::optional<int> ctrl = std::nullopt,
                             std::optional<int> carry = std::nullopt) {
  const int w = static_cast<int>(B.size());
  if (static_cast<int>(load.size()) < w) throw ParamError("add_const load register too small");
  std::vector<int> Z(load.begin(), load.begin() + w);
  auto xfer = [&]() {
    for (int i = 0; i < w; ++i)
      if ((K >> i) & 1) {
        if (ctrl) c.g2(GateKind::CX, *ctrl, Z[i]);
        else c.g1(GateKind::X, Z[i]);
      }
  };
  xfer();
  if (carry) append_add_quantum_carry(c, Z, B, *carry, scratch);
  else append_add_quantum(c, Z, B, scratch);
  xfer();
}

// flag ^= [Y <= X], X and Y preserved. Carry chain of X + ~Y + 1 through AND
// gadgets; scratch needs w clean qubits, returned clean.
inline void append_leq_flag(Circuit& c, const std::vector<int>& X,
                            const std::vector<int>& Y, int flag,
                            const std::vector<int>& scratch) {
  const int w = static_cast<int>(X.size());
  if (static_cast<int>(Y.size()) != w) throw ParamError("comparator width mismatch");
  if (static_cast<int>(scratch.size()) < w) throw ParamError("comparator scratch too small");
  if (w == 0) {
    c.g1(GateKind::X, flag);
    return;
  }
  for (int q : Y) c.g1(GateKind::X, q);  // Y holds ~y below
  auto chain = [&](bool fwd) {
    // c_1 = x_0 OR ~y_0 = ~(~x_0 AND y_0)
    auto base = [&]() {
      c.g1(GateKind::X, X[0]);
      c.g1(GateKind::X, Y[0]);
    };
    if (fwd) {
      base();
      c.g3(GateKind::AND, X[0], Y[0], scratch[0]);
      c.g1(GateKind::X, scratch[0]);
      base();
      for (int i = 1; i < w; ++i) {
        c.g2(GateKind::CX, scratch[i - 1], X[i]);
        c.g2(GateKind::CX, scratch[i - 1], Y[i]);
        c.g3(GateKind::AND, X[i], Y[i], scratch[i]);
        c.g2(GateKind::CX, scratch[i - 1], scratch[i]);
      }
    } else {
      for (int i = w - 1; i >= 1; --i) {
        c.g2(GateKind::CX, scratch[i - 1], scratch[i]);
        c.g3(GateKind::ANDdg, X[i], Y[i], scratch[i]);
        c.g2(GateKind::CX, scratch[i - 1], Y[i]);
        c.g2(GateKind::CX, scratch[i - 1], X[i]);
      }
      base();
      c.g1(GateKind::X, scratch[0]);
      c.g3(GateKind::ANDdg, X[0], Y[0], scratch[0]);
      base();
    }
  };
  chain(true);
  c.g2(GateKind::CX, scratch[w - 1], flag);
  chain(false);
  for (int q : Y) c.g1(GateKind::X, q);
}

}  // namespace detail

// Ripple-carry adder |x>|y> -> |x>|x+y mod 2^b> with one clean ancilla.
// The controlled form takes an extra control qubit and a b-qubit scratch
// register holding ctrl AND x during the add.
inline Circuit build_adder(int b, bool controlled = false) {
  if (b <= 0) throw ParamError("adder width must be positive");
  Circuit c;
  int ctrl = -1;
  if (controlled) ctrl = c.add_register("ctrl", 1, Role::control);
  int x0 = c.add_register("x", b, Role::index);
  int y0 = c.add_register("y", b, Role::output);
  int anc = c.add_register("anc", 1, Role::workspace_clean);
  std::vector<int> x(b), y(b);
  for (int i = 0; i < b; ++i) x[i] = x0 + i, y[i] = y0 + i;
  c.policy.ccx = ToffoliStrategy::seven_t;

  std::vector<int> addend = x;
  if (controlled) {
    int m0 = c.add_register("mask", b, Role::workspace_clean);
    addend.resize(b);
    for (int i = 0; i < b; ++i) {
      addend[i] = m0 + i;
      c.g3(GateKind::AND, ctrl, x[i], addend[i]);
    }
  }

  // Cuccaro MAJ/UMA chain using the ancilla as incoming carry.
  auto maj = [&](int ci, int bi, int ai) {
    c.g2(GateKind::CX, ai, bi);
    c.g2(GateKind::CX, ai, ci);
    c.g3(GateKind::CCX, ci, bi, ai);
  };
  auto uma = [&](int ci, int bi, int ai) {
    c.g3(GateKind::CCX, ci, bi, ai);
    c.g2(GateKind::CX, ai, ci);
    c.g2(GateKind::CX, ci, bi);
  };
  std::vector<int> prev(b);
  prev[0] = anc;
  for (int i = 1; i < b; ++i) prev[i] = addend[i - 1];
  for (int i = 0; i < b; ++i) maj(prev[i], y[i], addend[i]);
  for (int i = b - 1; i >= 0; --i) uma(prev[i], y[i], addend[i]);

  if (controlled)
    for (int i = b - 1; i >= 0; --i) c.g3(GateKind::ANDdg, ctrl, x[i], addend[i]);
  c.validate();
  return c;
}

struct DivmodLayout {
  std::vector<int> quotient;   // little-endian; high bits of x div lam
  std::vector<int> remainder;  // little-endian; x mod lam
};

// In-place restoring division of the register x by the classical constant lam.
// ext supplies ceil(log2 lam)+1 clean pool qubits (quotient bits are carved
// from the pool as window tops are proven zero and released back). work
// supplies the adder load/scratch space, 2*ceil(log2 lam)+2 clean qubits,
// returned clean.
inline DivmodLayout append_divmod(Circuit& c, const std::vector<int>& x,
                                  std::uint64_t lam, const std::vector<int>& ext,
                                  const std::vector<int>& work) {
  const int n = static_cast<int>(x.size());
  if (lam == 0) throw ParamError("divmod: lam must be positive");
  DivmodLayout lay;
  if (lam == 1) {
    lay.quotient = x;
    return lay;
  }
  int k = 0;
  while ((std::uint64_t(1) << k) < lam) ++k;
  if ((std::uint64_t(1) << k) == lam) {
    // power of two: plain bit split
    if (k >= n) {
      lay.remainder = x;
      return lay;
    }
    lay.remainder.assign(x.begin(), x.begin() + k);
    lay.quotient.assign(x.begin() + k, x.end());
    return lay;
  }
  if (static_cast<int>(ext.size()) < k + 1) throw ParamError("divmod: ext pool too small");
  if (static_cast<int>(work.size()) < 2 * k + 2) throw ParamError("divmod: work space too small");
  std::vector<int> load(work.begin(), work.begin() + (k + 1));
  std::vector<int> scratch(work.begin() + (k + 1), work.begin() + (2 * k + 2));

  std::vector<int> pool(ext.rbegin(), ext.rend());  // stack, top = back
  std::vector<int> R;
  std::uint64_t maxR = 0;
  std::vector<int> qbits;
  for (int i = n - 1; i >= 0; --i) {
    std::vector<int> W;
    W.push_back(x[i]);
    W.insert(W.end(), R.begin(), R.end());
    std::uint64_t maxW = 2 * maxR + 1;
    if (maxW < lam) {
      R = W;
      maxR = maxW;
      continue;
    }
    const int w = static_cast<int>(W.size());
    if (pool.empty()) throw ParamError("divmod: pool exhausted");
    int f = pool.back();
    pool.pop_back();
    std::uint64_t mu = (std::uint64_t(1) << w) - lam;
    detail::append_add_const(c, mu, W, load, scratch, std::nullopt, f);
    c.g1(GateKind::X, f);
    detail::append_add_const(c, lam, W, load, scratch, f, std::nullopt);
    c.g1(GateKind::X, f);
    qbits.push_back(f);
    R = W;
    maxR = lam - 1;
    while (static_cast<int>(R.size()) > k) {
      pool.push_back(R.back());  // provably |0>: R < lam <= 2^k - 1
      R.pop_back();
    }
  }
  lay.quotient = qbits;  // pushed for descending i; qbits[j] is quotient bit...
  // Reorder: qbits were produced MSB-first; make the list little-endian.
  std::reverse(lay.quotient.begin(), lay.quotient.end());
  lay.remainder = R;
  return lay;
}

// Appends the inverse of the gate range [from, to).
inline void append_inverse_of_range(Circuit& c, std::size_t from, std::size_t to) {
  Circuit tmp;
  tmp.n_qubits = c.n_qubits;
  tmp.n_classical = c.n_classical;
  tmp.gates.assign(c.gates.begin() + from, c.gates.begin() + to);
  Circuit inv = tmp.inverse();
  for (const auto& g : inv.gates) c.gates.push_back(g);
}

// Appends the inverse of everything emitted after gate index 'from'.
inline void append_inverse_of_tail(Circuit& c, std::size_t from) {
  append_inverse_of_range(c, from, c.gates.size());
}

// Number of quotient bits append_divmod leaves behind for an n-bit numerator.
inline int divmod_quotient_length(int n, std::uint64_t lam) {
  if (lam == 0) throw ParamError("division by zero");
  if (lam == 1) return n;
  if ((lam & (lam - 1)) == 0) {
    int k = 0;
    while ((std::uint64_t(1) << k) < lam) ++k;
    return std::max(0, n - k);
  }
  int skipped = 0;
  std::uint64_t max_r = 0;
  while (skipped < n && 2 * max_r + 1 < lam) {
    max_r = 2 * max_r + 1;
    ++skipped;
  }
  return n - skipped;
}

}  // namespace tgf
