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
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <random>
#include <unordered_map>
#include <vector>

#include "macros.hpp"
#include "resources.hpp"

namespace tgf {

using cplx = std::complex<double>;

struct SimOptions {
  // Dense amplitude limit; -1 means TGF_QUBIT_LIMIT from the environment, or 24.
  int qubit_limit = -1;
  int branch_limit = 256;
  // Expand macros before simulating. With expand=false, macro gates are applied
  // with their exact semantics and AND/ANDdg operand contracts are checked.
  bool expand = true;
  // Amplitude tolerance when merging measurement branches. Branches produced by
  // measured uncomputation gadgets agree only up to accumulated rounding noise,
  // which in deep circuits can exceed 1e-12; genuinely distinct branches differ
  // by order-of-amplitude entries, far above this.
  double merge_tolerance = 1e-9;
  CostModel model{};
};

inline int dense_qubit_limit(const SimOptions& opt) {
  if (opt.qubit_limit >= 0) return opt.qubit_limit;
  if (const char* env = std::getenv("TGF_QUBIT_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 24;
}

// One measurement outcome branch of a dense run.
struct Branch {
  std::vector<cplx> amps;  // basis index bit q is qubit q
  std::vector<std::int8_t> cbits;
  double prob = 1.0;
};

namespace detail {

struct Mat2 {
  cplx a, b, c, d;  // row-major
};

inline Mat2 gate_matrix(GateKind k) {
  constexpr double isq = 0.70710678118654752440;
  const cplx i(0, 1);
  const cplx t8 = std::polar(1.0, std::numbers::pi / 4);
  switch (k) {
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Y: return {0, -i, i, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::H: return {isq, isq, isq, -isq};
    case GateKind::S: return {1, 0, 0, i};
    case GateKind::Sdg: return {1, 0, 0, -i};
    case GateKind::T: return {1, 0, 0, t8};
    case GateKind::Tdg: return {1, 0, 0, std::conj(t8)};
    case GateKind::G: {
      // Sdg.H.T.H.S = exp(i pi/8) Ry(-pi/4)
      const double ch = std::cos(std::numbers::pi / 8);
      const double sh = std::sin(std::numbers::pi / 8);
      const cplx ph = std::polar(1.0, std::numbers::pi / 8);
      return {ph * ch, ph * sh, ph * -sh, ph * ch};
    }
    case GateKind::Gdg: {
      const double ch = std::cos(std::numbers::pi / 8);
      const double sh = std::sin(std::numbers::pi / 8);
      const cplx ph = std::polar(1.0, -std::numbers::pi / 8);
      return {ph * ch, ph * -sh, ph * sh, ph * ch};
    }
    default: throw ParamError("gate_matrix: not a single-qubit gate");
  }
}

inline void apply_1q(std::vector<cplx>& amps, const Mat2& m, int q) {
  const std::size_t bit = std::size_t(1) << q;
  for (std::size_t base = 0; base < amps.size(); ++base) {
    if (base & bit) continue;
    cplx a0 = amps[base], a1 = amps[base | bit];
    amps[base] = m.a * a0 + m.b * a1;
    amps[base | bit] = m.c * a0 + m.d * a1;
  }
}

inline void apply_perm_phase(std::vector<cplx>& amps, const Gate& g,
                             const std::vector<std::int8_t>& cbits, bool check_and) {
  const auto bit = [](int q) { return std::size_t(1) << q; };
  switch (g.kind) {
    case GateKind::CX: {
      std::size_t c = bit(g.q[0]), t = bit(g.q[1]);
      for (std::size_t s = 0; s < amps.size(); ++s)
        if ((s & c) && !(s & t)) std::swap(amps[s], amps[s | t]);
      break;
    }
    case GateKind::CZ: {
      std::size_t c = bit(g.q[0]), t = bit(g.q[1]);
      for (std::size_t s = 0; s < amps.size(); ++s)
        if ((s & c) && (s & t)) amps[s] = -amps[s];
      break;
    }
    case GateKind::AND:
      if (check_and) {
        std::size_t t = bit(g.q[2]);
        for (std::size_t s = 0; s < amps.size(); ++s)
          if ((s & t) && std::abs(amps[s]) > 1e-9)
            throw VerifyError("AND target is not |0>");
      }
      [[fallthrough]];
    case GateKind::ANDdg:
      if (g.kind == GateKind::ANDdg && check_and) {
        std::size_t a = bit(g.q[0]), b = bit(g.q[1]), t = bit(g.q[2]);
        for (std::size_t s = 0; s < amps.size(); ++s) {
          bool want = (s & a) && (s & b);
          if (bool(s & t) != want && std::abs(amps[s]) > 1e-9)
            throw VerifyError("ANDdg target does not hold AND of its operands");
        }
      }
      [[fallthrough]];
    case GateKind::CCX: {
      std::size_t a = bit(g.q[0]), b = bit(g.q[1]), t = bit(g.q[2]);
      for (std::size_t s = 0; s < amps.size(); ++s)
        if ((s & a) && (s & b) && !(s & t)) std::swap(amps[s], amps[s | t]);
      break;
    }
    case GateKind::CSWAP: {
      std::size_t c = bit(g.q[0]), x = bit(g.q[1]), y = bit(g.q[2]);
      for (std::size_t s = 0; s < amps.size(); ++s)
        if ((s & c) && (s & x) && !(s & y)) std::swap(amps[s], amps[(s ^ x) | y]);
      break;
    }
    case GateKind::RZ: {
      std::size_t t = bit(g.q[0]);
      cplx ph = std::polar(1.0, 2 * std::numbers::pi * g.angle.value());
      for (std::size_t s = 0; s < amps.size(); ++s)
        if (s & t) amps[s] *= ph;
      break;
    }
    case GateKind::CcX: {
      if (!cbits[g.cbit]) break;
      std::size_t t = bit(g.q[0]);
      for (std::size_t s = 0; s < amps.size(); ++s)
        if (!(s & t)) std::swap(amps[s], amps[s | t]);
      break;
    }
    case GateKind::CcZ: {
      if (!cbits[g.cbit]) break;
      std::size_t t = bit(g.q[0]);
      for (std::size_t s = 0; s < amps.size(); ++s)
        if (s & t) amps[s] = -amps[s];
      break;
    }
    case GateKind::CcCZ: {
      if (!cbits[g.cbit]) break;
      std::size_t a = bit(g.q[0]), b = bit(g.q[1]);
      for (std::size_t s = 0; s < amps.size(); ++s)
        if ((s & a) && (s & b)) amps[s] = -amps[s];
      break;
    }
    default: throw ParamError("apply_perm_phase: unhandled gate");
  }
}

inline bool branches_equal(const Branch& x, const Branch& y, double tol) {
  for (std::size_t i = 0; i < x.amps.size(); ++i)
    if (std::abs(x.amps[i] - y.amps[i]) > tol) return false;
  return true;
}

}  // namespace detail

// Dense statevector simulation with measurement branching. Returns all
// branches with nonzero probability; branches whose post-measurement states
// coincide are merged.
inline std::vector<Branch> simulate(const Circuit& circuit,
                                    const std::vector<cplx>& init,
                                    const SimOptions& opt = {}) {
  int limit = dense_qubit_limit(opt);
  if (circuit.n_qubits > limit)
    throw SimLimitError("circuit needs " + std::to_string(circuit.n_qubits) +
                        " qubits, dense limit is " + std::to_string(limit));
  Circuit flat = opt.expand ? expand_macros(circuit, opt.model) : circuit;
  flat.validate();
  const std::size_t dim = std::size_t(1) << flat.n_qubits;
  if (init.size() != dim) throw ParamError("initial state has wrong dimension");

  std::vector<Branch> branches(1);
  branches[0].amps = init;
  branches[0].cbits.assign(std::max(flat.n_classical, 1), 0);
  branches[0].prob = 1.0;

  auto merge_equal = [&](std::vector<Branch>& bs) {
    std::vector<Branch> merged;
    for (auto& nb : bs) {
      bool found = false;
      for (auto& mb : merged) {
        if (detail::branches_equal(mb, nb, opt.merge_tolerance)) {
          mb.prob += nb.prob;
          found = true;
          break;
        }
      }
      if (!found) merged.push_back(std::move(nb));
    }
    bs = std::move(merged);
  };

  for (const auto& g : flat.gates) {
    if (g.kind == GateKind::MZ) {
      std::vector<Branch> next;
      for (auto& br : branches) {
        const std::size_t bit = std::size_t(1) << g.q[0];
        // Renormalize each outcome by its own measured mass. Deriving p0 as
        // 1-p1 lets any norm drift double at every measurement.
        double mass[2] = {0.0, 0.0};
        for (std::size_t s = 0; s < dim; ++s)
          mass[(s & bit) != 0] += std::norm(br.amps[s]);
        double total = mass[0] + mass[1];
        for (int outcome = 0; outcome < 2; ++outcome) {
          double p = mass[outcome] / total;
          if (p < 1e-14) continue;
          Branch nb;
          nb.prob = br.prob * p;
          nb.cbits = br.cbits;
          if (std::size_t(g.cbit) >= nb.cbits.size()) nb.cbits.resize(g.cbit + 1, 0);
          nb.cbits[g.cbit] = static_cast<std::int8_t>(outcome);
          nb.amps.assign(dim, cplx{});
          double norm = 1.0 / std::sqrt(mass[outcome]);
          for (std::size_t s = 0; s < dim; ++s)
            if (bool(s & bit) == bool(outcome)) nb.amps[s] = br.amps[s] * norm;
          next.push_back(std::move(nb));
        }
      }
      branches = std::move(next);
      merge_equal(branches);
      if (static_cast<int>(branches.size()) > opt.branch_limit)
        throw SimLimitError("measurement branch limit exceeded");
      continue;
    }
    for (auto& br : branches) {
      switch (g.kind) {
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::G:
        case GateKind::Gdg:
          detail::apply_1q(br.amps, detail::gate_matrix(g.kind), g.q[0]);
          break;
        default:
          detail::apply_perm_phase(br.amps, g, br.cbits, !opt.expand);
      }
    }
    // Classical fixups can bring measurement branches back together.
    if (is_classically_controlled(g.kind) && branches.size() > 1)
      merge_equal(branches);
  }
  return branches;
}

inline std::vector<cplx> basis_state(int n_qubits, std::size_t index) {
  std::vector<cplx> v(std::size_t(1) << n_qubits, cplx{});
  v[index] = 1.0;
  return v;
}

// Dense run from |index>; requires a measurement-free deterministic outcome or
// merged branches collapsing to one.
inline std::vector<cplx> simulate_basis_input(const Circuit& circuit, std::size_t index,
                                              const SimOptions& opt = {}) {
  auto branches = simulate(circuit, basis_state(circuit.n_qubits, index), opt);
  if (branches.size() != 1)
    throw VerifyError("simulation did not collapse to a single branch");
  return branches[0].amps;
}

// Exact basis-path simulation for permutation+diagonal circuits (no H/G).
// Tracks one computational basis state and an exact rational phase, at any
// width up to 64 qubits.
struct BasisState {
  std::uint64_t bits = 0;
  Turn phase{};  // in turns
  std::vector<std::int8_t> cbits;
};

inline BasisState simulate_classical(const Circuit& circuit, std::uint64_t input,
                                     bool check_and = true) {
  if (circuit.n_qubits > 64)
    throw SimLimitError("classical basis simulation supports at most 64 qubits");
  Circuit flat = circuit;
  flat.validate();
  BasisState st;
  st.bits = input;
  st.cbits.assign(std::max(flat.n_classical, 1), 0);
  const auto get = [&](int q) { return (st.bits >> q) & 1; };
  const auto flip = [&](int q) { st.bits ^= std::uint64_t(1) << q; };
  for (const auto& g : flat.gates) {
    switch (g.kind) {
      case GateKind::X: flip(g.q[0]); break;
      case GateKind::Y:
        st.phase = st.phase + (get(g.q[0]) ? Turn(-1, 4) : Turn(1, 4));
        flip(g.q[0]);
        break;
      case GateKind::Z:
        if (get(g.q[0])) st.phase = st.phase + Turn(1, 2);
        break;
      case GateKind::S:
        if (get(g.q[0])) st.phase = st.phase + Turn(1, 4);
        break;
      case GateKind::Sdg:
        if (get(g.q[0])) st.phase = st.phase + Turn(-1, 4);
        break;
      case GateKind::T:
        if (get(g.q[0])) st.phase = st.phase + Turn(1, 8);
        break;
      case GateKind::Tdg:
        if (get(g.q[0])) st.phase = st.phase + Turn(-1, 8);
        break;
      case GateKind::RZ:
        if (get(g.q[0])) st.phase = st.phase + g.angle;
        break;
      case GateKind::CX:
        if (get(g.q[0])) flip(g.q[1]);
        break;
      case GateKind::CZ:
        if (get(g.q[0]) && get(g.q[1])) st.phase = st.phase + Turn(1, 2);
        break;
      case GateKind::AND:
        if (check_and && get(g.q[2])) throw VerifyError("AND target is not |0>");
        if (get(g.q[0]) && get(g.q[1])) flip(g.q[2]);
        break;
      case GateKind::ANDdg:
        if (check_and && get(g.q[2]) != (get(g.q[0]) && get(g.q[1])))
          throw VerifyError("ANDdg target does not hold AND of its operands");
        if (get(g.q[0]) && get(g.q[1])) flip(g.q[2]);
        break;
      case GateKind::CCX:
        if (get(g.q[0]) && get(g.q[1])) flip(g.q[2]);
        break;
      case GateKind::CSWAP:
        if (get(g.q[0]) && get(g.q[1]) != get(g.q[2])) {
          flip(g.q[1]);
          flip(g.q[2]);
        }
        break;
      case GateKind::MZ: {
        int out = static_cast<int>(get(g.q[0]));
        if (std::size_t(g.cbit) >= st.cbits.size()) st.cbits.resize(g.cbit + 1, 0);
        st.cbits[g.cbit] = static_cast<std::int8_t>(out);
        break;
      }
      case GateKind::CcX:
        if (st.cbits[g.cbit]) flip(g.q[0]);
        break;
      case GateKind::CcZ:
        if (st.cbits[g.cbit] && get(g.q[0])) st.phase = st.phase + Turn(1, 2);
        break;
      case GateKind::CcCZ:
        if (st.cbits[g.cbit] && get(g.q[0]) && get(g.q[1]))
          st.phase = st.phase + Turn(1, 2);
        break;
      default:
        throw SimLimitError("circuit is not permutation+diagonal (H or G present)");
    }
  }
  return st;
}

// Max deviation sqrt(1 - P(dirty registers found in their initial state)) over
// randomized trials: random basis inputs on index/control/output registers and
// random single-qubit product states on the dirty registers.
inline double verify_dirty_restoration(const Circuit& circuit, int trials = 8,
                                       std::uint64_t seed = 12345,
                                       const SimOptions& opt = {}) {
  std::vector<int> dirty;
  std::vector<int> inputs;
  for (const auto& r : circuit.registers) {
    for (int i = 0; i < r.width; ++i) {
      if (r.role == Role::workspace_dirty) dirty.push_back(r.start + i);
      else if (r.role == Role::index || r.role == Role::control ||
               r.role == Role::output)
        inputs.push_back(r.start + i);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const std::size_t dim = std::size_t(1) << circuit.n_qubits;
  double worst = 0;
  for (int trial = 0; trial < trials; ++trial) {
    // Per-qubit initial 1q states.
    std::vector<std::array<cplx, 2>> q0(circuit.n_qubits, {cplx{1.0}, cplx{}});
    if (trial > 0) {
      for (int q : inputs)
        if (uni(rng) < 0.5) q0[q] = {cplx{}, cplx{1.0}};
      for (int q : dirty) {
        if (trial % 2 == 1) {
          // basis trial
          if (uni(rng) < 0.5) q0[q] = {cplx{}, cplx{1.0}};
        } else {
          double th = std::acos(std::clamp(2 * uni(rng) - 1, -1.0, 1.0)) / 2;
          double ph = 2 * std::numbers::pi * uni(rng);
          q0[q] = {cplx{std::cos(th)}, std::polar(std::sin(th), ph)};
        }
      }
    }
    std::vector<cplx> init(dim, cplx{});
    for (std::size_t s = 0; s < dim; ++s) {
      cplx a{1.0};
      for (int q = 0; q < circuit.n_qubits && a != cplx{}; ++q)
        a *= q0[q][(s >> q) & 1];
      init[s] = a;
    }
    auto branches = simulate(circuit, init, opt);
    double deficit = 0;
    for (const auto& br : branches) {
      // Residual of |psi> against |phi><phi|_dirty x I, summed explicitly so
      // that an exactly-restoring circuit measures ~1e-15 and not sqrt(eps).
      std::vector<cplx> proj;
      const std::size_t keep_count = std::size_t(1) << (circuit.n_qubits - dirty.size());
      proj.assign(keep_count ? keep_count : 1, cplx{});
      const auto decompose = [&](std::size_t s, std::size_t& rest) {
        cplx w{1.0};
        int rbit = 0;
        rest = 0;
        for (int q = 0; q < circuit.n_qubits; ++q) {
          if (std::find(dirty.begin(), dirty.end(), q) != dirty.end()) {
            w *= std::conj(q0[q][(s >> q) & 1]);
          } else {
            rest |= (std::size_t((s >> q) & 1)) << rbit;
            ++rbit;
          }
        }
        return w;
      };
      for (std::size_t s = 0; s < dim; ++s) {
        std::size_t rest;
        cplx w = decompose(s, rest);
        proj[rest] += w * br.amps[s];
      }
      double r2 = 0;
      for (std::size_t s = 0; s < dim; ++s) {
        std::size_t rest;
        cplx w = decompose(s, rest);
        r2 += std::norm(br.amps[s] - std::conj(w) * proj[rest]);
      }
      deficit += br.prob * r2;
    }
    worst = std::max(worst, std::sqrt(std::max(0.0, deficit)));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Sparse basis-map simulation.
//
// Tracks only the nonzero computational-basis amplitudes in a hash map, for
// up to 128 qubits. This is the verification path for circuits far past the
// dense limit whose support stays small: state preparation keeps ~N terms,
// purified preparation ~N*2^b. Gates are applied at the macro level with
// their exact semantics (AND/ANDdg operand contracts checked per term), so
// the circuit must be measurement-free and any relative-phase macro policy
// is ignored.

struct SparseKey {
  std::uint64_t lo = 0, hi = 0;

  bool get(int q) const {
    return q < 64 ? (lo >> q) & 1 : (hi >> (q - 64)) & 1;
  }
  SparseKey with_flip(int q) const {
    SparseKey k = *this;
    if (q < 64) k.lo ^= std::uint64_t(1) << q;
    else k.hi ^= std::uint64_t(1) << (q - 64);
    return k;
  }
  SparseKey with_bit(int q, bool v) const {
    return get(q) == v ? *this : with_flip(q);
  }
  bool operator==(const SparseKey& o) const { return lo == o.lo && hi == o.hi; }
};

struct SparseKeyHash {
  std::size_t operator()(const SparseKey& k) const {
    std::uint64_t x = k.lo * 0x9e3779b97f4a7c15ull;
    x ^= x >> 32;
    x += k.hi * 0xbf58476d1ce4e5b9ull;
    x ^= x >> 29;
    return static_cast<std::size_t>(x * 0x94d049bb133111ebull);
  }
};

struct SparseState {
  std::unordered_map<SparseKey, cplx, SparseKeyHash> amps;

  double norm() const {
    double s = 0;
    for (const auto& [k, a] : amps) s += std::norm(a);
    return std::sqrt(s);
  }
  cplx at(const SparseKey& k) const {
    auto it = amps.find(k);
    return it == amps.end() ? cplx{} : it->second;
  }
};

inline SparseState sparse_basis(const SparseKey& k) {
  SparseState s;
  s.amps.emplace(k, cplx{1.0});
  return s;
}

struct SparseOptions {
  double prune = 1e-16;                             // drop smaller amplitudes
  std::size_t support_limit = std::size_t(1) << 22; // terms, not qubits
};

inline SparseState simulate_sparse(const Circuit& circuit, const SparseState& init,
                                   const SparseOptions& opt = {}) {
  if (circuit.n_qubits > 128)
    throw SimLimitError("sparse simulation supports at most 128 qubits");
  using Map = std::unordered_map<SparseKey, cplx, SparseKeyHash>;
  Map cur = init.amps, next;

  const auto check_limit = [&](std::size_t n) {
    if (n > opt.support_limit)
      throw SimLimitError("sparse support exceeds the configured limit");
  };
  const auto permute = [&](auto&& newkey) {
    next.clear();
    next.reserve(cur.size());
    for (auto& [k, a] : cur) {
      cplx amp = a;
      SparseKey nk = newkey(k, amp);
      next.emplace(nk, amp);
    }
    cur.swap(next);
  };

  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::Z:
        for (auto& [k, a] : cur)
          if (k.get(g.q[0])) a = -a;
        break;
      case GateKind::S:
      case GateKind::Sdg: {
        const cplx ph(0, g.kind == GateKind::S ? 1 : -1);
        for (auto& [k, a] : cur)
          if (k.get(g.q[0])) a *= ph;
        break;
      }
      case GateKind::T:
      case GateKind::Tdg: {
        const cplx ph = std::polar(1.0, (g.kind == GateKind::T ? 1 : -1) *
                                             std::numbers::pi / 4);
        for (auto& [k, a] : cur)
          if (k.get(g.q[0])) a *= ph;
        break;
      }
      case GateKind::RZ: {
        const cplx ph = std::polar(1.0, 2 * std::numbers::pi * g.angle.value());
        for (auto& [k, a] : cur)
          if (k.get(g.q[0])) a *= ph;
        break;
      }
      case GateKind::CZ:
        for (auto& [k, a] : cur)
          if (k.get(g.q[0]) && k.get(g.q[1])) a = -a;
        break;
      case GateKind::X:
        permute([&](const SparseKey& k, cplx&) { return k.with_flip(g.q[0]); });
        break;
      case GateKind::Y:
        permute([&](const SparseKey& k, cplx& a) {
          a *= k.get(g.q[0]) ? cplx(0, -1) : cplx(0, 1);
          return k.with_flip(g.q[0]);
        });
        break;
      case GateKind::CX:
        permute([&](const SparseKey& k, cplx&) {
          return k.get(g.q[0]) ? k.with_flip(g.q[1]) : k;
        });
        break;
      case GateKind::CCX:
        permute([&](const SparseKey& k, cplx&) {
          return k.get(g.q[0]) && k.get(g.q[1]) ? k.with_flip(g.q[2]) : k;
        });
        break;
      case GateKind::AND:
        permute([&](const SparseKey& k, cplx&) {
          if (k.get(g.q[2])) throw VerifyError("AND target is not |0>");
          return k.get(g.q[0]) && k.get(g.q[1]) ? k.with_flip(g.q[2]) : k;
        });
        break;
      case GateKind::ANDdg:
        permute([&](const SparseKey& k, cplx&) {
          bool want = k.get(g.q[0]) && k.get(g.q[1]);
          if (k.get(g.q[2]) != want)
            throw VerifyError("ANDdg target does not hold AND of its operands");
          return k.with_bit(g.q[2], false);
        });
        break;
      case GateKind::CSWAP:
        permute([&](const SparseKey& k, cplx&) {
          if (!k.get(g.q[0])) return k;
          bool x = k.get(g.q[1]), y = k.get(g.q[2]);
          return k.with_bit(g.q[1], y).with_bit(g.q[2], x);
        });
        break;
      case GateKind::H:
      case GateKind::G:
      case GateKind::Gdg: {
        const detail::Mat2 m = detail::gate_matrix(g.kind);
        next.clear();
        next.reserve(2 * cur.size());
        const int q = g.q[0];
        for (const auto& [k, a] : cur) {
          if (!k.get(q)) {
            if (m.a != cplx{}) next[k] += m.a * a;
            if (m.c != cplx{}) next[k.with_flip(q)] += m.c * a;
          } else {
            if (m.b != cplx{}) next[k.with_flip(q)] += m.b * a;
            if (m.d != cplx{}) next[k] += m.d * a;
          }
        }
        for (auto it = next.begin(); it != next.end();)
          it = std::abs(it->second) < opt.prune ? next.erase(it) : std::next(it);
        cur.swap(next);
        check_limit(cur.size());
        break;
      }
      case GateKind::MZ:
      case GateKind::CcX:
      case GateKind::CcZ:
      case GateKind::CcCZ:
        throw ParamError("sparse simulation requires a measurement-free circuit");
      default:
        throw ParamError("simulate_sparse: unhandled gate");
    }
  }
  SparseState out;
  out.amps = std::move(cur);
  return out;
}

}  // namespace tgf
