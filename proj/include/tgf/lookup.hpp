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
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tgf/arith.hpp"
#include "tgf/bits.hpp"
#include "tgf/circuit.hpp"
#include "tgf/errors.hpp"
#include "tgf/fanout.hpp"
#include "tgf/swapnet.hpp"

namespace tgf {

// Classical data table: N entries of b bits each.
struct DataTable {
  int b = 1;
  std::vector<std::uint64_t> entries;

  int size() const { return static_cast<int>(entries.size()); }

  void validate() const {
    if (b < 1 || b > 63) throw ParamError("table entry width must be in [1, 63]");
    if (entries.empty()) throw ParamError("table must have at least one entry");
    for (auto e : entries)
      if (e >> b) throw ParamError("table entry exceeds its bit width");
  }

  std::uint64_t at(std::uint64_t x) const {
    return x < entries.size() ? entries[x] : 0;
  }
};

// Duplication plan for the hybrid lookup: lambda b-bit copies addressed by
// quotient and remainder of the index.
struct LookupPlan {
  int lambda = 1;
  int quotient_width = 0;
  int remainder_width = 0;
  bool dirty = false;
};

inline LookupPlan make_lookup_plan(int N, int lambda, bool dirty = false) {
  if (N < 1) throw ParamError("lookup plan needs N >= 1");
  if (lambda < 1 || lambda > N) throw ParamError("lambda must be in [1, N]");
  LookupPlan p;
  p.lambda = lambda;
  const int groups = (N + lambda - 1) / lambda;
  p.quotient_width = groups > 1 ? ceil_log2(std::uint64_t(groups)) : 0;
  p.remainder_width = lambda > 1 ? ceil_log2(std::uint64_t(lambda)) : 0;
  p.dirty = dirty;
  return p;
}

namespace detail {

// Unary-iteration multiplexer: for every leaf x with a nonempty target list,
// flip leaf_targets[x] when the index equals x. idx is little-endian; the
// walk consumes bits most significant first, computing child controls with
// one AND per visited internal node and releasing them on the way out.
// All-empty subtrees are pruned. Needs idx.size()-1 helper qubits.
inline void append_select_targets(Circuit& c, const std::vector<int>& idx,
                                  const std::vector<int>& helpers,
                                  const std::vector<std::vector<int>>& leaf_targets) {
  const int nlev = static_cast<int>(idx.size());
  const std::size_t leaves = std::size_t(1) << nlev;
  if (leaf_targets.size() > leaves)
    throw ParamError("select: too many leaves for the index width");
  auto nonempty = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t x = lo; x < hi && x < leaf_targets.size(); ++x)
      if (!leaf_targets[x].empty()) return true;
    return false;
  };
  auto walk = [&](auto&& self, int level, std::size_t prefix, int ctrl) -> void {
    const std::size_t span = std::size_t(1) << (nlev - level);
    if (!nonempty(prefix, prefix + span)) return;
    if (level == nlev) {
      const auto& targets = leaf_targets[prefix];
      if (ctrl < 0)
        for (int t : targets) c.g1(GateKind::X, t);
      else
        append_fanout(c, ctrl, targets);
      return;
    }
    const int q = idx[nlev - 1 - level];
    const std::size_t hi_bit = std::size_t(1) << (nlev - 1 - level);
    const bool left = nonempty(prefix, prefix + hi_bit);
    const bool right = nonempty(prefix + hi_bit, prefix + span);
    if (ctrl < 0) {
      if (left) {
        c.g1(GateKind::X, q);
        self(self, level + 1, prefix, q);
        c.g1(GateKind::X, q);
      }
      if (right) self(self, level + 1, prefix + hi_bit, q);
      return;
    }
    const int h = helpers.at(level - 1);
    c.g3(GateKind::AND, ctrl, q, h);
    if (left) {
      c.g2(GateKind::CX, ctrl, h);
      self(self, level + 1, prefix, h);
      c.g2(GateKind::CX, ctrl, h);
    }
    if (right) self(self, level + 1, prefix + hi_bit, h);
    c.g3(GateKind::ANDdg, ctrl, q, h);
  };
  walk(walk, 0, 0, -1);
}

// Leaf target lists for a batched select: leaf q covers entries
// q*lambda .. q*lambda+lambda-1, entry j's bit t landing on block_bits[j][t].
inline std::vector<std::vector<int>> batched_leaf_targets(
    const DataTable& table, int lambda,
    const std::vector<std::vector<int>>& block_bits, std::size_t leaves) {
  std::vector<std::vector<int>> leaf_targets(leaves);
  for (std::size_t q = 0; q < leaves; ++q)
    for (int j = 0; j < lambda; ++j) {
      std::uint64_t e = table.at(q * lambda + j);
      for (int t = 0; t < table.b; ++t)
        if ((e >> t) & 1) leaf_targets[q].push_back(block_bits[j][t]);
    }
  return leaf_targets;
}

// One swap-network pass over lambda b-bit blocks, addressed little-endian by
// the control list r. Levels ascend, routing block r to block 0; with invert
// set they descend, which is the inverse permutation.
inline void append_block_swap_network(Circuit& c, const std::vector<int>& r,
                                      const std::vector<std::vector<int>>& blocks,
                                      SwapStrategy strategy, bool invert = false) {
  const int lambda = static_cast<int>(blocks.size());
  const int levels = static_cast<int>(r.size());
  for (int step = 0; step < levels; ++step) {
    const int j = invert ? levels - 1 - step : step;
    std::vector<int> A, B;
    for (int i = 0; i + (1 << j) < lambda; i += 1 << (j + 1))
      for (std::size_t t = 0; t < blocks[i].size(); ++t) {
        A.push_back(blocks[i][t]);
        B.push_back(blocks[i + (1 << j)][t]);
      }
    append_controlled_swap_pairs(c, r[j], A, B, strategy);
  }
}

}  // namespace detail

// |x>|0> -> |x>|a_x> by unary iteration; ceil(log2 N)-1 clean helpers.
inline Circuit build_select(const DataTable& table) {
  table.validate();
  const int N = table.size();
  const int nlev = N > 1 ? ceil_log2(std::uint64_t(N)) : 0;
  Circuit c;
  std::vector<int> idx, helpers;
  if (nlev > 0) {
    int i0 = c.add_register("index", nlev, Role::index);
    for (int i = 0; i < nlev; ++i) idx.push_back(i0 + i);
  }
  if (nlev > 1) {
    int h0 = c.add_register("sel", nlev - 1, Role::workspace_clean);
    for (int i = 0; i < nlev - 1; ++i) helpers.push_back(h0 + i);
  }
  int o0 = c.add_register("out", table.b, Role::output);
  std::vector<std::vector<int>> block(1);
  for (int t = 0; t < table.b; ++t) block[0].push_back(o0 + t);
  auto leaf_targets =
      detail::batched_leaf_targets(table, 1, block, std::size_t(1) << nlev);
  detail::append_select_targets(c, idx, helpers, leaf_targets);
  return c;
}

// |x> -> |q>|r> in place for x = q*lambda + r. Power-of-two lambda is pure
// relabeling. The layout of the surviving quotient/remainder bits is written
// to *layout when given.
inline Circuit build_divmod(int n_index, std::uint64_t lambda,
                            DivmodLayout* layout = nullptr) {
  if (n_index < 1) throw ParamError("divmod needs an index register");
  if (lambda < 1) throw ParamError("divmod needs lambda >= 1");
  Circuit c;
  int x0 = c.add_register("x", n_index, Role::index);
  std::vector<int> x(n_index);
  for (int i = 0; i < n_index; ++i) x[i] = x0 + i;
  std::vector<int> ext, work;
  const bool trivial = lambda == 1 || is_power_of_two(lambda);
  if (!trivial) {
    const int k = ceil_log2(lambda);
    int e0 = c.add_register("ext", k + 1, Role::workspace_clean);
    int w0 = c.add_register("work", 2 * k + 2, Role::workspace_clean);
    for (int i = 0; i <= k; ++i) ext.push_back(e0 + i);
    for (int i = 0; i < 2 * k + 2; ++i) work.push_back(w0 + i);
  }
  DivmodLayout lay = append_divmod(c, x, lambda, ext, work);
  if (layout) *layout = lay;
  return c;
}

// Fig. 1c hybrid: Select over the quotient writes lambda consecutive entries
// into duplicated registers, a swap network over the remainder routes entry x
// to block 0. Blocks 1.. end as garbage; uncompute by running the inverse.
inline Circuit build_selectswap(const DataTable& table, const LookupPlan& plan) {
  table.validate();
  if (plan.dirty) throw ParamError("plan is for the dirty variant");
  const int N = table.size();
  const int lambda = plan.lambda;
  if (lambda < 1 || lambda > N) throw ParamError("lambda must be in [1, N]");
  const int n = N > 1 ? ceil_log2(std::uint64_t(N)) : 0;
  const int qlen = divmod_quotient_length(n, std::uint64_t(lambda));

  Circuit c;
  std::vector<int> x, ext, work, helpers;
  if (n > 0) {
    int x0 = c.add_register("index", n, Role::index);
    for (int i = 0; i < n; ++i) x.push_back(x0 + i);
  }
  const bool divmod_gates = lambda > 1 && !is_power_of_two(std::uint64_t(lambda));
  if (divmod_gates) {
    const int k = ceil_log2(std::uint64_t(lambda));
    int e0 = c.add_register("dmext", k + 1, Role::workspace_clean);
    int w0 = c.add_register("dmwork", 2 * k + 2, Role::workspace_clean);
    for (int i = 0; i <= k; ++i) ext.push_back(e0 + i);
    for (int i = 0; i < 2 * k + 2; ++i) work.push_back(w0 + i);
  }
  if (qlen > 1) {
    int h0 = c.add_register("sel", qlen - 1, Role::workspace_clean);
    for (int i = 0; i < qlen - 1; ++i) helpers.push_back(h0 + i);
  }
  std::vector<std::vector<int>> blocks(lambda);
  for (int j = 0; j < lambda; ++j) {
    int d0 = c.add_register("d" + std::to_string(j), table.b,
                            j == 0 ? Role::output : Role::workspace_clean);
    for (int t = 0; t < table.b; ++t) blocks[j].push_back(d0 + t);
  }
  c.policy.cswap = ToffoliStrategy::seven_t;

  const std::size_t dm_begin = c.gates.size();
  DivmodLayout lay = append_divmod(c, x, std::uint64_t(lambda), ext, work);
  const std::size_t dm_end = c.gates.size();

  auto leaf_targets = detail::batched_leaf_targets(
      table, lambda, blocks, std::size_t(1) << lay.quotient.size());
  detail::append_select_targets(c, lay.quotient, helpers, leaf_targets);
  detail::append_block_swap_network(c, lay.remainder, blocks, SwapStrategy::linear);

  append_inverse_of_range(c, dm_begin, dm_end);
  return c;
}

// Fig. 1d: garbage-free lookup through b*lambda dirty qubits. Two Selects,
// four swap-network passes and two fanout copies restore the dirty block
// exactly while leaving a_x on the clean output register.
//
// Swaps default to the exact seven-T decomposition. Phase-incorrect swaps are
// much cheaper but their data-dependent phases do not provably cancel between
// the two passes, so asking for them marks the circuit diagonal-phase-only.
inline Circuit build_selectswap_dirty(const DataTable& table, const LookupPlan& plan,
                                      SwapStrategy swaps = SwapStrategy::linear) {
  table.validate();
  if (!plan.dirty) throw ParamError("plan is for the garbage variant");
  const int N = table.size();
  const int lambda = plan.lambda;
  if (lambda < 1 || lambda > N) throw ParamError("lambda must be in [1, N]");
  const int n = N > 1 ? ceil_log2(std::uint64_t(N)) : 0;
  const int qlen = divmod_quotient_length(n, std::uint64_t(lambda));

  Circuit c;
  std::vector<int> x, ext, work, helpers;
  if (n > 0) {
    int x0 = c.add_register("index", n, Role::index);
    for (int i = 0; i < n; ++i) x.push_back(x0 + i);
  }
  const bool divmod_gates = lambda > 1 && !is_power_of_two(std::uint64_t(lambda));
  if (divmod_gates) {
    const int k = ceil_log2(std::uint64_t(lambda));
    int e0 = c.add_register("dmext", k + 1, Role::workspace_clean);
    int w0 = c.add_register("dmwork", 2 * k + 2, Role::workspace_clean);
    for (int i = 0; i <= k; ++i) ext.push_back(e0 + i);
    for (int i = 0; i < 2 * k + 2; ++i) work.push_back(w0 + i);
  }
  if (qlen > 1) {
    int h0 = c.add_register("sel", qlen - 1, Role::workspace_clean);
    for (int i = 0; i < qlen - 1; ++i) helpers.push_back(h0 + i);
  }
  int y0 = c.add_register("out", table.b, Role::output);
  std::vector<std::vector<int>> blocks(lambda);
  for (int j = 0; j < lambda; ++j) {
    int d0 = c.add_register("d" + std::to_string(j), table.b, Role::workspace_dirty);
    for (int t = 0; t < table.b; ++t) blocks[j].push_back(d0 + t);
  }
  c.policy.cswap = ToffoliStrategy::seven_t;
  if (swaps == SwapStrategy::phase_incorrect) c.up_to_diagonal_phase = true;

  const std::size_t dm_begin = c.gates.size();
  DivmodLayout lay = append_divmod(c, x, std::uint64_t(lambda), ext, work);
  const std::size_t dm_end = c.gates.size();

  auto leaf_targets = detail::batched_leaf_targets(
      table, lambda, blocks, std::size_t(1) << lay.quotient.size());
  auto select = [&] {
    detail::append_select_targets(c, lay.quotient, helpers, leaf_targets);
  };
  auto swap = [&](bool invert) {
    detail::append_block_swap_network(c, lay.remainder, blocks, swaps, invert);
  };
  auto copy = [&] {
    for (int t = 0; t < table.b; ++t) c.g2(GateKind::CX, blocks[0][t], y0 + t);
  };
  select();
  swap(false);
  copy();
  swap(true);
  select();
  swap(false);
  copy();
  swap(true);

  append_inverse_of_range(c, dm_begin, dm_end);
  return c;
}

// Indicator function e^(n): |x>|y> -> |x>|y xor one-hot(x)|.
//
//   exact        AND-gadget products through clean scratch; no stray phases.
//   fast_phases  relative-phase Toffolis straight onto the outputs; cheaper
//                in depth and workspace but correct only up to diagonal +-1.
enum class IndicatorMode { exact, fast_phases };

namespace detail {

inline int indicator_workspace(int n, IndicatorMode mode) {
  if (n <= 1) return 0;
  const int n_lo = n / 2, n_hi = n - n_lo;
  const int Nh = 1 << n_hi, Nl = 1 << n_lo;
  int product = 0;
  if (mode == IndicatorMode::exact) product = Nl > 2 ? 2 * Nl : Nl;
  int inner = std::max(indicator_workspace(n_lo, mode), product);
  return Nh + std::max(indicator_workspace(n_hi, mode), Nl + inner);
}

// Emits U_n on x (n bits) and y (2^n bits), using clean qubits from pool
// (returned clean). Recursive halves: e_hi and e_lo are built in workspace,
// all pairwise products are XORed into y, then both halves uncompute by
// reapplying themselves.
inline void append_indicator(Circuit& c, const std::vector<int>& x,
                             const std::vector<int>& y,
                             const std::vector<int>& pool, IndicatorMode mode) {
  const int n = static_cast<int>(x.size());
  if (y.size() != (std::size_t(1) << n)) throw ParamError("indicator: |y| != 2^n");
  if (n == 1) {
    c.g1(GateKind::X, x[0]);
    c.g2(GateKind::CX, x[0], y[0]);
    c.g1(GateKind::X, x[0]);
    c.g2(GateKind::CX, x[0], y[1]);
    return;
  }
  const int n_lo = n / 2, n_hi = n - n_lo;
  const int Nh = 1 << n_hi, Nl = 1 << n_lo;
  if (static_cast<int>(pool.size()) < indicator_workspace(n, mode))
    throw ParamError("indicator: workspace pool too small");
  std::vector<int> x_lo(x.begin(), x.begin() + n_lo);
  std::vector<int> x_hi(x.begin() + n_lo, x.end());
  std::vector<int> w_hi(pool.begin(), pool.begin() + Nh);
  std::vector<int> rest1(pool.begin() + Nh, pool.end());
  std::vector<int> w_lo(rest1.begin(), rest1.begin() + Nl);
  std::vector<int> rest2(rest1.begin() + Nl, rest1.end());

  append_indicator(c, x_hi, w_hi, rest1, mode);
  append_indicator(c, x_lo, w_lo, rest2, mode);

  if (mode == IndicatorMode::fast_phases) {
    for (int hi = 0; hi < Nh; ++hi)
      for (int lo = 0; lo < Nl; ++lo)
        c.g3(GateKind::CCX, w_hi[hi], w_lo[lo], y[hi * Nl + lo]);
  } else {
    const bool copies = Nl > 2;
    std::vector<int> cp, s;
    if (copies) {
      cp.assign(rest2.begin(), rest2.begin() + Nl);
      s.assign(rest2.begin() + Nl, rest2.begin() + 2 * Nl);
    } else {
      s.assign(rest2.begin(), rest2.begin() + Nl);
    }
    for (int hi = 0; hi < Nh; ++hi) {
      if (copies) append_fanout(c, w_hi[hi], cp);
      for (int lo = 0; lo < Nl; ++lo)
        c.g3(GateKind::AND, copies ? cp[lo] : w_hi[hi], w_lo[lo], s[lo]);
      for (int lo = 0; lo < Nl; ++lo) c.g2(GateKind::CX, s[lo], y[hi * Nl + lo]);
      for (int lo = 0; lo < Nl; ++lo)
        c.g3(GateKind::ANDdg, copies ? cp[lo] : w_hi[hi], w_lo[lo], s[lo]);
      if (copies) append_fanout(c, w_hi[hi], cp);
    }
  }

  append_indicator(c, x_lo, w_lo, rest2, mode);
  append_indicator(c, x_hi, w_hi, rest1, mode);
}

}  // namespace detail

inline Circuit build_indicator(int n, IndicatorMode mode = IndicatorMode::exact) {
  if (n < 1) throw ParamError("indicator needs n >= 1");
  if (n > 20) throw ParamError("indicator output register would be excessive");
  Circuit c;
  int x0 = c.add_register("x", n, Role::index);
  int y0 = c.add_register("y", 1 << n, Role::output);
  const int ws = detail::indicator_workspace(n, mode);
  std::vector<int> pool;
  if (ws > 0) {
    int w0 = c.add_register("w", ws, Role::workspace_clean);
    for (int i = 0; i < ws; ++i) pool.push_back(w0 + i);
  }
  std::vector<int> x(n), y(1 << n);
  for (int i = 0; i < n; ++i) x[i] = x0 + i;
  for (int i = 0; i < (1 << n); ++i) y[i] = y0 + i;
  if (mode == IndicatorMode::fast_phases) {
    c.policy.ccx = ToffoliStrategy::relphase_four_t;
    c.up_to_diagonal_phase = true;
  }
  detail::append_indicator(c, x, y, pool, mode);
  return c;
}

// Split-index lookup: f-hat of the high bits as a b x 2^k bit matrix times
// the indicator vector of the low bits. lambda scratch bits bound how many
// of the product terms are in flight at once.
inline Circuit build_lookup_via_indicator(const DataTable& table, int k, int lambda) {
  table.validate();
  const int N = table.size();
  const int n = N > 1 ? ceil_log2(std::uint64_t(N)) : 0;
  if (k < 0 || k > n) throw ParamError("split parameter k must be in [0, n]");
  const std::int64_t terms = std::int64_t(table.b) << k;
  if (lambda < 1 || lambda > terms) throw ParamError("lambda must be in [1, b*2^k]");
  const int Nl = 1 << k;

  Circuit c;
  std::vector<int> x;
  if (n > 0) {
    int x0 = c.add_register("index", n, Role::index);
    for (int i = 0; i < n; ++i) x.push_back(x0 + i);
  }
  int o0 = c.add_register("out", table.b, Role::output);
  std::vector<int> x_lo(x.begin(), x.begin() + k);
  std::vector<int> x_hi(x.begin() + k, x.end());

  std::vector<int> we, wi_pool, wf, helpers, s;
  if (k > 0) {
    int e0 = c.add_register("e", Nl, Role::workspace_clean);
    for (int i = 0; i < Nl; ++i) we.push_back(e0 + i);
    const int wi = detail::indicator_workspace(k, IndicatorMode::exact);
    if (wi > 0) {
      int w0 = c.add_register("ew", wi, Role::workspace_clean);
      for (int i = 0; i < wi; ++i) wi_pool.push_back(w0 + i);
    }
  }
  const int nhi = n - k;
  if (nhi > 0) {
    int f0 = c.add_register("f", table.b * Nl, Role::workspace_clean);
    for (int i = 0; i < table.b * Nl; ++i) wf.push_back(f0 + i);
    if (nhi > 1) {
      int h0 = c.add_register("sel", nhi - 1, Role::workspace_clean);
      for (int i = 0; i < nhi - 1; ++i) helpers.push_back(h0 + i);
    }
  }
  if (k > 0 && nhi > 0) {
    int s0 = c.add_register("s", lambda, Role::workspace_clean);
    for (int i = 0; i < lambda; ++i) s.push_back(s0 + i);
  }

  // e = one-hot(x_lo)
  if (k > 0) detail::append_indicator(c, x_lo, we, wi_pool, IndicatorMode::exact);

  if (nhi == 0) {
    // constant matrix: plain parity network out_t ^= sum_lo M[t][lo] e[lo]
    for (int t = 0; t < table.b; ++t)
      for (int lo = 0; lo < Nl; ++lo)
        if ((table.at(lo) >> t) & 1) c.g2(GateKind::CX, we[lo], o0 + t);
  } else {
    // f = f-hat(x_hi) via batched select over the high bits
    std::vector<std::vector<int>> fblocks(Nl);
    for (int lo = 0; lo < Nl; ++lo)
      for (int t = 0; t < table.b; ++t) fblocks[lo].push_back(wf[lo * table.b + t]);
    const std::size_t sel_begin = c.gates.size();
    auto leaf_targets = detail::batched_leaf_targets(table, Nl, fblocks,
                                                     std::size_t(1) << nhi);
    detail::append_select_targets(c, x_hi, helpers, leaf_targets);
    const std::size_t sel_end = c.gates.size();

    if (k == 0) {
      for (int t = 0; t < table.b; ++t) c.g2(GateKind::CX, wf[t], o0 + t);
    } else {
      // matrix/vector product in chunks of lambda AND gadgets
      int chunk = 0;
      std::vector<std::array<int, 3>> pending;
      auto flush = [&] {
        for (auto& p : pending) c.g2(GateKind::CX, p[2], o0 + p[0]);
        for (auto& p : pending)
          c.g3(GateKind::ANDdg, wf[p[1]], we[p[1] / table.b], p[2]);
        pending.clear();
        chunk = 0;
      };
      for (int t = 0; t < table.b; ++t)
        for (int lo = 0; lo < Nl; ++lo) {
          const int fi = lo * table.b + t;
          c.g3(GateKind::AND, wf[fi], we[lo], s[chunk]);
          pending.push_back({t, fi, s[chunk]});
          if (++chunk == lambda) flush();
        }
      flush();
    }
    append_inverse_of_range(c, sel_begin, sel_end);
  }

  if (k > 0) detail::append_indicator(c, x_lo, we, wi_pool, IndicatorMode::exact);
  return c;
}

// XORs parities of the source bits into out through dirty scratch, one dirty
// qubit per output. A layer of CNOTs computes a linear map T, so running it
// twice around a copy uses T(g xor x) xor T(g) = T(x): whatever the scratch
// held, out picks up exactly the parity and the scratch is restored.
inline void append_parity_via_dirty(Circuit& c,
                                    const std::vector<std::vector<int>>& terms,
                                    const std::vector<int>& dirty,
                                    const std::vector<int>& out) {
  if (terms.size() != dirty.size() || terms.size() != out.size())
    throw ParamError("parity_via_dirty: terms, dirty and out must align");
  auto layer = [&] {
    for (std::size_t j = 0; j < terms.size(); ++j)
      for (int src : terms[j]) c.g2(GateKind::CX, src, dirty[j]);
  };
  auto copy = [&] {
    for (std::size_t j = 0; j < terms.size(); ++j)
      c.g2(GateKind::CX, dirty[j], out[j]);
  };
  layer();
  copy();
  layer();
  copy();
}

// Exact arg min over [1, N] of the garbage-variant T bound 4*ceil(N/l)+8bl,
// scanned over a window around sqrt(N/b) plus both endpoints.
inline int optimal_lambda(std::int64_t N, std::int64_t b) {
  if (N < 1 || b < 1) throw ParamError("optimal_lambda needs N, b >= 1");
  auto cost = [&](std::int64_t l) { return 4 * ((N + l - 1) / l) + 8 * b * l; };
  const double guess = std::sqrt(double(N) / double(b));
  std::int64_t lo = std::max<std::int64_t>(1, std::int64_t(guess / 2) - 2);
  std::int64_t hi = std::min<std::int64_t>(N, std::int64_t(guess * 2) + 2);
  std::int64_t best = 1;
  std::int64_t best_cost = cost(1);
  auto consider = [&](std::int64_t l) {
    std::int64_t v = cost(l);
    if (v < best_cost || (v == best_cost && l < best)) {
      best_cost = v;
      best = l;
    }
  };
  for (std::int64_t l = lo; l <= hi; ++l) consider(l);
  consider(N);
  return static_cast<int>(best);
}

}  // namespace tgf
