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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "tgf/lookup.hpp"
#include "tgf/resources.hpp"
#include "tgf/simulate.hpp"

using namespace tgf;
using oracle::circuit_unitary;
using oracle::identity;
using oracle::max_abs_diff;

namespace {

std::uint64_t read_bits(std::uint64_t bits, const std::vector<int>& reg) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) v |= ((bits >> reg[i]) & 1) << i;
  return v;
}

std::uint64_t write_bits(std::uint64_t bits, const std::vector<int>& reg,
                         std::uint64_t v) {
  for (std::size_t i = 0; i < reg.size(); ++i) {
    bits &= ~(std::uint64_t(1) << reg[i]);
    bits |= ((v >> i) & 1) << reg[i];
  }
  return bits;
}

DataTable random_table(int N, int b, std::uint64_t seed, bool no_zero = false) {
  DataTable t;
  t.b = b;
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (b >= 64) ? ~0ull : ((1ull << b) - 1);
  for (int i = 0; i < N; ++i) {
    std::uint64_t e = rng() & mask;
    if (no_zero && e == 0) e = 1;
    t.entries.push_back(e);
  }
  return t;
}

std::vector<int> maybe_reg(const Circuit& c, const std::string& name) {
  for (const auto& r : c.registers)
    if (r.name == name) return c.reg_qubits(name);
  return {};
}

// All qubits outside the given registers.
std::vector<int> others(const Circuit& c, const std::vector<std::vector<int>>& keep) {
  std::vector<bool> kept(c.n_qubits, false);
  for (const auto& ks : keep)
    for (int q : ks) kept[q] = true;
  std::vector<int> out;
  for (int q = 0; q < c.n_qubits; ++q)
    if (!kept[q]) out.push_back(q);
  return out;
}

}  // namespace

TEST_CASE("select computes a_x for every index, exhaustively") {
  for (int N : {1, 2, 3, 4, 5, 8, 16, 32}) {
    for (int b : {1, 2, 3}) {
      DataTable t = random_table(N, b, 1000 + 64 * N + b);
      Circuit c = build_select(t);
      auto idx = maybe_reg(c, "index");
      auto out = c.reg_qubits("out");
      auto rest = others(c, {idx, out});
      const std::uint64_t domain = std::uint64_t(1) << idx.size();
      for (std::uint64_t x = 0; x < domain; ++x) {
        auto st = simulate_classical(c, write_bits(0, idx, x));
        CHECK(read_bits(st.bits, idx) == x);
        CHECK(read_bits(st.bits, out) == t.at(x));
        CHECK(read_bits(st.bits, rest) == 0);
        CHECK(st.phase.is_zero());
      }
      // XOR semantics on a preloaded output register.
      auto st = simulate_classical(c, write_bits(write_bits(0, idx, 0), out, t.at(1) & 1));
      CHECK(read_bits(st.bits, out) == (t.at(0) ^ (t.at(1) & 1)));
    }
  }
}

TEST_CASE("select on the identity table maps |x>|0> to |x>|x>") {
  DataTable t;
  t.b = 2;
  t.entries = {0, 1, 2, 3};
  Circuit c = build_select(t);
  auto idx = c.reg_qubits("index");
  auto out = c.reg_qubits("out");
  for (std::uint64_t x = 0; x < 4; ++x) {
    SimOptions opt;
    std::vector<cplx> init(std::size_t(1) << c.n_qubits, cplx{});
    init[write_bits(0, idx, x)] = 1.0;
    auto branches = simulate(c, init, opt);
    REQUIRE(branches.size() == 1);
    std::uint64_t want = write_bits(write_bits(0, idx, x), out, x);
    CHECK(std::abs(branches[0].amps[want] - cplx{1.0}) < 1e-12);
  }
}

TEST_CASE("select resource shape") {
  SECTION("single entry is X gates only") {
    DataTable t;
    t.b = 3;
    t.entries = {5};
    Circuit c = build_select(t);
    CHECK(c.gates.size() == 2);  // bits 0 and 2
    for (const auto& g : c.gates) CHECK(g.kind == GateKind::X);
    CHECK(resource_report(c).t_count == 0);
  }
  SECTION("all-zero table builds an empty circuit") {
    DataTable t;
    t.b = 3;
    t.entries.assign(8, 0);
    CHECK(build_select(t).gates.empty());
  }
  SECTION("power-of-two tables meet the 4(N-2) AND budget") {
    for (int N : {4, 8, 16, 32, 64}) {
      DataTable t = random_table(N, 1, 7 * N, true);
      Circuit c = build_select(t);
      auto r = resource_report(c);
      CHECK(r.t_count == 4 * (N - 2));
      CHECK(r.t_count <= 4 * N);
      // index + helpers + output within the b + 2 ceil(log2 N) budget
      CHECK(c.n_qubits <= t.b + 2 * ceil_log2(std::uint64_t(N)));
    }
  }
  SECTION("ragged tables stay within 4(L - 2 + levels)") {
    for (int N : {3, 5, 6, 7, 11, 21}) {
      DataTable t = random_table(N, 2, 11 * N, true);
      Circuit c = build_select(t);
      const int lev = ceil_log2(std::uint64_t(N));
      const std::int64_t L = std::int64_t(1) << lev;
      CHECK(resource_report(c).t_count <= 4 * (L - 2 + lev));
    }
  }
}

TEST_CASE("divmod wrapper splits the index in place") {
  for (int n : {3, 4}) {
    for (std::uint64_t lam : {1ull, 3ull, 4ull, 6ull}) {
      DivmodLayout lay;
      Circuit c = build_divmod(n, lam, &lay);
      CHECK(int(lay.quotient.size()) == divmod_quotient_length(n, lam));
      if (lam == 1 || is_power_of_two(lam)) CHECK(c.gates.empty());
      auto x = c.reg_qubits("x");
      for (std::uint64_t v = 0; v < (1ull << n); ++v) {
        auto st = simulate_classical(c, write_bits(0, x, v));
        CHECK(read_bits(st.bits, lay.quotient) == v / lam);
        CHECK(read_bits(st.bits, lay.remainder) == v % lam);
        CHECK(st.phase.is_zero());
        std::uint64_t rest = st.bits;
        rest = write_bits(rest, lay.quotient, 0);
        rest = write_bits(rest, lay.remainder, 0);
        CHECK(rest == 0);
      }
    }
  }
}

TEST_CASE("selectswap routes a_x into block zero for every x and lambda") {
  for (int N : {4, 8, 16, 32}) {
    std::set<int> lams = {1, 2, 4, N};
    if (N == 16) lams.insert({3, 5, 6});
    for (int b : {1, 2, 3}) {
      for (int lam : lams) {
        DataTable t = random_table(N, b, 5000 + 64 * N + 8 * b + lam);
        Circuit c = build_selectswap(t, make_lookup_plan(N, lam));
        if (c.n_qubits > 62) continue;  // classical tracker keeps bits in a word
        auto idx = c.reg_qubits("index");
        auto d0 = c.reg_qubits("d0");
        for (std::uint64_t x = 0; x < std::uint64_t(N); ++x) {
          auto st = simulate_classical(c, write_bits(0, idx, x));
          CHECK(read_bits(st.bits, idx) == x);
          CHECK(read_bits(st.bits, d0) == t.at(x));
          CHECK(st.phase.is_zero());
        }
      }
    }
  }
}

TEST_CASE("selectswap followed by its inverse is the identity") {
  SECTION("classically, with data blocks preloaded") {
    for (int lam : {3, 4}) {
      DataTable t = random_table(16, 2, 600 + lam);
      Circuit c = build_selectswap(t, make_lookup_plan(16, lam));
      Circuit inv = c.inverse();
      for (const auto& g : inv.gates) c.gates.push_back(g);
      auto idx = c.reg_qubits("index");
      std::vector<std::vector<int>> dblocks;
      for (int j = 0; j < lam; ++j)
        dblocks.push_back(c.reg_qubits("d" + std::to_string(j)));
      std::mt19937_64 rng(77);
      for (int trial = 0; trial < 50; ++trial) {
        // index and data blocks arbitrary; AND helpers must start clean
        std::uint64_t in = write_bits(0, idx, rng() & 15);
        for (const auto& blk : dblocks) in = write_bits(in, blk, rng() & 3);
        auto st = simulate_classical(c, in);
        CHECK(st.bits == in);
        CHECK(st.phase.is_zero());
      }
    }
  }
  SECTION("densely on a small instance") {
    DataTable t = random_table(4, 1, 601);
    Circuit c = build_selectswap(t, make_lookup_plan(4, 2));
    Circuit inv = c.inverse();
    for (const auto& g : inv.gates) c.gates.push_back(g);
    REQUIRE(c.n_qubits <= 6);
    CHECK(max_abs_diff(circuit_unitary(c), identity(std::size_t(1) << c.n_qubits)) <
          1e-12);
  }
}

TEST_CASE("selectswap is exact on basis inputs under dense expansion") {
  DataTable t = random_table(4, 1, 640);
  Circuit c = build_selectswap(t, make_lookup_plan(4, 2));
  auto idx = c.reg_qubits("index");
  auto d0 = c.reg_qubits("d0");
  for (std::uint64_t x = 0; x < 4; ++x) {
    SimOptions opt;
    std::vector<cplx> init(std::size_t(1) << c.n_qubits, cplx{});
    init[write_bits(0, idx, x)] = 1.0;
    auto branches = simulate(c, init, opt);
    REQUIRE(branches.size() == 1);
    double found = 0;
    for (std::size_t s = 0; s < branches[0].amps.size(); ++s) {
      if (std::abs(branches[0].amps[s]) < 1e-12) continue;
      CHECK(read_bits(s, idx) == x);
      CHECK(read_bits(s, d0) == t.at(x));
      found += std::norm(branches[0].amps[s]);
    }
    CHECK(std::abs(found - 1.0) < 1e-12);
  }
}

TEST_CASE("selectswap T count obeys the 4 ceil(N/lambda) + 8 b lambda budget") {
  for (int N : {4, 8, 16, 32, 64}) {
    for (int b : {1, 2, 3}) {
      for (int lam : {1, 2, 4, 8, 16}) {
        if (lam > N) continue;
        DataTable t = random_table(N, b, 71 * N + 9 * b + lam, true);
        Circuit c = build_selectswap(t, make_lookup_plan(N, lam));
        const std::int64_t bound =
            4 * ((N + lam - 1) / lam) + 8 * std::int64_t(b) * lam;
        CHECK(resource_report(c).t_count <= bound);
        // qubit budget: b*lambda data qubits plus 2 ceil(log2 N) bookkeeping
        CHECK(c.n_qubits <= b * lam + 2 * ceil_log2(std::uint64_t(N)));
      }
    }
  }
  SECTION("ragged lambda pays at most the documented divmod slack") {
    for (int N : {8, 16, 32}) {
      for (int b : {1, 2}) {
        for (int lam : {3, 5, 6, 7}) {
          DataTable t = random_table(N, b, 73 * N + 9 * b + lam, true);
          Circuit c = build_selectswap(t, make_lookup_plan(N, lam));
          const std::int64_t n = ceil_log2(std::uint64_t(N));
          const std::int64_t k = ceil_log2(std::uint64_t(lam));
          const std::int64_t bound = 4 * ((N + lam - 1) / lam) +
                                     8 * std::int64_t(b) * lam + 16 * n * k;
          CHECK(resource_report(c).t_count <= bound);
        }
      }
    }
  }
}

TEST_CASE("dirty selectswap: output correct, dirty registers restored") {
  for (int N : {4, 8, 16}) {
    for (int b : {1, 2}) {
      for (int lam : {1, 2, 3, 4}) {
        if (lam > N) continue;
        DataTable t = random_table(N, b, 9000 + 64 * N + 8 * b + lam);
        Circuit c = build_selectswap_dirty(t, make_lookup_plan(N, lam, true));
        auto idx = c.reg_qubits("index");
        auto out = c.reg_qubits("out");
        std::vector<std::vector<int>> dblocks;
        for (int j = 0; j < lam; ++j) dblocks.push_back(c.reg_qubits("d" + std::to_string(j)));
        std::mt19937_64 rng(17 * N + lam);
        for (std::uint64_t x = 0; x < std::uint64_t(N); ++x) {
          for (int trial = 0; trial < 8; ++trial) {
            std::uint64_t in = write_bits(0, idx, x);
            std::vector<std::uint64_t> g(lam);
            for (int j = 0; j < lam; ++j) {
              g[j] = rng() & ((1ull << b) - 1);
              in = write_bits(in, dblocks[j], g[j]);
            }
            auto st = simulate_classical(c, in);
            CHECK(read_bits(st.bits, idx) == x);
            CHECK(read_bits(st.bits, out) == t.at(x));
            for (int j = 0; j < lam; ++j) CHECK(read_bits(st.bits, dblocks[j]) == g[j]);
            CHECK(st.phase.is_zero());
            std::uint64_t rest = st.bits;
            rest = write_bits(rest, idx, 0);
            rest = write_bits(rest, out, 0);
            for (int j = 0; j < lam; ++j) rest = write_bits(rest, dblocks[j], 0);
            CHECK(rest == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("dirty selectswap restores superposed dirty states") {
  struct Case {
    int N, b, lam;
  };
  for (Case cs : {Case{8, 1, 2}, Case{16, 2, 2}, Case{4, 1, 4}}) {
    DataTable t = random_table(cs.N, cs.b, 660 + cs.N + cs.lam);
    Circuit c = build_selectswap_dirty(t, make_lookup_plan(cs.N, cs.lam, true));
    REQUIRE(c.n_qubits <= 14);
    CHECK(verify_dirty_restoration(c) < 1e-9);
  }
}

TEST_CASE("dirty selectswap with an all-zero table leaves everything in place") {
  DataTable t;
  t.b = 2;
  t.entries.assign(8, 0);
  Circuit c = build_selectswap_dirty(t, make_lookup_plan(8, 2, true));
  auto idx = c.reg_qubits("index");
  auto out = c.reg_qubits("out");
  auto d0 = c.reg_qubits("d0");
  auto d1 = c.reg_qubits("d1");
  for (std::uint64_t x = 0; x < 8; ++x) {
    std::uint64_t in = write_bits(write_bits(write_bits(0, idx, x), d0, 2), d1, 1);
    auto st = simulate_classical(c, in);
    CHECK(read_bits(st.bits, out) == 0);
    CHECK(st.bits == in);
  }
}

TEST_CASE("dirty selectswap T count obeys 8 ceil(N/lambda) + 32 b lambda") {
  for (int N : {4, 8, 16, 32}) {
    for (int b : {1, 2, 3}) {
      for (int lam : {1, 2, 4, 8}) {
        if (lam > N) continue;
        DataTable t = random_table(N, b, 91 * N + 9 * b + lam, true);
        Circuit c = build_selectswap_dirty(t, make_lookup_plan(N, lam, true));
        const std::int64_t bound =
            8 * ((N + lam - 1) / lam) + 32 * std::int64_t(b) * lam;
        CHECK(resource_report(c).t_count <= bound);
        const std::int64_t n = ceil_log2(std::uint64_t(N));
        CHECK(c.n_qubits - b * lam <= 2 * n + b);
      }
    }
  }
  SECTION("ragged lambda adds at most the divmod slack") {
    for (int lam : {3, 5, 6}) {
      DataTable t = random_table(16, 2, 95 + lam, true);
      Circuit c = build_selectswap_dirty(t, make_lookup_plan(16, lam, true));
      const std::int64_t bound = 8 * ((16 + lam - 1) / lam) + 32 * 2 * lam +
                                 16 * 4 * ceil_log2(std::uint64_t(lam));
      CHECK(resource_report(c).t_count <= bound);
    }
  }
}

TEST_CASE("dirty selectswap with phase-incorrect swaps: values exact, flag set") {
  DataTable t = random_table(8, 1, 701);
  Circuit c = build_selectswap_dirty(t, make_lookup_plan(8, 2, true),
                                     SwapStrategy::phase_incorrect);
  CHECK(c.up_to_diagonal_phase);
  auto idx = c.reg_qubits("index");
  auto out = c.reg_qubits("out");
  auto d0 = c.reg_qubits("d0");
  auto d1 = c.reg_qubits("d1");
  REQUIRE(c.n_qubits <= 8);
  // The swap blocks mix H and G inline, so check basis behavior densely: all
  // support must sit on the expected values, phases free.
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t g = 0; g < 4; ++g) {
      std::uint64_t in = write_bits(0, idx, x);
      in = write_bits(in, d0, g & 1);
      in = write_bits(in, d1, g >> 1);
      SimOptions opt;
      std::vector<cplx> init(std::size_t(1) << c.n_qubits, cplx{});
      init[in] = 1.0;
      auto branches = simulate(c, init, opt);
      double found = 0;
      for (const auto& br : branches)
        for (std::size_t s = 0; s < br.amps.size(); ++s) {
          if (std::abs(br.amps[s]) < 1e-9) continue;
          CHECK(read_bits(s, idx) == x);
          CHECK(read_bits(s, out) == t.at(x));
          CHECK(read_bits(s, d0) == (g & 1));
          CHECK(read_bits(s, d1) == (g >> 1));
          found += br.prob * std::norm(br.amps[s]);
        }
      CHECK(std::abs(found - 1.0) < 1e-9);
    }
  // Cheaper swaps than the exact default.
  Circuit exact = build_selectswap_dirty(t, make_lookup_plan(8, 2, true));
  CHECK(resource_report(c).t_count < resource_report(exact).t_count);
}

TEST_CASE("indicator sets exactly the x-th output bit") {
  for (int n = 1; n <= 5; ++n) {
    for (IndicatorMode mode : {IndicatorMode::exact, IndicatorMode::fast_phases}) {
      Circuit c = build_indicator(n, mode);
      if (c.n_qubits > 62) continue;
      CHECK(c.up_to_diagonal_phase == (mode == IndicatorMode::fast_phases));
      auto x = c.reg_qubits("x");
      auto y = c.reg_qubits("y");
      auto rest = others(c, {x, y});
      for (std::uint64_t v = 0; v < (1ull << n); ++v) {
        auto st = simulate_classical(c, write_bits(0, x, v));
        CHECK(read_bits(st.bits, x) == v);
        CHECK(read_bits(st.bits, y) == (1ull << v));
        CHECK(read_bits(st.bits, rest) == 0);
        CHECK(st.phase.is_zero());
      }
    }
  }
}

TEST_CASE("indicator XORs into a preloaded output register") {
  Circuit c = build_indicator(3);
  auto x = c.reg_qubits("x");
  auto y = c.reg_qubits("y");
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 16; ++trial) {
    std::uint64_t v = rng() & 7;
    std::uint64_t y0 = rng() & 255;
    auto st = simulate_classical(c, write_bits(write_bits(0, x, v), y, y0));
    CHECK(read_bits(st.bits, y) == (y0 ^ (1ull << v)));
  }
}

TEST_CASE("indicator matches the dense permutation on two inputs") {
  Circuit c = build_indicator(2);
  auto x = c.reg_qubits("x");
  auto y = c.reg_qubits("y");
  for (std::uint64_t v = 0; v < 4; ++v) {
    SimOptions opt;
    std::vector<cplx> init(std::size_t(1) << c.n_qubits, cplx{});
    init[write_bits(0, x, v)] = 1.0;
    auto branches = simulate(c, init, opt);
    REQUIRE(branches.size() == 1);
    std::uint64_t want = write_bits(write_bits(0, x, v), y, 1ull << v);
    CHECK(std::abs(branches[0].amps[want] - cplx{1.0}) < 1e-12);
  }
}

TEST_CASE("indicator resource scaling: T <= 12 N, shallow depth, sqrt workspace") {
  for (int n = 1; n <= 8; ++n) {
    for (IndicatorMode mode : {IndicatorMode::exact, IndicatorMode::fast_phases}) {
      Circuit c = build_indicator(n, mode);
      auto r = resource_report(c);
      const std::int64_t N = std::int64_t(1) << n;
      CHECK(r.t_count <= 12 * N);
      // Slot-counting depth metrics land near 20 n^2 on this construction;
      // 24 n^2 is the frozen envelope.
      CHECK(r.t_depth + r.clifford_depth <= 24 * n * n);
      // clean workspace is about 4 sqrt(N)
      CHECK(c.n_qubits - n - N <= 4 * (std::int64_t(1) << ((n + 1) / 2)));
    }
  }
}

TEST_CASE("lookup via indicator computes a_x for all split points") {
  for (int N : {8, 16}) {
    const int n = ceil_log2(std::uint64_t(N));
    for (int b : {1, 2}) {
      for (int k = 0; k <= n; ++k) {
        for (int lam : {1, 2, 4}) {
          if (lam > b << k) continue;
          DataTable t = random_table(N, b, 3000 + 64 * N + 8 * b + 4 * k + lam);
          Circuit c = build_lookup_via_indicator(t, k, lam);
          if (c.n_qubits > 62) continue;
          auto idx = c.reg_qubits("index");
          auto out = c.reg_qubits("out");
          auto rest = others(c, {idx, out});
          for (std::uint64_t x = 0; x < std::uint64_t(N); ++x) {
            auto st = simulate_classical(c, write_bits(0, idx, x));
            CHECK(read_bits(st.bits, idx) == x);
            CHECK(read_bits(st.bits, out) == t.at(x));
            CHECK(read_bits(st.bits, rest) == 0);
            CHECK(st.phase.is_zero());
          }
        }
      }
    }
  }
  SECTION("ragged N pads with zero entries") {
    DataTable t = random_table(5, 2, 3300);
    Circuit c = build_lookup_via_indicator(t, 2, 2);
    auto idx = c.reg_qubits("index");
    auto out = c.reg_qubits("out");
    for (std::uint64_t x = 0; x < 8; ++x) {
      auto st = simulate_classical(c, write_bits(0, idx, x));
      CHECK(read_bits(st.bits, out) == t.at(x));
    }
  }
}

TEST_CASE("lookup via indicator T count is within 26 (2^(n-k) + b 2^k)") {
  // Budget per piece: select + uncompute <= 8 * 2^(n-k); indicator built and
  // unbuilt <= 2 * 9 * 2^k; product ANDs <= 4 b 2^k. 26 covers the sum.
  for (int N : {16, 64}) {
    const int n = ceil_log2(std::uint64_t(N));
    for (int b : {1, 2}) {
      for (int k : {0, 2, n}) {
        DataTable t = random_table(N, b, 4200 + N + b + k, true);
        Circuit c = build_lookup_via_indicator(t, k, std::min(4, b << k));
        const std::int64_t bound =
            26 * ((std::int64_t(1) << (n - k)) + (std::int64_t(b) << k));
        CHECK(resource_report(c).t_count <= bound);
      }
    }
  }
}

TEST_CASE("parity layers run on dirty scratch via double application") {
  std::mt19937_64 rng(55);
  Circuit c;
  int x0 = c.add_register("x", 4, Role::index);
  int d0 = c.add_register("d", 3, Role::workspace_dirty);
  int o0 = c.add_register("out", 3, Role::output);
  std::vector<int> xs, ds, os;
  for (int i = 0; i < 4; ++i) xs.push_back(x0 + i);
  for (int i = 0; i < 3; ++i) ds.push_back(d0 + i);
  for (int i = 0; i < 3; ++i) os.push_back(o0 + i);
  std::vector<std::vector<int>> terms(3);
  std::vector<std::uint64_t> masks(3);
  for (int j = 0; j < 3; ++j) {
    masks[j] = 1 + (rng() & 14);  // nonempty subset of the 4 sources
    for (int i = 0; i < 4; ++i)
      if ((masks[j] >> i) & 1) terms[j].push_back(xs[i]);
  }
  append_parity_via_dirty(c, terms, ds, os);
  CHECK(resource_report(c).t_count == 0);
  for (std::uint64_t v = 0; v < 16; ++v)
    for (int trial = 0; trial < 4; ++trial) {
      std::uint64_t g = rng() & 7, y0 = rng() & 7;
      std::uint64_t in = write_bits(write_bits(write_bits(0, xs, v), ds, g), os, y0);
      auto st = simulate_classical(c, in);
      CHECK(read_bits(st.bits, ds) == g);
      std::uint64_t want = y0;
      for (int j = 0; j < 3; ++j)
        want ^= std::uint64_t(__builtin_parityll(v & masks[j])) << j;
      CHECK(read_bits(st.bits, os) == want);
    }
  CHECK(verify_dirty_restoration(c) < 1e-9);
}

TEST_CASE("optimal_lambda matches a brute-force scan") {
  auto brute = [](std::int64_t N, std::int64_t b) {
    std::int64_t best = 1, bc = -1;
    for (std::int64_t l = 1; l <= N; ++l) {
      std::int64_t v = 4 * ((N + l - 1) / l) + 8 * b * l;
      if (bc < 0 || v < bc) {
        bc = v;
        best = l;
      }
    }
    return best;
  };
  std::vector<std::int64_t> Ns;
  for (std::int64_t N = 1; N <= 40; ++N) Ns.push_back(N);
  for (std::int64_t N : {64ll, 100ll, 256ll, 1000ll, 1024ll}) Ns.push_back(N);
  for (std::int64_t N : Ns)
    for (std::int64_t b : {1, 2, 3, 8, 64})
      CHECK(optimal_lambda(N, b) == brute(N, b));
  CHECK(optimal_lambda(1, 5) == 1);
  CHECK(optimal_lambda(64, 64) == 1);
}

TEST_CASE("selectswap cost at the optimal lambda beats both endpoints") {
  // At small N a non-power-of-two lambda* (N=32 b=2, N=64 b=1) loses to
  // lambda=1 in realized T count because the divmod circuit costs about
  // 8 log(N) log(lambda) T; from N=128 on the ragged optimum wins as modeled.
  struct Pt {
    int N, b;
  };
  for (Pt p : {Pt{16, 1}, Pt{16, 2}, Pt{32, 1}, Pt{64, 2}, Pt{128, 1}, Pt{128, 2},
               Pt{256, 1}}) {
    DataTable t = random_table(p.N, p.b, 7100 + p.N + p.b, true);
    const int star = optimal_lambda(p.N, p.b);
    auto cost = [&](int lam) {
      return resource_report(build_selectswap(t, make_lookup_plan(p.N, lam))).t_count;
    };
    CHECK(cost(star) <= cost(1));
    CHECK(cost(star) <= cost(p.N));
  }
}

TEST_CASE("plan and table validation") {
  DataTable t;
  t.b = 0;
  t.entries = {1};
  CHECK_THROWS_AS(t.validate(), ParamError);
  t.b = 64;
  CHECK_THROWS_AS(t.validate(), ParamError);
  t.b = 2;
  t.entries = {4};
  CHECK_THROWS_AS(t.validate(), ParamError);
  t.entries.clear();
  CHECK_THROWS_AS(t.validate(), ParamError);

  CHECK_THROWS_AS(make_lookup_plan(8, 0), ParamError);
  CHECK_THROWS_AS(make_lookup_plan(8, 9), ParamError);
  CHECK(make_lookup_plan(8, 4).quotient_width == 1);
  CHECK(make_lookup_plan(8, 4).remainder_width == 2);
  CHECK(make_lookup_plan(12, 5).quotient_width == 2);
  CHECK(make_lookup_plan(12, 5).remainder_width == 3);
  CHECK(make_lookup_plan(8, 1).remainder_width == 0);

  DataTable ok = random_table(8, 2, 1);
  CHECK_THROWS_AS(build_selectswap(ok, make_lookup_plan(8, 2, true)), ParamError);
  CHECK_THROWS_AS(build_selectswap_dirty(ok, make_lookup_plan(8, 2, false)), ParamError);
  CHECK_THROWS_AS(build_lookup_via_indicator(ok, 5, 1), ParamError);
  CHECK_THROWS_AS(build_lookup_via_indicator(ok, 1, 0), ParamError);
  CHECK_THROWS_AS(build_indicator(0), ParamError);
}
