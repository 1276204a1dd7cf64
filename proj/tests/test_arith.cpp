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

#include <catch2/catch_amalgamated.hpp>

#include "tgf/arith.hpp"
#include "tgf/resources.hpp"
#include "tgf/simulate.hpp"

using namespace tgf;

namespace {

std::vector<int> iota_vec(int start, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = start + i;
  return v;
}

std::uint64_t read_bits(std::uint64_t bits, const std::vector<int>& reg) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) v |= ((bits >> reg[i]) & 1) << i;
  return v;
}

std::uint64_t write_bits(std::uint64_t bits, const std::vector<int>& reg,
                         std::uint64_t value) {
  for (std::size_t i = 0; i < reg.size(); ++i) {
    bits &= ~(std::uint64_t(1) << reg[i]);
    bits |= ((value >> i) & 1) << reg[i];
  }
  return bits;
}

}  // namespace

TEST_CASE("quantum-quantum add is exact and restores its scratch") {
  for (int w = 1; w <= 4; ++w) {
    Circuit c;
    auto A = iota_vec(c.add_register("a", w, Role::index), w);
    auto B = iota_vec(c.add_register("b", w, Role::output), w);
    std::vector<int> scr;
    if (w > 1) scr = iota_vec(c.add_register("s", w - 1, Role::workspace_clean), w - 1);
    detail::append_add_quantum(c, A, B, scr);
    c.validate();
    for (std::uint64_t a = 0; a < (1u << w); ++a)
      for (std::uint64_t b = 0; b < (1u << w); ++b) {
        std::uint64_t in = write_bits(write_bits(0, A, a), B, b);
        auto st = simulate_classical(c, in);
        CHECK(read_bits(st.bits, A) == a);
        CHECK(read_bits(st.bits, B) == ((a + b) & ((1u << w) - 1)));
        CHECK(read_bits(st.bits, scr) == 0);
        CHECK(st.phase.is_zero());
      }
  }
}

TEST_CASE("quantum-quantum add with carry out") {
  for (int w = 1; w <= 4; ++w) {
    Circuit c;
    auto A = iota_vec(c.add_register("a", w, Role::index), w);
    auto B = iota_vec(c.add_register("b", w, Role::output), w);
    int carry = c.add_register("cy", 1, Role::output);
    std::vector<int> scr;
    if (w > 1) scr = iota_vec(c.add_register("s", w - 1, Role::workspace_clean), w - 1);
    detail::append_add_quantum_carry(c, A, B, carry, scr);
    c.validate();
    for (std::uint64_t a = 0; a < (1u << w); ++a)
      for (std::uint64_t b = 0; b < (1u << w); ++b) {
        std::uint64_t in = write_bits(write_bits(0, A, a), B, b);
        auto st = simulate_classical(c, in);
        CHECK(read_bits(st.bits, A) == a);
        CHECK(read_bits(st.bits, B) == ((a + b) & ((1u << w) - 1)));
        CHECK(((st.bits >> carry) & 1) == ((a + b) >> w));
        CHECK(read_bits(st.bits, scr) == 0);
      }
  }
}

TEST_CASE("expanded adder acts exactly on superpositions") {
  // the AND gadget's measurement branches must merge back to one exact state
  const int w = 3;
  Circuit c;
  auto A = iota_vec(c.add_register("a", w, Role::index), w);
  auto B = iota_vec(c.add_register("b", w, Role::output), w);
  auto scr = iota_vec(c.add_register("s", w - 1, Role::workspace_clean), w - 1);
  detail::append_add_quantum(c, A, B, scr);

  for (int strat = 0; strat < 2; ++strat) {
    SimOptions opt;
    opt.model.toffoli_strategy = strat == 0 ? ToffoliStrategy::and_gadget_measured
                                            : ToffoliStrategy::seven_t;
    // input: uniform superposition over a, b = 3
    std::vector<cplx> init(1 << c.n_qubits, cplx{});
    for (std::uint64_t a = 0; a < 8; ++a)
      init[write_bits(write_bits(0, A, a), B, 3)] = std::sqrt(1.0 / 8);
    auto branches = simulate(c, init, opt);
    REQUIRE(branches.size() == 1);
    for (std::uint64_t a = 0; a < 8; ++a) {
      std::uint64_t s = write_bits(write_bits(0, A, a), B, (a + 3) & 7);
      CHECK(std::abs(branches[0].amps[s] - std::sqrt(1.0 / 8)) < 1e-9);
    }
  }
}

TEST_CASE("constant add, plain and controlled, with and without carry") {
  for (int w = 1; w <= 3; ++w) {
    for (std::uint64_t K = 0; K < (1u << w); ++K) {
      Circuit c;
      auto B = iota_vec(c.add_register("b", w, Role::output), w);
      int ctrl = c.add_register("z", 1, Role::control);
      int carry = c.add_register("cy", 1, Role::output);
      auto load = iota_vec(c.add_register("ld", w, Role::workspace_clean), w);
      std::vector<int> scr;
      if (w > 1) scr = iota_vec(c.add_register("s", w - 1, Role::workspace_clean), w - 1);

      SECTION("w=" + std::to_string(w) + " K=" + std::to_string(K)) {
        Circuit plain = c;
        detail::append_add_const(plain, K, B, load, scr);
        Circuit withcarry = c;
        detail::append_add_const(withcarry, K, B, load, scr, std::nullopt, carry);
        Circuit ctrled = c;
        detail::append_add_const(ctrled, K, B, load, scr, ctrl, std::nullopt);
        for (std::uint64_t b = 0; b < (1u << w); ++b)
          for (std::uint64_t z = 0; z < 2; ++z) {
            std::uint64_t in = write_bits(0, B, b) | (z << ctrl);
            auto s1 = simulate_classical(plain, in);
            CHECK(read_bits(s1.bits, B) == ((b + K) & ((1u << w) - 1)));
            CHECK(read_bits(s1.bits, load) == 0);
            auto s2 = simulate_classical(withcarry, in);
            CHECK(read_bits(s2.bits, B) == ((b + K) & ((1u << w) - 1)));
            CHECK(((s2.bits >> carry) & 1) == ((b + K) >> w));
            auto s3 = simulate_classical(ctrled, in);
            std::uint64_t want = z ? ((b + K) & ((1u << w) - 1)) : b;
            CHECK(read_bits(s3.bits, B) == want);
            CHECK(((s3.bits >> ctrl) & 1) == z);
          }
      }
    }
  }
}

TEST_CASE("less-or-equal comparator flag") {
  for (int w = 1; w <= 3; ++w) {
    Circuit c;
    auto X = iota_vec(c.add_register("x", w, Role::index), w);
    auto Y = iota_vec(c.add_register("y", w, Role::index), w);
    int flag = c.add_register("f", 1, Role::output);
    auto scr = iota_vec(c.add_register("s", w, Role::workspace_clean), w);
    detail::append_leq_flag(c, X, Y, flag, scr);
    c.validate();
    for (std::uint64_t x = 0; x < (1u << w); ++x)
      for (std::uint64_t y = 0; y < (1u << w); ++y)
        for (std::uint64_t f0 = 0; f0 < 2; ++f0) {
          std::uint64_t in = write_bits(write_bits(0, X, x), Y, y) | (f0 << flag);
          auto st = simulate_classical(c, in);
          CHECK(read_bits(st.bits, X) == x);
          CHECK(read_bits(st.bits, Y) == y);
          CHECK(((st.bits >> flag) & 1) == (f0 ^ (y <= x ? 1u : 0u)));
          CHECK(read_bits(st.bits, scr) == 0);
        }
  }
}

TEST_CASE("ripple-carry adder circuit") {
  for (int b = 1; b <= 4; ++b) {
    Circuit c = build_adder(b);
    auto X = c.reg_qubits("x");
    auto Y = c.reg_qubits("y");
    for (std::uint64_t x = 0; x < (1u << b); ++x)
      for (std::uint64_t y = 0; y < (1u << b); ++y) {
        std::uint64_t in = write_bits(write_bits(0, X, x), Y, y);
        auto st = simulate_classical(c, in);
        CHECK(read_bits(st.bits, X) == x);
        CHECK(read_bits(st.bits, Y) == ((x + y) & ((1u << b) - 1)));
        CHECK(st.phase.is_zero());
      }
    CHECK(resource_report(c).t_count == 14 * b);
  }
}

TEST_CASE("expanded ripple-carry adder is phase-exact") {
  const int b = 2;
  Circuit c = build_adder(b);
  auto X = c.reg_qubits("x");
  auto Y = c.reg_qubits("y");
  SimOptions opt;
  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t y = 0; y < 4; ++y) {
      std::uint64_t in = write_bits(write_bits(0, X, x), Y, y);
      auto amps = simulate_basis_input(c, in, opt);
      std::uint64_t out = write_bits(write_bits(0, X, x), Y, (x + y) & 3);
      CHECK(std::abs(amps[out] - 1.0) < 1e-12);
    }
}

TEST_CASE("controlled ripple-carry adder") {
  for (int b = 1; b <= 3; ++b) {
    Circuit c = build_adder(b, true);
    auto X = c.reg_qubits("x");
    auto Y = c.reg_qubits("y");
    int ctrl = c.reg_qubits("ctrl")[0];
    for (std::uint64_t z = 0; z < 2; ++z)
      for (std::uint64_t x = 0; x < (1u << b); ++x)
        for (std::uint64_t y = 0; y < (1u << b); ++y) {
          std::uint64_t in = write_bits(write_bits(0, X, x), Y, y) | (z << ctrl);
          auto st = simulate_classical(c, in);
          CHECK(read_bits(st.bits, X) == x);
          std::uint64_t want = z ? ((x + y) & ((1u << b) - 1)) : y;
          CHECK(read_bits(st.bits, Y) == want);
          CHECK(read_bits(st.bits, c.reg_qubits("mask")) == 0);
        }
  }
}

TEST_CASE("divmod by arbitrary constants") {
  for (int n = 3; n <= 6; ++n) {
    for (std::uint64_t lam : {1ull, 2ull, 3ull, 4ull, 5ull, 6ull, 7ull, 8ull, 11ull}) {
      if (lam > (1ull << n)) continue;
      int k = 0;
      while ((1ull << k) < lam) ++k;
      Circuit c;
      auto X = iota_vec(c.add_register("x", n, Role::index), n);
      auto ext = iota_vec(c.add_register("ext", k + 1, Role::workspace_clean), k + 1);
      auto work =
          iota_vec(c.add_register("wk", 2 * k + 2, Role::workspace_clean), 2 * k + 2);
      auto lay = append_divmod(c, X, lam, ext, work);
      c.validate();
      for (std::uint64_t x = 0; x < (1ull << n); ++x) {
        auto st = simulate_classical(c, write_bits(0, X, x));
        CHECK(read_bits(st.bits, lay.quotient) == x / lam);
        CHECK(read_bits(st.bits, lay.remainder) == x % lam);
        // all qubits outside the quotient/remainder lists end clean
        std::uint64_t used = 0;
        for (int q : lay.quotient) used |= std::uint64_t(1) << q;
        for (int q : lay.remainder) used |= std::uint64_t(1) << q;
        CHECK((st.bits & ~used) == 0);
        CHECK(st.phase.is_zero());
      }
      // T budget: at most 8nk per application
      auto r = resource_report(c);
      CHECK(r.t_count <= 8 * std::int64_t(n) * std::max(k, 1));

      // divmod followed by its inverse is the identity
      Circuit round = c;
      append_inverse_of_tail(round, 0);
      for (std::uint64_t x = 0; x < (1ull << n); ++x) {
        auto st = simulate_classical(round, write_bits(0, X, x));
        CHECK(st.bits == write_bits(0, X, x));
      }
    }
  }
}

TEST_CASE("divmod validates its workspace") {
  Circuit c;
  auto X = iota_vec(c.add_register("x", 4, Role::index), 4);
  CHECK_THROWS_AS(append_divmod(c, X, 0, {}, {}), ParamError);
  CHECK_THROWS_AS(append_divmod(c, X, 3, {}, {}), ParamError);
}
