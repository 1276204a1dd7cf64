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
#include <random>

#include "support/oracles.hpp"
#include "tgf/resources.hpp"

using namespace tgf;

TEST_CASE("depths agree with the dependency-DAG oracle on random circuits") {
  std::mt19937 rng(42);
  for (int it = 0; it < 40; ++it) {
    Circuit c;
    c.add_register("q", 5, Role::output);
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<int> qd(0, 4);
    for (int g = 0; g < 30; ++g) {
      int a = qd(rng), b = qd(rng);
      if (b == a) b = (a + 1) % 5;
      switch (pick(rng)) {
        case 0: c.g1(GateKind::H, a); break;
        case 1: c.g1(GateKind::T, a); break;
        case 2: c.g1(GateKind::Tdg, a); break;
        case 3: c.g1(GateKind::S, a); break;
        case 4: c.g2(GateKind::CX, a, b); break;
        case 5: c.g2(GateKind::CZ, a, b); break;
        case 6: c.g1(GateKind::G, a); break;
        case 7: c.rz(Turn(3, 16), a); break;
        case 8: c.g1(GateKind::X, a); break;
        case 9: c.g1(GateKind::Z, a); break;
      }
    }
    auto r = resource_report(c);
    auto d = oracle::dag_depths(c);
    CHECK(r.t_depth == d.t_depth);
    CHECK(r.clifford_depth == d.clifford_depth);
  }
}

TEST_CASE("CX ladder has linear depth, parallel gates share a slot") {
  Circuit ladder;
  ladder.add_register("q", 6, Role::output);
  for (int i = 0; i < 5; ++i) ladder.g2(GateKind::CX, 0, i + 1);
  CHECK(resource_report(ladder).clifford_depth == 5);

  Circuit par;
  par.add_register("q", 6, Role::output);
  for (int i = 0; i < 3; ++i) par.g2(GateKind::CX, 2 * i, 2 * i + 1);
  CHECK(resource_report(par).clifford_depth == 1);
}

TEST_CASE("t_depth counts slots with T-family gates; G counts as one T") {
  Circuit c;
  c.add_register("q", 4, Role::output);
  c.g1(GateKind::T, 0);
  c.g1(GateKind::Tdg, 1);
  c.g1(GateKind::G, 2);
  c.g1(GateKind::Gdg, 3);
  auto r = resource_report(c);
  CHECK(r.t_count == 4);
  CHECK(r.t_depth == 1);

  Circuit serial;
  serial.add_register("q", 1, Role::output);
  for (int i = 0; i < 5; ++i) serial.g1(GateKind::T, 0);
  r = resource_report(serial);
  CHECK(r.t_count == 5);
  CHECK(r.t_depth == 5);
}

TEST_CASE("single-qubit Cliffords and measurements are depth-free") {
  Circuit c;
  c.add_register("q", 2, Role::output);
  c.n_classical = 1;
  for (int i = 0; i < 10; ++i) c.g1(GateKind::H, 0);
  c.g2(GateKind::CX, 0, 1);
  for (int i = 0; i < 10; ++i) c.g1(GateKind::S, 1);
  c.add(Gate::mz(1, 0));
  auto r = resource_report(c);
  CHECK(r.clifford_depth == 1);
  CHECK(r.measurement_count == 1);
}

TEST_CASE("RZ occupies a slot but counts toward neither depth") {
  Circuit c;
  c.add_register("q", 2, Role::output);
  c.g2(GateKind::CX, 0, 1);
  c.rz(Turn(1, 16), 0);  // slot 1, RZ-only
  c.g2(GateKind::CX, 0, 1);  // slot 2
  auto r = resource_report(c);
  CHECK(r.rz_count == 1);
  CHECK(r.clifford_depth == 2);
  CHECK(r.t_depth == 0);
}

TEST_CASE("rz_t_budget splits the circuit budget across rotations") {
  Circuit c;
  c.add_register("q", 1, Role::output);
  c.rz_error_budget = 1e-6;
  for (int i = 0; i < 4; ++i) c.rz(Turn(1 + i, 32), 0);
  auto r = resource_report(c);
  CHECK(r.rz_count == 4);
  CHECK(r.rz_t_budget == 4 * rz_t_cost(1e-6 / 4));

  Circuit none;
  none.add_register("q", 1, Role::output);
  none.g1(GateKind::H, 0);
  CHECK(resource_report(none).rz_t_budget == 0);
}

TEST_CASE("rz_t_cost is ceil(3 log2(1/delta))") {
  CHECK(rz_t_cost(0.5) == 3);
  CHECK(rz_t_cost(1.0 / 1024) == 30);
  CHECK(rz_t_cost(1e-9) == std::int64_t(std::ceil(3 * std::log2(1e9))));
  CHECK_THROWS_AS(rz_t_cost(0.0), ParamError);
  CHECK_THROWS_AS(rz_t_cost(2.0), ParamError);
}

TEST_CASE("qubit accounting separates clean and dirty workspace") {
  Circuit c;
  c.add_register("idx", 3, Role::index);
  c.add_register("out", 2, Role::output);
  c.add_register("w", 4, Role::workspace_dirty);
  c.add_register("s", 2, Role::workspace_clean);
  auto r = resource_report(c);
  CHECK(r.qubits_total == 11);
  CHECK(r.qubits_dirty == 4);
  CHECK(r.qubits_clean == 7);
}

TEST_CASE("classically controlled CZ takes a slot and waits for its measurement") {
  Circuit c;
  c.add_register("q", 3, Role::output);
  c.n_classical = 1;
  c.add(Gate::mz(0, 0));
  c.add(Gate::cc(GateKind::CcCZ, 0, 1, 2));
  auto r = resource_report(c);
  CHECK(r.clifford_depth == 1);
  auto d = oracle::dag_depths(c);
  CHECK(r.clifford_depth == d.clifford_depth);
}
