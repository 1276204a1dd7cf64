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

#include "tgf/circuit_text.hpp"

using namespace tgf;

TEST_CASE("canonical format parses") {
  const std::string text = R"(# lookup fragment
qubits 6
register idx 0 2 index
register out 2 1 output
register w 3 2 workspace-dirty
register f 5 1 fourier

H 3
X 0
CX 0 4
RZ 5/32 2
CCX 0 1 2
CSWAP 0 1 2   # trailing comment
MZ 4 -> c0
X? c0 4
Z? c0 1
CZ? c0 1 2
)";
  Circuit c = parse_circuit(text);
  CHECK(c.n_qubits == 6);
  CHECK(c.n_classical == 1);
  REQUIRE(c.registers.size() == 4);
  CHECK(c.registers[2].role == Role::workspace_dirty);
  REQUIRE(c.gates.size() == 10);
  CHECK(c.gates[3].kind == GateKind::RZ);
  CHECK(c.gates[3].angle == Turn(5, 32));
  CHECK(c.gates[6].kind == GateKind::MZ);
  CHECK(c.gates[6].cbit == 0);
  CHECK(c.gates[9].kind == GateKind::CcCZ);
  CHECK(c.gates[9].q[1] == 2);
}

TEST_CASE("emit then parse then emit is byte-identical") {
  Circuit c;
  c.add_register("idx", 3, Role::index);
  c.add_register("out", 2, Role::output);
  c.add_register("dirty", 2, Role::workspace_dirty);
  c.add_register("m", 1, Role::classical);
  c.policy.cswap = ToffoliStrategy::relphase_four_t;
  c.policy.and_pair = ToffoliStrategy::and_gadget_measured;
  c.rz_error_budget = 3.5e-8;
  c.g1(GateKind::H, 0);
  c.g1(GateKind::Gdg, 4);
  c.rz(Turn(7, 64), 2);
  c.g2(GateKind::CX, 0, 3);
  c.g3(GateKind::AND, 0, 1, 5);
  c.g3(GateKind::ANDdg, 0, 1, 5);
  c.g3(GateKind::CSWAP, 2, 3, 4);
  c.add(Gate::mz(6, 0));
  c.add(Gate::cc(GateKind::CcX, 0, 6));
  c.add(Gate::cc(GateKind::CcCZ, 0, 0, 1));

  std::string once = emit_circuit(c);
  Circuit back = parse_circuit(once);
  std::string twice = emit_circuit(back);
  CHECK(once == twice);
  CHECK(back.n_classical == c.n_classical);
  CHECK(back.policy.cswap == c.policy.cswap);
  CHECK(back.rz_error_budget == c.rz_error_budget);
  REQUIRE(back.gates.size() == c.gates.size());
}

TEST_CASE("parse rejects malformed inputs with ParseError") {
  CHECK_THROWS_AS(parse_circuit("H 0\n"), ParseError);  // no qubits line
  CHECK_THROWS_AS(parse_circuit("qubits 2\nFOO 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nCX 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nCX 0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nRZ 0.3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nRZ 1/0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nH 5\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nMZ 0 c0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nX? m0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nregister a 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nregister a 0 2 junkrole\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\npolicy ccx junk\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nCX 1 1\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  Circuit c = parse_circuit("\n# header\nqubits 1\n\n  # indented comment\nH 0 # x\n\n");
  CHECK(c.n_qubits == 1);
  REQUIRE(c.gates.size() == 1);
}

TEST_CASE("classical width comes from cbits, registers, or references") {
  Circuit a = parse_circuit("qubits 1\ncbits 3\nH 0\n");
  CHECK(a.n_classical == 3);
  Circuit b = parse_circuit("qubits 1\nMZ 0 -> c4\n");
  CHECK(b.n_classical == 5);
  Circuit c = parse_circuit("qubits 1\nregister m 0 2 classical\nMZ 0 -> c0\n");
  CHECK(c.n_classical == 2);
}
