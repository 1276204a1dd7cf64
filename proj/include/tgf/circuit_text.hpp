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

#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace tgf {

namespace detail {

inline const std::map<std::string, GateKind>& gate_names() {
  static const std::map<std::string, GateKind> m = {
      {"X", GateKind::X},     {"Y", GateKind::Y},         {"Z", GateKind::Z},
      {"H", GateKind::H},     {"S", GateKind::S},         {"Sdg", GateKind::Sdg},
      {"T", GateKind::T},     {"Tdg", GateKind::Tdg},     {"G", GateKind::G},
      {"Gdg", GateKind::Gdg}, {"RZ", GateKind::RZ},       {"CX", GateKind::CX},
      {"CZ", GateKind::CZ},   {"CCX", GateKind::CCX},     {"CSWAP", GateKind::CSWAP},
      {"AND", GateKind::AND}, {"ANDdg", GateKind::ANDdg}, {"MZ", GateKind::MZ},
      {"X?", GateKind::CcX},  {"Z?", GateKind::CcZ},      {"CZ?", GateKind::CcCZ},
  };
  return m;
}

inline const char* gate_name(GateKind k) {
  for (const auto& [name, kind] : gate_names())
    if (kind == k) return name.c_str();
  return "?";
}

inline Role parse_role(const std::string& s) {
  if (s == "index") return Role::index;
  if (s == "output") return Role::output;
  if (s == "workspace-clean") return Role::workspace_clean;
  if (s == "workspace-dirty") return Role::workspace_dirty;
  if (s == "control") return Role::control;
  if (s == "fourier") return Role::fourier;
  if (s == "classical") return Role::classical;
  throw ParseError("unknown register role: " + s);
}

inline ToffoliStrategy parse_strategy(const std::string& s) {
  if (s == "seven_t") return ToffoliStrategy::seven_t;
  if (s == "relphase_four_t") return ToffoliStrategy::relphase_four_t;
  if (s == "and_gadget_measured") return ToffoliStrategy::and_gadget_measured;
  throw ParseError("unknown strategy: " + s);
}

inline int parse_int(const std::string& tok, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + what + ": " + tok);
  return v;
}

inline int parse_cbit(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'c') throw ParseError("bad classical bit: " + tok);
  return parse_int(tok.substr(1), "classical bit");
}

inline Turn parse_turn(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) throw ParseError("bad angle (want num/den): " + tok);
  long long n = 0, d = 0;
  try {
    n = std::stoll(tok.substr(0, slash));
    d = std::stoll(tok.substr(slash + 1));
  } catch (const std::exception&) {
    throw ParseError("bad angle: " + tok);
  }
  if (d <= 0) throw ParseError("bad angle denominator: " + tok);
  return Turn(n, d);
}

}  // namespace detail

inline Circuit parse_circuit(std::istream& in) {
  Circuit c;
  bool have_qubits = false;
  int max_cbit = -1;
  int declared_cbits = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    if (tok[0] == "qubits") {
      if (tok.size() != 2) fail("qubits takes one argument");
      c.n_qubits = detail::parse_int(tok[1], "qubit count");
      have_qubits = true;
      continue;
    }
    if (tok[0] == "cbits") {
      if (tok.size() != 2) fail("cbits takes one argument");
      declared_cbits = detail::parse_int(tok[1], "cbit count");
      continue;
    }
    if (tok[0] == "register") {
      if (tok.size() != 5) fail("register takes name start width role");
      Register r;
      r.name = tok[1];
      r.start = detail::parse_int(tok[2], "register start");
      r.width = detail::parse_int(tok[3], "register width");
      r.role = detail::parse_role(tok[4]);
      c.registers.push_back(r);
      if (r.role == Role::classical)
        declared_cbits = std::max(declared_cbits, r.start + r.width);
      continue;
    }
    if (tok[0] == "policy") {
      if (tok.size() != 3) fail("policy takes macro strategy");
      ToffoliStrategy s = detail::parse_strategy(tok[2]);
      if (tok[1] == "ccx") c.policy.ccx = s;
      else if (tok[1] == "cswap") c.policy.cswap = s;
      else if (tok[1] == "and") c.policy.and_pair = s;
      else fail("unknown policy target: " + tok[1]);
      continue;
    }
    if (tok[0] == "rzbudget") {
      if (tok.size() != 2) fail("rzbudget takes one argument");
      try {
        c.rz_error_budget = std::stod(tok[1]);
      } catch (const std::exception&) {
        fail("bad rzbudget value");
      }
      continue;
    }
    if (tok[0] == "phase") {
      if (tok.size() != 2 || tok[1] != "diagonal") fail("phase takes 'diagonal'");
      c.up_to_diagonal_phase = true;
      continue;
    }

    auto it = detail::gate_names().find(tok[0]);
    if (it == detail::gate_names().end()) fail("unknown gate: " + tok[0]);
    GateKind k = it->second;
    Gate g{k, {-1, -1, -1}};
    size_t qpos = 1;
    if (k == GateKind::RZ) {
      if (tok.size() != 3) fail("RZ takes angle qubit");
      g.angle = detail::parse_turn(tok[1]);
      qpos = 2;
    } else if (k == GateKind::MZ) {
      if (tok.size() != 4 || tok[2] != "->") fail("MZ takes qubit -> cbit");
      g.q[0] = detail::parse_int(tok[1], "qubit");
      g.cbit = detail::parse_cbit(tok[3]);
      max_cbit = std::max(max_cbit, g.cbit);
      c.gates.push_back(g);
      continue;
    } else if (is_classically_controlled(k)) {
      if (tok.size() != size_t(2 + gate_arity(k))) fail("bad argument count");
      g.cbit = detail::parse_cbit(tok[1]);
      max_cbit = std::max(max_cbit, g.cbit);
      qpos = 2;
    }
    int ar = gate_arity(k);
    if (tok.size() != qpos + ar) fail("bad argument count for " + tok[0]);
    for (int i = 0; i < ar; ++i)
      g.q[i] = detail::parse_int(tok[qpos + i], "qubit");
    c.gates.push_back(g);
  }
  if (!have_qubits) throw ParseError("missing qubits line");
  c.n_classical = std::max(declared_cbits, max_cbit + 1);
  if (c.n_classical < 0) c.n_classical = 0;
  try {
    c.validate();
  } catch (const ParamError& e) {
    throw ParseError(e.what());
  }
  return c;
}

inline Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

inline void emit_circuit(const Circuit& c, std::ostream& out) {
  out << "qubits " << c.n_qubits << "\n";
  if (c.n_classical > 0) out << "cbits " << c.n_classical << "\n";
  for (const auto& r : c.registers)
    out << "register " << r.name << " " << r.start << " " << r.width << " "
        << role_name(r.role) << "\n";
  if (c.policy.ccx) out << "policy ccx " << strategy_name(*c.policy.ccx) << "\n";
  if (c.policy.cswap) out << "policy cswap " << strategy_name(*c.policy.cswap) << "\n";
  if (c.policy.and_pair)
    out << "policy and " << strategy_name(*c.policy.and_pair) << "\n";
  if (c.up_to_diagonal_phase) out << "phase diagonal\n";
  bool has_rz = false;
  for (const auto& g : c.gates)
    if (g.kind == GateKind::RZ) has_rz = true;
  if (has_rz) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", c.rz_error_budget);
    out << "rzbudget " << buf << "\n";
  }
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::MZ) {
      out << "MZ " << g.q[0] << " -> c" << g.cbit << "\n";
      continue;
    }
    out << detail::gate_name(g.kind);
    if (g.kind == GateKind::RZ) out << " " << g.angle.str();
    if (is_classically_controlled(g.kind)) out << " c" << g.cbit;
    int ar = gate_arity(g.kind);
    for (int i = 0; i < ar; ++i) out << " " << g.q[i];
    out << "\n";
  }
}

inline std::string emit_circuit(const Circuit& c) {
  std::ostringstream out;
  emit_circuit(c, out);
  return out.str();
}

}  // namespace tgf
