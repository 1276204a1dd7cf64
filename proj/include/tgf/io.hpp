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

// File formats. Tables arrive as JSON {"b": int, "entries": [...]} or CSV
// with a `# b=<int>` header; state specs as JSON {"amplitudes": [[re,im],..]};
// isometry columns as JSON {"n": int, "columns": [[[re,im],..],..]}; weights
// as CSV; simulator states as text lines `index re im`. Writers format
// doubles with %.17g so identical inputs give byte-identical files.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "lookup.hpp"
#include "resources.hpp"
#include "simulate.hpp"
#include "stateprep.hpp"
#include "unitary.hpp"

namespace tgf {

struct JsonValue {
  enum class Kind { null_value, number, string, array, object };
  Kind kind = Kind::null_value;
  double number = 0.0;
  std::string str;
  std::vector<JsonValue> items;
  std::vector<std::pair<std::string, JsonValue>> members;

  const JsonValue* find(const std::string& key) const {
    for (const auto& m : members)
      if (m.first == key) return &m.second;
    return nullptr;
  }
  const JsonValue& at(const std::string& key) const {
    if (kind != Kind::object) throw ParseError("expected a JSON object");
    const JsonValue* v = find(key);
    if (!v) throw ParseError("missing JSON key \"" + key + "\"");
    return *v;
  }
  double num() const {
    if (kind != Kind::number) throw ParseError("expected a JSON number");
    return number;
  }
  std::int64_t as_int() const {
    double v = num();
    auto r = static_cast<std::int64_t>(v);
    if (double(r) != v) throw ParseError("expected a JSON integer");
    return r;
  }
};

namespace detail {

struct JsonParser {
  const char* p;
  const char* end;

  void skip() {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r')) ++p;
  }
  [[noreturn]] void fail(const char* what) {
    throw ParseError(std::string("JSON: ") + what);
  }
  bool eat(char c) {
    skip();
    if (p < end && *p == c) {
      ++p;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) fail(what);
  }

  std::string parse_string() {
    expect('"', "expected string");
    std::string out;
    while (p < end && *p != '"') {
      char c = *p++;
      if (c == '\\') {
        if (p >= end) fail("truncated escape");
        char e = *p++;
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case '/': out += '/'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          default: fail("unsupported escape");
        }
      } else {
        out += c;
      }
    }
    expect('"', "unterminated string");
    return out;
  }

  JsonValue parse_value() {
    skip();
    if (p >= end) fail("unexpected end of input");
    JsonValue v;
    char c = *p;
    if (c == '{') {
      ++p;
      v.kind = JsonValue::Kind::object;
      if (!eat('}')) {
        do {
          std::string key = parse_string();
          expect(':', "expected ':'");
          v.members.emplace_back(std::move(key), parse_value());
        } while (eat(','));
        expect('}', "expected '}'");
      }
    } else if (c == '[') {
      ++p;
      v.kind = JsonValue::Kind::array;
      if (!eat(']')) {
        do {
          v.items.push_back(parse_value());
        } while (eat(','));
        expect(']', "expected ']'");
      }
    } else if (c == '"') {
      v.kind = JsonValue::Kind::string;
      v.str = parse_string();
    } else if (std::strncmp(p, "null", 4) == 0 && end - p >= 4) {
      p += 4;
    } else if (std::strncmp(p, "true", 4) == 0 && end - p >= 4) {
      p += 4;
      v.kind = JsonValue::Kind::number;
      v.number = 1.0;
    } else if (std::strncmp(p, "false", 5) == 0 && end - p >= 5) {
      p += 5;
      v.kind = JsonValue::Kind::number;
      v.number = 0.0;
    } else {
      char* after = nullptr;
      double d = std::strtod(p, &after);
      if (after == p || after > end) fail("expected a value");
      v.kind = JsonValue::Kind::number;
      v.number = d;
      p = after;
    }
    return v;
  }
};

}  // namespace detail

inline JsonValue parse_json(const std::string& text) {
  detail::JsonParser jp{text.data(), text.data() + text.size()};
  JsonValue v = jp.parse_value();
  jp.skip();
  if (jp.p != jp.end) jp.fail("trailing garbage");
  return v;
}

inline std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return read_stream(in);
}

// %.17g round-trips doubles exactly and never emits locale commas.
inline std::string json_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::pair<double, double> parse_pair(const JsonValue& v) {
  if (v.kind != JsonValue::Kind::array || v.items.size() != 2)
    throw ParseError("expected [re, im]");
  return {v.items[0].num(), v.items[1].num()};
}

// --- Data tables -----------------------------------------------------------

inline DataTable parse_data_table(const std::string& text) {
  DataTable t;
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    JsonValue v = parse_json(text);
    t.b = static_cast<int>(v.at("b").as_int());
    const JsonValue& e = v.at("entries");
    if (e.kind != JsonValue::Kind::array) throw ParseError("entries must be an array");
    for (const JsonValue& x : e.items) {
      std::int64_t n = x.as_int();
      if (n < 0) throw ParseError("table entries must be nonnegative");
      t.entries.push_back(std::uint64_t(n));
    }
  } else {
    // CSV: `# b=<int>` header line, then one integer per line.
    std::istringstream in(text);
    std::string line;
    bool have_b = false;
    while (std::getline(in, line)) {
      std::size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      if (line[a] == '#') {
        std::size_t eq = line.find("b=", a);
        if (eq != std::string::npos) {
          t.b = std::atoi(line.c_str() + eq + 2);
          have_b = true;
        }
        continue;
      }
      char* after = nullptr;
      long long x = std::strtoll(line.c_str() + a, &after, 10);
      if (after == line.c_str() + a || x < 0)
        throw ParseError("bad table line: " + line);
      t.entries.push_back(std::uint64_t(x));
    }
    if (!have_b) throw ParseError("table CSV needs a `# b=<int>` header");
  }
  t.validate();
  return t;
}

inline std::string data_table_to_json(const DataTable& t) {
  std::string out = "{\"b\": " + std::to_string(t.b) + ", \"entries\": [";
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(t.entries[i]);
  }
  out += "]}\n";
  return out;
}

// --- State specs and weights -----------------------------------------------

inline StateSpec parse_state_spec(const std::string& text) {
  JsonValue v = parse_json(text);
  const JsonValue& a = v.at("amplitudes");
  if (a.kind != JsonValue::Kind::array) throw ParseError("amplitudes must be an array");
  StateSpec s;
  for (const JsonValue& e : a.items) {
    auto [re, im] = parse_pair(e);
    s.amplitudes.emplace_back(re, im);
  }
  s.validate();
  return s;
}

inline std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> w;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double v;
    while (ls >> v) {
      if (v < 0) throw ParseError("weights must be nonnegative");
      w.push_back(v);
    }
    if (!ls.eof()) throw ParseError("bad weight line: " + line);
  }
  if (w.empty()) throw ParseError("no weights found");
  return w;
}

inline IsometrySpec parse_isometry_columns(const std::string& text) {
  JsonValue v = parse_json(text);
  std::int64_t n = v.at("n").as_int();
  if (n < 1 || n > 30) throw ParseError("column qubit count out of range");
  const std::size_t N = std::size_t(1) << n;
  const JsonValue& cols = v.at("columns");
  if (cols.kind != JsonValue::Kind::array || cols.items.empty())
    throw ParseError("columns must be a nonempty array");
  IsometrySpec spec;
  for (const JsonValue& col : cols.items) {
    if (col.kind != JsonValue::Kind::array || col.items.size() != N)
      throw ParseError("each column needs 2^n amplitude pairs");
    std::vector<cplx> u;
    for (const JsonValue& e : col.items) {
      auto [re, im] = parse_pair(e);
      u.emplace_back(re, im);
    }
    spec.columns.push_back(std::move(u));
  }
  spec.validate();
  return spec;
}

// --- Simulator states ------------------------------------------------------

inline std::vector<cplx> parse_state(const std::string& text, int n_qubits) {
  const std::size_t dim = std::size_t(1) << n_qubits;
  std::vector<cplx> amps(dim, cplx(0, 0));
  std::istringstream in(text);
  std::string line;
  bool any = false;
  while (std::getline(in, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::istringstream ls(line);
    std::uint64_t index;
    double re, im;
    if (!(ls >> index >> re >> im)) throw ParseError("bad state line: " + line);
    if (index >= dim) throw ParseError("state index exceeds qubit count");
    amps[index] = cplx(re, im);
    any = true;
  }
  if (!any) throw ParseError("no amplitudes found");
  return amps;
}

inline std::string state_to_text(const std::vector<cplx>& amps) {
  std::string out;
  char line[96];
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) <= 1e-14) continue;
    std::snprintf(line, sizeof line, "%llu %.17g %.17g\n",
                  static_cast<unsigned long long>(i), amps[i].real(),
                  amps[i].imag());
    out += line;
  }
  return out;
}

// --- Reports and tables ----------------------------------------------------

inline std::string report_to_json(const ResourceReport& r) {
  std::string out = "{\n";
  auto field = [&](const char* k, std::int64_t v, bool last = false) {
    out += std::string("  \"") + k + "\": " + std::to_string(v) + (last ? "\n" : ",\n");
  };
  field("t_count", r.t_count);
  field("t_depth", r.t_depth);
  field("clifford_count", r.clifford_count);
  field("clifford_depth", r.clifford_depth);
  field("rz_count", r.rz_count);
  field("rz_t_budget", r.rz_t_budget);
  field("measurement_count", r.measurement_count);
  field("total_gates", r.total_gates);
  field("qubits_total", r.qubits_total);
  field("qubits_clean", r.qubits_clean);
  field("qubits_dirty", r.qubits_dirty);
  field("classical_bits", r.classical_bits, true);
  out += "}\n";
  return out;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string cost_rows_to_json(const std::vector<CostRow>& rows) {
  std::string out = "{\n  \"note\": \"";
  out += json_escape(measurement_assisted_note());
  out += "\",\n  \"rows\": [\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CostRow& r = rows[i];
    out += "    {\"name\": \"" + json_escape(r.name) + "\", \"lambda\": " +
           std::to_string(r.lambda) + ", \"t\": " + json_double(r.t) +
           ", \"note\": \"" + json_escape(r.note) + "\"}";
    out += (i + 1 < rows.size()) ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

}  // namespace tgf
