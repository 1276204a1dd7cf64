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

// tgf: batch synthesis front end.
//
// Every synthesis subcommand writes a circuit file and a JSON resource
// report, and, when verification is enabled and the circuit fits the
// simulator limit, prints a PASS/FAIL verification line. Identical flags and
// seed produce byte-identical outputs.
//
// Exit codes: 0 ok, 1 parse error, 2 parameter error, 3 verification
// failure, 4 simulator limit exceeded.

#include <cstdio>
#include <cstring>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tgf/circuit_text.hpp"
#include "tgf/fanout.hpp"
#include "tgf/io.hpp"
#include "tgf/swapnet.hpp"

namespace tgf {
namespace {

constexpr const char* kUsage = R"(usage: tgf <command> [flags]

commands:
  lookup       --in TABLE [--lambda L] [--dirty] [--swaps S]   table lookup circuit
  stateprep    --in STATE [--lambda L] [--b B] [--eps E] [--method cr|pg]
  purified     --in WEIGHTS [--lambda L] [--b B]               purified sampling circuit
  isometry     --in COLUMNS [--lambda L] [--b B] [--eps E]
  fanout       --n N [--strategy linear|logarithmic|tree_reuse]
  swapnet      --N N [--b B] [--strategy linear|logarithmic|phase_incorrect]
  bounds       --N N --b B --q Q [--K K] [--eps E] [--c C]     lower bounds
  table        --N N --b B [--K K] [--eps E] [--lambdas 1,2,4] [--json FILE]
  simulate     --circuit FILE --in STATE --out STATE [--no-expand]
  verify-dirty --circuit FILE [--trials T] [--seed S]

synthesis flags: [--out FILE] [--report FILE] [--verify | --no-verify]
                 [--seed S] [--trials T]
Verification runs by default when the circuit fits the simulator limit
(TGF_QUBIT_LIMIT, default 24); --verify makes an oversized circuit an error.
)";

struct Flags {
  std::map<std::string, std::string> values;
  std::set<std::string> switches;

  bool on(const std::string& name) const { return switches.count(name) != 0; }
  bool has(const std::string& name) const { return values.count(name) != 0; }

  std::string str(const std::string& name, const std::string& fallback) const {
    auto it = values.find(name);
    return it == values.end() ? fallback : it->second;
  }
  std::int64_t integer(const std::string& name, std::int64_t fallback) const {
    auto it = values.find(name);
    if (it == values.end()) return fallback;
    char* after = nullptr;
    long long v = std::strtoll(it->second.c_str(), &after, 10);
    if (after == it->second.c_str() || *after != '\0')
      throw ParseError("flag --" + name + " needs an integer, got `" + it->second + "`");
    return v;
  }
  double real(const std::string& name, double fallback) const {
    auto it = values.find(name);
    if (it == values.end()) return fallback;
    char* after = nullptr;
    double v = std::strtod(it->second.c_str(), &after);
    if (after == it->second.c_str() || *after != '\0')
      throw ParseError("flag --" + name + " needs a number, got `" + it->second + "`");
    return v;
  }
  std::string require(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw ParseError("missing required flag --" + name);
    return it->second;
  }
};

Flags parse_flags(int argc, char** argv, const std::set<std::string>& with_value,
                  const std::set<std::string>& boolean) {
  Flags f;
  for (int i = 0; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--", 0) != 0) throw ParseError("unexpected argument `" + a + "`");
    std::string name = a.substr(2);
    if (boolean.count(name)) {
      f.switches.insert(name);
    } else if (with_value.count(name)) {
      if (i + 1 >= argc) throw ParseError("flag --" + name + " needs a value");
      f.values[name] = argv[++i];
    } else {
      throw ParseError("unknown flag --" + name);
    }
  }
  return f;
}

enum class VerifyMode { automatic, forced, off };

VerifyMode verify_mode(const Flags& f) {
  if (f.on("verify") && f.on("no-verify"))
    throw ParseError("--verify and --no-verify are mutually exclusive");
  if (f.on("verify")) return VerifyMode::forced;
  if (f.on("no-verify")) return VerifyMode::off;
  return VerifyMode::automatic;
}

// True if dense verification should run; throws SimLimitError when forced
// but the circuit exceeds the limit, prints a skip note otherwise.
bool verification_applies(VerifyMode mode, const Circuit& c, bool quiet = false) {
  if (mode == VerifyMode::off) return false;
  int limit = dense_qubit_limit({});
  if (c.n_qubits <= limit) return true;
  if (mode == VerifyMode::forced)
    throw SimLimitError("circuit needs " + std::to_string(c.n_qubits) +
                        " qubits, verification limit is " + std::to_string(limit));
  if (!quiet)
    std::printf("verify: skipped (%d qubits over limit %d)\n", c.n_qubits, limit);
  return false;
}

void emit_outputs(const Circuit& c, const Flags& f, const std::string& command) {
  std::string out_path = f.str("out", command + ".circuit");
  std::string report_path = f.str("report", command + ".report.json");
  write_file(out_path, emit_circuit(c));
  ResourceReport r = resource_report(c);
  write_file(report_path, report_to_json(r));
  std::printf("circuit: %s (%d qubits, %zu gates)\n", out_path.c_str(), c.n_qubits,
              c.gates.size());
  std::printf("report: %s (t_count %lld, rz_count %lld)\n", report_path.c_str(),
              static_cast<long long>(r.t_count), static_cast<long long>(r.rz_count));
}

std::uint64_t place_bits(const std::vector<int>& qubits, std::uint64_t value,
                         bool msb_first) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    std::size_t bit = msb_first ? qubits.size() - 1 - i : i;
    s |= ((value >> bit) & 1) << qubits[i];
  }
  return s;
}

std::uint64_t gather_bits(const std::vector<int>& qubits, std::uint64_t state,
                          bool msb_first) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    std::size_t bit = msb_first ? qubits.size() - 1 - i : i;
    v |= ((state >> qubits[i]) & 1) << bit;
  }
  return v;
}

// Functional check of a lookup circuit: classical basis simulation of every
// index, with fresh random contents in the dirty registers each trial. The
// garbage variant leaves blocks d1.. unrestored by design; those bits are
// masked out of the restoration check. The randomized superposition check
// for dirty restoration runs separately.
void check_lookup_functional(const Circuit& c, const DataTable& t, bool dirty,
                             int trials, std::uint64_t seed) {
  std::vector<int> idx =
      t.size() > 1 ? c.reg_qubits("index") : std::vector<int>{};
  auto out = c.reg_qubits(dirty ? "out" : "d0");
  std::uint64_t garbage = 0;
  if (!dirty)
    for (const auto& r : c.registers)
      if (r.name.size() > 1 && r.name[0] == 'd' && r.name != "dmext" &&
          r.name != "dmwork" && r.name != "d0")
        for (int i = 0; i < r.width; ++i) garbage |= std::uint64_t(1) << (r.start + i);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t fill = 0;
    for (const auto& r : c.registers)
      if (r.role == Role::workspace_dirty)
        for (int i = 0; i < r.width; ++i)
          fill |= std::uint64_t(rng() & 1) << (r.start + i);
    for (int x = 0; x < t.size(); ++x) {
      std::uint64_t input = place_bits(idx, std::uint64_t(x), false) | fill;
      BasisState r = simulate_classical(c, input);
      std::uint64_t got = gather_bits(out, r.bits, false);
      if (got != t.at(std::uint64_t(x)))
        throw VerifyError("lookup returned " + std::to_string(got) + " for index " +
                          std::to_string(x) + ", want " +
                          std::to_string(t.at(std::uint64_t(x))));
      std::uint64_t expect = input | place_bits(out, got, false);
      if ((r.bits & ~garbage) != (expect & ~garbage))
        throw VerifyError("lookup failed to restore its workspace at index " +
                          std::to_string(x));
    }
  }
}

double prep_error(const Circuit& c, const std::vector<cplx>& target) {
  auto state = simulate_basis_input(c, 0);
  std::vector<int> fq;
  for (const auto& r : c.registers)
    if (r.role == Role::fourier) fq = c.reg_qubits(r.name);
  const std::size_t fdim = std::size_t(1) << fq.size();
  const double fscale = 1.0 / std::sqrt(double(fdim));
  auto psi = c.reg_qubits("psi");
  double d2 = 0;
  std::vector<char> hit(state.size(), 0);
  for (std::size_t x = 0; x < target.size(); ++x) {
    for (std::size_t k = 0; k < fdim; ++k) {
      std::size_t s = place_bits(psi, x, true);
      for (std::size_t j = 0; j < fq.size(); ++j) s |= ((k >> j) & 1) << fq[j];
      cplx want = target[x];
      if (!fq.empty())
        want *= std::polar(fscale, -2.0 * std::numbers::pi * double(k) / double(fdim));
      hit[s] = 1;
      d2 += std::norm(state[s] - want);
    }
  }
  for (std::size_t s = 0; s < state.size(); ++s)
    if (!hit[s]) d2 += std::norm(state[s]);
  return std::sqrt(d2);
}

int cmd_lookup(const Flags& f) {
  DataTable t = parse_data_table(read_file(f.require("in")));
  int lambda = static_cast<int>(f.integer("lambda", 1));
  bool dirty = f.on("dirty");
  SwapStrategy swaps = SwapStrategy::linear;
  std::string sw = f.str("swaps", "linear");
  if (sw == "logarithmic") swaps = SwapStrategy::logarithmic;
  else if (sw != "linear") throw ParamError("unknown swap strategy " + sw);
  LookupPlan plan = make_lookup_plan(t.size(), lambda, dirty);
  Circuit c = dirty ? build_selectswap_dirty(t, plan, swaps) : build_selectswap(t, plan);
  emit_outputs(c, f, "lookup");

  VerifyMode mode = verify_mode(f);
  if (mode == VerifyMode::off) return 0;
  int trials = static_cast<int>(f.integer("trials", 4));
  std::uint64_t seed = std::uint64_t(f.integer("seed", 12345));
  check_lookup_functional(c, t, dirty, dirty ? trials : 1, seed);
  if (dirty && verification_applies(mode, c, /*quiet=*/true)) {
    double dev = verify_dirty_restoration(c, trials, seed);
    if (dev > 1e-9)
      throw VerifyError("dirty registers disturbed, deviation " + json_double(dev));
    std::printf("verify: PASS (%d indices, dirty deviation %s)\n", t.size(),
                json_double(dev).c_str());
  } else {
    std::printf("verify: PASS (%d indices, basis inputs)\n", t.size());
  }
  return 0;
}

int cmd_stateprep(const Flags& f) {
  StateSpec spec = parse_state_spec(read_file(f.require("in")));
  int lambda = static_cast<int>(f.integer("lambda", 1));
  int b = static_cast<int>(f.integer("b", 12));
  double eps = f.real("eps", 1e-6);
  std::string m = f.str("method", "pg");
  RotationMethod method;
  if (m == "pg" || m == "phase-gradient") method = RotationMethod::phase_gradient;
  else if (m == "cr" || m == "controlled-rotation") method = RotationMethod::controlled_rotation;
  else throw ParamError("unknown rotation method " + m);

  Circuit c = build_state_prep(spec, lambda, b, eps, method);
  emit_outputs(c, f, "stateprep");
  if (!verification_applies(verify_mode(f), c)) return 0;

  double n2 = 0;
  for (const auto& a : spec.amplitudes) n2 += std::norm(a);
  std::vector<cplx> target(spec.amplitudes);
  for (auto& a : target) a /= std::sqrt(n2);
  double err = prep_error(c, target);
  int n = static_cast<int>(c.reg_qubits("psi").size());
  double bound = 2.0 * std::numbers::pi * double(n) / double(1 << b) + eps;
  if (err > bound)
    throw VerifyError("state error " + json_double(err) + " exceeds bound " +
                      json_double(bound));
  std::printf("verify: PASS (error %s <= %s)\n", json_double(err).c_str(),
              json_double(bound).c_str());
  return 0;
}

int cmd_purified(const Flags& f) {
  std::vector<double> w = parse_weights(read_file(f.require("in")));
  int lambda = static_cast<int>(f.integer("lambda", 1));
  int b = static_cast<int>(f.integer("b", 8));
  Circuit c = build_purified_prep(w, lambda, b);
  emit_outputs(c, f, "purified");
  if (!verification_applies(verify_mode(f), c)) return 0;

  auto state = simulate_basis_input(c, 0);
  auto xq = c.reg_qubits("x");
  const int N = static_cast<int>(w.size());
  std::vector<double> diag(N, 0.0);
  for (std::size_t s = 0; s < state.size(); ++s)
    diag[gather_bits(xq, s, true)] += std::norm(state[s]);
  AliasTable alias = alias_decompose(w, b);
  const double denom = double(std::uint64_t(N) << b);
  double l1 = 0, wsum = 0;
  for (double v : w) wsum += v;
  for (int x = 0; x < N; ++x) {
    double want = double(alias.rounded[x]) / denom;
    if (std::abs(diag[x] - want) > 1e-10)
      throw VerifyError("diagonal mismatch at " + std::to_string(x) + ": " +
                        json_double(diag[x]) + " vs rounded " + json_double(want));
    l1 += std::abs(diag[x] - w[x] / wsum);
  }
  double tol = std::ldexp(1.0, -b + 1);
  if (l1 > tol)
    throw VerifyError("total variation " + json_double(l1) + " exceeds " +
                      json_double(tol));
  std::printf("verify: PASS (total variation %s <= %s)\n", json_double(l1).c_str(),
              json_double(tol).c_str());
  return 0;
}

int cmd_isometry(const Flags& f) {
  IsometrySpec spec = parse_isometry_columns(read_file(f.require("in")));
  int lambda = static_cast<int>(f.integer("lambda", 1));
  int b = static_cast<int>(f.integer("b", 12));
  double eps = f.real("eps", 1e-6);
  Circuit c = build_isometry(spec, lambda, b, eps);
  emit_outputs(c, f, "isometry");
  if (!verification_applies(verify_mode(f), c)) return 0;

  auto anc = c.reg_qubits("anc");
  auto psi = c.reg_qubits("psi");
  const std::size_t N = spec.size();
  const int n = static_cast<int>(psi.size());
  double worst = 0;
  for (std::size_t k = 0; k < spec.columns.size(); ++k) {
    std::size_t in = (std::size_t(1) << anc[0]) | place_bits(psi, k, true);
    auto st = simulate_basis_input(c, in);
    double d2 = 0;
    std::vector<char> hit(st.size(), 0);
    for (std::size_t x = 0; x < N; ++x) {
      std::size_t s = place_bits(psi, x, true);
      hit[s] = 1;
      d2 += std::norm(st[s] - spec.columns[k][x]);
    }
    for (std::size_t s = 0; s < st.size(); ++s)
      if (!hit[s]) d2 += std::norm(st[s]);
    worst = std::max(worst, std::sqrt(d2));
  }
  double bound = double(spec.columns.size()) *
                 (2.0 * std::numbers::pi * double(n) / double(1 << b) + eps);
  if (worst > bound)
    throw VerifyError("column error " + json_double(worst) + " exceeds bound " +
                      json_double(bound));
  std::printf("verify: PASS (max column error %s <= %s)\n",
              json_double(worst).c_str(), json_double(bound).c_str());
  return 0;
}

int cmd_fanout(const Flags& f) {
  int n = static_cast<int>(f.integer("n", -1));
  if (n < 1) throw ParamError("fanout needs --n >= 1");
  std::string s = f.str("strategy", "tree_reuse");
  FanoutStrategy strategy;
  if (s == "linear") strategy = FanoutStrategy::linear;
  else if (s == "logarithmic") strategy = FanoutStrategy::logarithmic;
  else if (s == "tree_reuse") strategy = FanoutStrategy::tree_reuse;
  else throw ParamError("unknown fanout strategy " + s);
  Circuit c = build_fanout(n, strategy);
  emit_outputs(c, f, "fanout");
  return 0;
}

int cmd_swapnet(const Flags& f) {
  int N = static_cast<int>(f.integer("N", -1));
  if (N < 2) throw ParamError("swapnet needs --N >= 2");
  int b = static_cast<int>(f.integer("b", 1));
  std::string s = f.str("strategy", "linear");
  SwapStrategy strategy;
  if (s == "linear") strategy = SwapStrategy::linear;
  else if (s == "logarithmic") strategy = SwapStrategy::logarithmic;
  else if (s == "phase_incorrect") strategy = SwapStrategy::phase_incorrect;
  else throw ParamError("unknown swap strategy " + s);
  Circuit c = build_swap_network(N, b, strategy);
  emit_outputs(c, f, "swapnet");
  return 0;
}

int cmd_bounds(const Flags& f) {
  BoundQuery q;
  q.N = f.integer("N", -1);
  q.b = f.integer("b", 1);
  q.K = f.integer("K", 1);
  q.q = f.integer("q", -1);
  q.eps = f.real("eps", 0.5);
  q.c_clifford = f.real("c", 4.0);
  std::int64_t lg = lookup_lower_bound(q);
  std::int64_t sg = stateprep_lower_bound(q);
  std::printf("lookup_gamma_min %lld\n", static_cast<long long>(lg));
  std::printf("stateprep_gamma_min %lld\n", static_cast<long long>(sg));
  std::string report = "{\n  \"lookup_gamma_min\": " + std::to_string(lg) +
                       ",\n  \"stateprep_gamma_min\": " + std::to_string(sg);
  if ((q.N & (q.N - 1)) == 0) {
    std::int64_t mg = measurement_assisted_lower_bound(q.N, q.eps);
    std::printf("measurement_assisted_gamma_min %lld\n", static_cast<long long>(mg));
    std::printf("# %s\n", measurement_assisted_note());
    report += ",\n  \"measurement_assisted_gamma_min\": " + std::to_string(mg) +
              ",\n  \"note\": \"" + json_escape(measurement_assisted_note()) + "\"";
  }
  report += "\n}\n";
  if (f.has("report")) write_file(f.require("report"), report);
  return 0;
}

int cmd_table(const Flags& f) {
  std::int64_t N = f.integer("N", -1);
  std::int64_t b = f.integer("b", 1);
  std::int64_t K = f.integer("K", 1);
  double eps = f.real("eps", 0.5);
  std::vector<std::int64_t> lambdas;
  std::string spec = f.str("lambdas", "");
  if (spec.empty()) {
    lambdas = {1};
    if (N > 0)
      for (std::int64_t l = 2; l <= N; l *= 2) lambdas.push_back(l);
  } else {
    std::size_t pos = 0;
    while (pos < spec.size()) {
      std::size_t comma = spec.find(',', pos);
      std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
      char* after = nullptr;
      long long v = std::strtoll(tok.c_str(), &after, 10);
      if (after == tok.c_str() || *after != '\0')
        throw ParseError("bad lambda list entry `" + tok + "`");
      lambdas.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto rows = cost_table(N, b, K, eps, lambdas);
  std::fputs(format_cost_table(rows).c_str(), stdout);
  std::printf("# %s\n", measurement_assisted_note());
  if (f.has("json")) write_file(f.require("json"), cost_rows_to_json(rows));
  return 0;
}

int cmd_simulate(const Flags& f) {
  Circuit c = parse_circuit(read_file(f.require("circuit")));
  SimOptions opt;
  opt.expand = !f.on("no-expand");
  std::vector<cplx> init = parse_state(read_file(f.require("in")), c.n_qubits);
  double n2 = 0;
  for (const auto& a : init) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > 1e-9) throw ParamError("input state is not normalized");
  auto branches = simulate(c, init, opt);
  std::size_t best = 0;
  for (std::size_t i = 1; i < branches.size(); ++i)
    if (branches[i].prob > branches[best].prob) best = i;
  std::string out;
  if (branches.size() > 1) {
    char head[64];
    std::snprintf(head, sizeof head, "# branch prob %.17g\n", branches[best].prob);
    out += head;
  }
  out += state_to_text(branches[best].amps);
  write_file(f.require("out"), out);
  std::printf("simulate: %zu branch%s, wrote %s\n", branches.size(),
              branches.size() == 1 ? "" : "es", f.require("out").c_str());
  return 0;
}

int cmd_verify_dirty(const Flags& f) {
  Circuit c = parse_circuit(read_file(f.require("circuit")));
  int trials = static_cast<int>(f.integer("trials", 8));
  std::uint64_t seed = std::uint64_t(f.integer("seed", 12345));
  double dev = verify_dirty_restoration(c, trials, seed);
  if (dev > 1e-9) {
    std::printf("verify: FAIL (deviation %s)\n", json_double(dev).c_str());
    throw VerifyError("dirty registers disturbed, deviation " + json_double(dev));
  }
  std::printf("verify: PASS (deviation %s over %d trials)\n",
              json_double(dev).c_str(), trials);
  return 0;
}

int cli_main(int argc, char** argv) {
  if (argc < 2) {
    std::fputs(kUsage, stderr);
    throw ParseError("missing command");
  }
  std::string cmd = argv[1];
  if (cmd == "--help" || cmd == "help") {
    std::fputs(kUsage, stdout);
    return 0;
  }
  const std::set<std::string> synth_common = {"in",     "out",  "report",
                                             "lambda", "seed", "trials"};
  const std::set<std::string> verify_switch = {"verify", "no-verify"};
  auto with = [&](std::set<std::string> extra) {
    extra.insert(synth_common.begin(), synth_common.end());
    return extra;
  };
  if (cmd == "lookup")
    return cmd_lookup(parse_flags(argc - 2, argv + 2, with({"swaps"}),
                                  {"verify", "no-verify", "dirty"}));
  if (cmd == "stateprep")
    return cmd_stateprep(
        parse_flags(argc - 2, argv + 2, with({"b", "eps", "method"}), verify_switch));
  if (cmd == "purified")
    return cmd_purified(parse_flags(argc - 2, argv + 2, with({"b"}), verify_switch));
  if (cmd == "isometry")
    return cmd_isometry(
        parse_flags(argc - 2, argv + 2, with({"b", "eps"}), verify_switch));
  if (cmd == "fanout")
    return cmd_fanout(
        parse_flags(argc - 2, argv + 2, {"n", "strategy", "out", "report"}, {}));
  if (cmd == "swapnet")
    return cmd_swapnet(
        parse_flags(argc - 2, argv + 2, {"N", "b", "strategy", "out", "report"}, {}));
  if (cmd == "bounds")
    return cmd_bounds(parse_flags(argc - 2, argv + 2,
                                  {"N", "b", "K", "q", "eps", "c", "report"}, {}));
  if (cmd == "table")
    return cmd_table(parse_flags(argc - 2, argv + 2,
                                 {"N", "b", "K", "eps", "lambdas", "json"}, {}));
  if (cmd == "simulate")
    return cmd_simulate(parse_flags(argc - 2, argv + 2, {"circuit", "in", "out"},
                                    {"no-expand"}));
  if (cmd == "verify-dirty")
    return cmd_verify_dirty(
        parse_flags(argc - 2, argv + 2, {"circuit", "trials", "seed"}, {}));
  throw ParseError("unknown command `" + cmd + "`");
}

}  // namespace
}  // namespace tgf

int main(int argc, char** argv) {
  try {
    return tgf::cli_main(argc, argv);
  } catch (const tgf::ParseError& e) {
    std::fprintf(stderr, "tgf: parse error: %s\n", e.what());
    return 1;
  } catch (const tgf::ParamError& e) {
    std::fprintf(stderr, "tgf: parameter error: %s\n", e.what());
    return 2;
  } catch (const tgf::VerifyError& e) {
    std::fprintf(stderr, "tgf: verification failed: %s\n", e.what());
    return 3;
  } catch (const tgf::SimLimitError& e) {
    std::fprintf(stderr, "tgf: simulator limit: %s\n", e.what());
    return 4;
  }
}
