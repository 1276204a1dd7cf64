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
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tgf/arith.hpp"
#include "tgf/bits.hpp"
#include "tgf/circuit.hpp"
#include "tgf/errors.hpp"
#include "tgf/lookup.hpp"

// Arbitrary-state preparation driven by data lookup, plus the purified
// density-matrix variant that trades exactness of the state for an exact
// diagonal and much cheaper circuits.
//
// Index convention: the prepared register "psi" (or "x") stores the index
// MSB-first, qubit 0 being the most significant bit. That makes "the first w
// qubits" literally the length-w prefix that the level-w rotation conditions
// on. Lookup index registers stay little-endian; the splice maps account for
// the reversal.

namespace tgf {

struct StateSpec {
  std::vector<std::complex<double>> amplitudes;

  int size() const { return static_cast<int>(amplitudes.size()); }

  void validate() const {
    if (amplitudes.empty()) throw ParamError("state has no amplitudes");
    double norm2 = 0;
    for (const auto& a : amplitudes) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw ParamError("amplitude is not finite");
      norm2 += std::norm(a);
    }
    if (!(norm2 > 0)) throw ParamError("state vector is all zero");
  }
};

// Classical angle data for the rotation cascade. Level w in [0, n) holds one
// entry per length-w prefix y: the probability p[w][y] that the first w index
// bits read y, and the splitting angle theta[w][y] in turns. phi holds the
// per-index phase in turns. *_q are the same angles on the b-bit grid k/2^b,
// which is all the circuits ever see.
struct AngleTable {
  int n = 0;
  int b = 0;
  std::vector<std::vector<double>> p;               // levels 0..n
  std::vector<std::vector<double>> theta;           // levels 0..n-1, turns
  std::vector<std::vector<std::uint64_t>> theta_q;  // round(theta * 2^b)
  std::vector<double> phi;                          // size 2^n, turns
  std::vector<std::uint64_t> phi_q;
};

// theta_y = arccos sqrt(p_{y0}/p_y), phi_x = arg(a_x), both in turns.
// Zero-probability prefixes get theta := 0 so the dead subtree stays silent;
// zero amplitudes get phi := 0.
inline AngleTable compute_angles(const StateSpec& spec, int b) {
  spec.validate();
  const int N = spec.size();
  if (!is_power_of_two(std::uint64_t(N)))
    throw ParamError("state dimension must be a power of two");
  if (b < 1 || b > 60) throw ParamError("precision bits must be in [1, 60]");
  const int n = N > 1 ? ceil_log2(std::uint64_t(N)) : 0;

  double norm2 = 0;
  for (const auto& a : spec.amplitudes) norm2 += std::norm(a);

  AngleTable t;
  t.n = n;
  t.b = b;
  t.p.resize(n + 1);
  t.p[n].resize(N);
  for (int x = 0; x < N; ++x) t.p[n][x] = std::norm(spec.amplitudes[x]) / norm2;
  for (int w = n - 1; w >= 0; --w) {
    t.p[w].resize(std::size_t(1) << w);
    for (int y = 0; y < (1 << w); ++y)
      t.p[w][y] = t.p[w + 1][2 * y] + t.p[w + 1][2 * y + 1];
  }

  const double scale = double(std::uint64_t(1) << b);
  const std::uint64_t grid = std::uint64_t(1) << b;
  t.theta.resize(n);
  t.theta_q.resize(n);
  for (int w = 0; w < n; ++w) {
    t.theta[w].resize(std::size_t(1) << w);
    t.theta_q[w].resize(std::size_t(1) << w);
    for (int y = 0; y < (1 << w); ++y) {
      double th = 0;
      if (t.p[w][y] > 0) {
        double r = std::sqrt(std::clamp(t.p[w + 1][2 * y] / t.p[w][y], 0.0, 1.0));
        th = std::acos(r) / (2 * std::numbers::pi);
      }
      t.theta[w][y] = th;
      t.theta_q[w][y] = std::uint64_t(std::llround(th * scale)) % grid;
    }
  }

  t.phi.resize(N);
  t.phi_q.resize(N);
  for (int x = 0; x < N; ++x) {
    double ph = 0;
    if (std::abs(spec.amplitudes[x]) > 0) {
      ph = std::arg(spec.amplitudes[x]) / (2 * std::numbers::pi);
      if (ph < 0) ph += 1.0;
    }
    t.phi[x] = ph;
    t.phi_q[x] = std::uint64_t(std::llround(ph * scale)) % grid;
  }
  return t;
}

// Evaluates the angle tree classically: the normalized state the cascade aims
// for. quantized=true uses the b-bit grid angles and is then exactly the
// output an exact-RZ simulation of the emitted circuit must produce.
inline std::vector<std::complex<double>> reconstruct_amplitudes(
    const AngleTable& t, bool quantized = true) {
  const int N = 1 << t.n;
  const double tau = 2 * std::numbers::pi;
  const double scale = double(std::uint64_t(1) << t.b);
  std::vector<std::complex<double>> amp(N);
  for (int x = 0; x < N; ++x) {
    double m = 1.0;
    for (int w = 0; w < t.n; ++w) {
      const int y = x >> (t.n - w);
      const int bit = (x >> (t.n - 1 - w)) & 1;
      const double th =
          tau * (quantized ? double(t.theta_q[w][y]) / scale : t.theta[w][y]);
      m *= bit ? std::sin(th) : std::cos(th);
    }
    const double ph =
        tau * (quantized ? double(t.phi_q[x]) / scale : t.phi[x]);
    amp[x] = std::polar(m, ph);
  }
  return amp;
}

// The phase-kickback resource 2^{-b/2} sum_k e^{-2 pi i k/2^b} |k>, in product
// form: one Hadamard and one RZ per qubit. The RZ budget eps_f is the total
// synthesis error the report splits over the b rotations.
inline Circuit build_fourier_state(int b, double eps_f) {
  if (b < 1 || b > 60) throw ParamError("width must be in [1, 60]");
  if (!(eps_f > 0)) throw ParamError("error budget must be positive");
  Circuit c;
  int f0 = c.add_register("f", b, Role::fourier);
  c.rz_error_budget = eps_f;
  for (int j = 0; j < b; ++j) {
    c.g1(GateKind::H, f0 + j);
    c.rz(Turn(-(std::int64_t(1) << j), std::int64_t(1) << b), f0 + j);
  }
  c.validate();
  return c;
}

enum class RotationMethod : std::uint8_t {
  phase_gradient,       // controlled adders against a Fourier register
  controlled_rotation,  // 2 RZ + 2 CX per angle bit
};

namespace detail {

// ctrl ? B += A : B. The addend is masked through AND gadgets, so A and ctrl
// are preserved and the ripple itself is the only other T cost. subtract=true
// reverses the ripple (B -= A under control).
inline void append_ctrl_addsub(Circuit& c, int ctrl, const std::vector<int>& A,
                               const std::vector<int>& B,
                               const std::vector<int>& mask,
                               const std::vector<int>& ripple, bool subtract) {
  const int w = static_cast<int>(A.size());
  if (static_cast<int>(mask.size()) < w) throw ParamError("mask register too small");
  for (int i = 0; i < w; ++i) c.g3(GateKind::AND, ctrl, A[i], mask[i]);
  std::vector<int> M(mask.begin(), mask.begin() + w);
  if (subtract) {
    Circuit t;
    t.n_qubits = c.n_qubits;
    append_add_quantum(t, M, B, ripple);
    Circuit ti = t.inverse();
    for (const Gate& g : ti.gates) c.gates.push_back(g);
  } else {
    append_add_quantum(c, M, B, ripple);
  }
  for (int i = w - 1; i >= 0; --i) c.g3(GateKind::ANDdg, ctrl, A[i], mask[i]);
}

// Splices a dirty-lookup circuit into the host. 'index_map' carries the host
// qubit for each little-endian index bit; shared pools are handed over by
// prefix.
inline void splice_dirty_lookup(Circuit& c, const Circuit& sub,
                                const std::vector<int>& index_map,
                                const std::vector<int>& out,
                                const std::vector<int>& sel,
                                const std::vector<int>& dmext,
                                const std::vector<int>& dmwork,
                                const std::vector<int>& dirty, int block_bits) {
  std::vector<int> map(sub.n_qubits, -1);
  for (const auto& r : sub.registers) {
    for (int i = 0; i < r.width; ++i) {
      int dst;
      if (r.name == "index") dst = index_map.at(i);
      else if (r.name == "out") dst = out.at(i);
      else if (r.name == "sel") dst = sel.at(i);
      else if (r.name == "dmext") dst = dmext.at(i);
      else if (r.name == "dmwork") dst = dmwork.at(i);
      else dst = dirty.at(std::stoi(r.name.substr(1)) * block_bits + i);
      map[r.start + i] = dst;
    }
  }
  append_remapped(c, sub, map);
}

}  // namespace detail

// The full preparation circuit for |psi>: per level w a dirty-lookup oracle
// writes the quantized angle of the current prefix into the angle register,
// the splitting rotation hits qubit w, and the oracle uncomputes; one last
// lookup pass applies the per-index phases. Per-level lambda is clamped to
// the 2^w table entries that exist; levels whose angles all quantize to zero
// are skipped outright.
//
// The splitting rotation exp(-i theta Y) is a Z rotation conjugated into the
// Y basis. Both methods realize it exactly on the grid angle:
//   controlled_rotation   per angle bit k, CX rz(-1/2^{k+1}) CX rz(+1/2^{k+1})
//                         on the target, controlled phases with no rotation
//                         residue on the angle register;
//   phase_gradient        an X-conjugated controlled subtract plus a
//                         controlled add of the angle register into a Fourier
//                         register prepared in-circuit, so each branch of the
//                         target kicks back the opposite phase.
inline Circuit build_state_prep(const StateSpec& spec, int lambda, int b,
                                double eps_f,
                                RotationMethod method = RotationMethod::phase_gradient) {
  spec.validate();
  const int N = spec.size();
  if (N < 2 || !is_power_of_two(std::uint64_t(N)))
    throw ParamError("state dimension must be a power of two, at least 2");
  if (lambda < 1 || lambda > N) throw ParamError("lambda must be in [1, N]");
  if (b < 1 || b > 60) throw ParamError("precision bits must be in [1, 60]");
  if (!(eps_f > 0)) throw ParamError("error budget must be positive");
  const int n = ceil_log2(std::uint64_t(N));
  const AngleTable at = compute_angles(spec, b);

  // Build the per-level lookups first so the shared pools can be sized.
  std::vector<Circuit> subs(n + 1);
  std::vector<bool> used(n + 1, false);
  int sel_w = 0, ext_w = 0, work_w = 0, dirty_w = 0;
  for (int w = 0; w <= n; ++w) {
    const auto& entries = w < n ? at.theta_q[w] : at.phi_q;
    if (std::all_of(entries.begin(), entries.end(),
                    [](std::uint64_t e) { return e == 0; }))
      continue;
    const int Nw = 1 << w;
    const int lam = std::min(lambda, Nw);
    DataTable tab;
    tab.b = b;
    tab.entries = entries;
    subs[w] = build_selectswap_dirty(tab, make_lookup_plan(Nw, lam, true));
    used[w] = true;
    for (const auto& r : subs[w].registers) {
      if (r.name == "sel") sel_w = std::max(sel_w, r.width);
      else if (r.name == "dmext") ext_w = std::max(ext_w, r.width);
      else if (r.name == "dmwork") work_w = std::max(work_w, r.width);
    }
    dirty_w = std::max(dirty_w, lam * b);
  }

  Circuit c;
  c.rz_error_budget = eps_f;
  c.policy.cswap = ToffoliStrategy::seven_t;
  const int psi0 = c.add_register("psi", n, Role::output);
  std::vector<int> theta(b);
  int t0 = c.add_register("theta", b, Role::workspace_clean);
  for (int i = 0; i < b; ++i) theta[i] = t0 + i;

  std::vector<int> fourier, mask, ripple;
  if (method == RotationMethod::phase_gradient) {
    int f0 = c.add_register("fourier", b, Role::fourier);
    for (int i = 0; i < b; ++i) fourier.push_back(f0 + i);
    int m0 = c.add_register("mask", b, Role::workspace_clean);
    for (int i = 0; i < b; ++i) mask.push_back(m0 + i);
    if (b > 1) {
      int r0 = c.add_register("ripple", b - 1, Role::workspace_clean);
      for (int i = 0; i < b - 1; ++i) ripple.push_back(r0 + i);
    }
  }
  std::vector<int> sel, dmext, dmwork, dirty;
  if (sel_w > 0) {
    int s0 = c.add_register("sel", sel_w, Role::workspace_clean);
    for (int i = 0; i < sel_w; ++i) sel.push_back(s0 + i);
  }
  if (ext_w > 0) {
    int e0 = c.add_register("dmext", ext_w, Role::workspace_clean);
    int w0 = c.add_register("dmwork", work_w, Role::workspace_clean);
    for (int i = 0; i < ext_w; ++i) dmext.push_back(e0 + i);
    for (int i = 0; i < work_w; ++i) dmwork.push_back(w0 + i);
  }
  if (dirty_w > 0) {
    int g0 = c.add_register("g", dirty_w, Role::workspace_dirty);
    for (int i = 0; i < dirty_w; ++i) dirty.push_back(g0 + i);
  }

  if (method == RotationMethod::phase_gradient) {
    for (int j = 0; j < b; ++j) {
      c.g1(GateKind::H, fourier[j]);
      c.rz(Turn(-(std::int64_t(1) << j), std::int64_t(1) << b), fourier[j]);
    }
  }

  // Applies diag(e^{-i a}, e^{+i a}) on z for the grid angle held in theta,
  // wrapped into the Y basis: z ends up rotated by exp(-i 2 pi (a/2^b) Y).
  const auto rotation = [&](int z) {
    c.g1(GateKind::Sdg, z);
    c.g1(GateKind::H, z);
    if (method == RotationMethod::controlled_rotation) {
      for (int k = 0; k < b; ++k) {
        const int ctrl = theta[b - 1 - k];
        const Turn u(1, std::int64_t(1) << (k + 1));
        c.g2(GateKind::CX, ctrl, z);
        c.rz(-u, z);
        c.g2(GateKind::CX, ctrl, z);
        c.rz(u, z);
      }
    } else {
      c.g1(GateKind::X, z);
      detail::append_ctrl_addsub(c, z, theta, fourier, mask, ripple, true);
      c.g1(GateKind::X, z);
      detail::append_ctrl_addsub(c, z, theta, fourier, mask, ripple, false);
    }
    c.g1(GateKind::H, z);
    c.g1(GateKind::S, z);
  };

  for (int w = 0; w <= n; ++w) {
    if (!used[w]) continue;
    std::vector<int> index_map(w == n ? n : w);
    for (std::size_t i = 0; i < index_map.size(); ++i)
      index_map[i] = psi0 + int(index_map.size()) - 1 - int(i);
    const std::size_t mark = c.gates.size();
    detail::splice_dirty_lookup(c, subs[w], index_map, theta, sel, dmext, dmwork,
                                dirty, b);
    const std::size_t oracle_end = c.gates.size();
    if (w < n) {
      rotation(psi0 + w);
    } else if (method == RotationMethod::controlled_rotation) {
      for (int k = 0; k < b; ++k)
        c.rz(Turn(1, std::int64_t(1) << (k + 1)), theta[b - 1 - k]);
    } else {
      detail::append_add_quantum(c, theta, fourier, ripple);
    }
    append_inverse_of_range(c, mark, oracle_end);
  }
  c.validate();
  return c;
}

// Exact integer alias decomposition of nonnegative weights. rounded is the
// largest-remainder rounding of the normalized weights to a total of N*2^b;
// keep/alias split every rounded bin so that
//   rounded[x] = keep[x] + sum over y with alias[y]=x of (2^b - keep[y]).
// keep can reach 2^b (a bin kept whole), which is why lookups store it in
// b+1 bits.
struct AliasTable {
  int b = 0;
  std::vector<std::uint64_t> rounded;
  std::vector<std::uint64_t> keep;
  std::vector<int> alias;
};

inline AliasTable alias_decompose(const std::vector<double>& weights, int b) {
  const int N = static_cast<int>(weights.size());
  if (N < 1) throw ParamError("empty weight vector");
  if (N > (1 << 20)) throw ParamError("too many weights");
  if (b < 1 || b > 40) throw ParamError("precision bits must be in [1, 40]");
  long double total = 0;
  for (double w : weights) {
    if (!std::isfinite(w)) throw ParamError("weight is not finite");
    if (w < 0) throw ParamError("negative weight");
    total += w;
  }
  if (!(total > 0)) throw ParamError("weights sum to zero");

  const std::uint64_t target = std::uint64_t(N) << b;
  std::vector<std::uint64_t> base(N);
  std::vector<std::pair<long double, int>> rem(N);
  std::uint64_t assigned = 0;
  for (int x = 0; x < N; ++x) {
    long double t = (long double)(weights[x]) / total * (long double)(target);
    std::uint64_t fl = (std::uint64_t)std::floor((double)t);
    if (fl > target) fl = target;
    base[x] = fl;
    rem[x] = {t - (long double)fl, x};
    assigned += fl;
  }
  // Largest remainder first, index-ascending on ties, until the sum is exact.
  std::sort(rem.begin(), rem.end(), [](const auto& a, const auto& b2) {
    if (a.first != b2.first) return a.first > b2.first;
    return a.second < b2.second;
  });
  for (std::size_t i = 0; assigned < target; ++i, ++assigned) ++base[rem[i % rem.size()].second];
  for (std::size_t i = rem.size(); assigned > target; --i, --assigned) {
    while (base[rem[(i - 1) % rem.size()].second] == 0) --i;
    --base[rem[(i - 1) % rem.size()].second];
  }

  AliasTable t;
  t.b = b;
  t.rounded = base;
  t.keep = base;
  t.alias.resize(N);
  std::iota(t.alias.begin(), t.alias.end(), 0);

  const std::int64_t full = std::int64_t(1) << b;
  std::vector<std::int64_t> work(base.begin(), base.end());
  std::vector<int> small, large;
  for (int x = 0; x < N; ++x) {
    if (work[x] < full) small.push_back(x);
    else if (work[x] > full) large.push_back(x);
  }
  while (!small.empty()) {
    const int s = small.back();
    small.pop_back();
    t.keep[s] = std::uint64_t(work[s]);
    if (large.empty()) continue;  // unreachable when the total is exact
    const int l = large.back();
    t.alias[s] = l;
    work[l] -= full - work[s];
    if (work[l] < full) {
      large.pop_back();
      small.push_back(l);
    } else if (work[l] == full) {
      large.pop_back();
      t.keep[l] = std::uint64_t(full);
      t.alias[l] = l;
    }
  }
  for (int l : large) {
    t.keep[l] = std::uint64_t(full);
    t.alias[l] = l;
  }
  return t;
}

// |a>|j>|flag> -> |a>|j>|flag xor [j >= a]>. Carry comparator; a and j are
// preserved, the scratch register returns clean.
inline Circuit build_comparator(int b) {
  if (b < 1 || b > 62) throw ParamError("comparator width must be in [1, 62]");
  Circuit c;
  int a0 = c.add_register("a", b, Role::index);
  int j0 = c.add_register("j", b, Role::index);
  int f0 = c.add_register("flag", 1, Role::output);
  int s0 = c.add_register("cmp", b, Role::workspace_clean);
  std::vector<int> A(b), J(b), S(b);
  for (int i = 0; i < b; ++i) {
    A[i] = a0 + i;
    J[i] = j0 + i;
    S[i] = s0 + i;
  }
  detail::append_leq_flag(c, J, A, f0, S);  // [a <= j]
  c.validate();
  return c;
}

// Purified preparation of a probability distribution: Hadamards over index
// and comparison registers, one dirty lookup of (keep, alias) packed into
// b+1+n bits, the comparator, and a flag-controlled swap pulling the alias
// index in. The diagonal of the traced-out index register equals
// rounded[x]/(N*2^b) exactly; everything else is garbage entangled with x.
inline Circuit build_purified_prep(const std::vector<double>& weights, int lambda,
                                   int b) {
  const int N = static_cast<int>(weights.size());
  if (N < 2 || !is_power_of_two(std::uint64_t(N)))
    throw ParamError("weight count must be a power of two, at least 2");
  if (lambda < 1 || lambda > N) throw ParamError("lambda must be in [1, N]");
  if (b < 1 || b > 40) throw ParamError("precision bits must be in [1, 40]");
  const int n = ceil_log2(std::uint64_t(N));
  const AliasTable at = alias_decompose(weights, b);

  const int bt = (b + 1) + n;
  DataTable tab;
  tab.b = bt;
  tab.entries.resize(N);
  for (int x = 0; x < N; ++x)
    tab.entries[x] = at.keep[x] | (std::uint64_t(at.alias[x]) << (b + 1));
  Circuit sub = build_selectswap_dirty(tab, make_lookup_plan(N, lambda, true));

  Circuit c;
  c.policy.cswap = ToffoliStrategy::seven_t;
  const int x0 = c.add_register("x", n, Role::output);
  const int v0 = c.add_register("val", bt, Role::output);
  const int u0 = c.add_register("u", b + 1, Role::workspace_clean);
  const int f0 = c.add_register("flag", 1, Role::output);
  const int s0 = c.add_register("cmp", b + 1, Role::workspace_clean);
  std::vector<int> sel, dmext, dmwork;
  for (const auto& r : sub.registers) {
    if (r.name == "sel") {
      int q = c.add_register("sel", r.width, Role::workspace_clean);
      for (int i = 0; i < r.width; ++i) sel.push_back(q + i);
    } else if (r.name == "dmext") {
      int q = c.add_register("dmext", r.width, Role::workspace_clean);
      for (int i = 0; i < r.width; ++i) dmext.push_back(q + i);
    } else if (r.name == "dmwork") {
      int q = c.add_register("dmwork", r.width, Role::workspace_clean);
      for (int i = 0; i < r.width; ++i) dmwork.push_back(q + i);
    }
  }
  const int g0 = c.add_register("g", bt * lambda, Role::workspace_dirty);

  for (int i = 0; i < n; ++i) c.g1(GateKind::H, x0 + i);
  for (int i = 0; i < b; ++i) c.g1(GateKind::H, u0 + i);  // u's top bit stays 0

  std::vector<int> index_map(n), out(bt), dirty(bt * lambda);
  for (int i = 0; i < n; ++i) index_map[i] = x0 + n - 1 - i;
  for (int i = 0; i < bt; ++i) out[i] = v0 + i;
  for (int i = 0; i < bt * lambda; ++i) dirty[i] = g0 + i;
  detail::splice_dirty_lookup(c, sub, index_map, out, sel, dmext, dmwork, dirty, bt);

  std::vector<int> A(b + 1), J(b + 1), S(b + 1);
  for (int i = 0; i <= b; ++i) {
    A[i] = v0 + i;
    J[i] = u0 + i;
    S[i] = s0 + i;
  }
  detail::append_leq_flag(c, J, A, f0, S);  // flag = [u >= keep]

  for (int q = 0; q < n; ++q)
    c.g3(GateKind::CSWAP, f0, v0 + (b + 1) + q, x0 + n - 1 - q);
  c.validate();
  return c;
}

}  // namespace tgf
