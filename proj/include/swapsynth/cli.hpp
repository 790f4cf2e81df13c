// Copyright 2026 The swapsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line driver: synth, verify, analyze, cost, random.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "swapsynth/canonical.hpp"
#include "swapsynth/circuit.hpp"
#include "swapsynth/costmodel.hpp"
#include "swapsynth/entanglement.hpp"
#include "swapsynth/errors.hpp"
#include "swapsynth/gates.hpp"
#include "swapsynth/json_io.hpp"
#include "swapsynth/synthesis.hpp"

namespace swapsynth::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kNumericalFailure = 3,
};

inline constexpr double kDefaultTolerance = 1e-8;

// Engineering notation for durations: "320.050 ns".
inline std::string format_time(double seconds) {
  static constexpr std::pair<double, const char*> kUnits[] = {
      {1.0, "s"}, {1e-3, "ms"}, {1e-6, "us"}, {1e-9, "ns"}, {1e-12, "ps"}, {1e-15, "fs"}};
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  if (seconds == 0.0) {
    os << 0.0 << " s";
    return os.str();
  }
  for (const auto& [scale, unit] : kUnits) {
    if (std::abs(seconds) >= scale * (1.0 - 1e-12)) {
      os << seconds / scale << ' ' << unit;
      return os.str();
    }
  }
  os << seconds / 1e-15 << " fs";
  return os.str();
}

inline std::string format_number(double v, int precision = 12) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

// Key/value lines with the keys padded to a common width.
class TextReport {
 public:
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, double value) { add(std::move(key), format_number(value)); }
  void line(std::string text) { rows_.emplace_back(std::string(), std::move(text)); }

  void render(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (k.empty()) {
        out << v << '\n';
      } else {
        out << std::left << std::setw(static_cast<int>(width)) << k << " : " << v << '\n';
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

struct GlobalOptions {
  std::string out;
  bool json = false;
  double tolerance = kDefaultTolerance;
  bool prune = false;
};

struct TargetOptions {
  std::string gate;
  std::string matrix;
};

inline void add_target_options(CLI::App* cmd, TargetOptions& t, bool required) {
  auto* g = cmd->add_option("--gate", t.gate, "named two-qubit target (cnot, cz, swap, identity4)");
  auto* m = cmd->add_option("--matrix", t.matrix, "target matrix JSON file");
  g->excludes(m);
  m->excludes(g);
  if (required) {
    auto* grp = cmd->add_option_group("target");
    grp->add_option(g);
    grp->add_option(m);
    grp->require_option(1);
  }
}

struct Target {
  Matrix4 matrix;
  std::string description;
};

inline Target load_target(const TargetOptions& t) {
  if (!t.gate.empty()) return {named_gate4(t.gate), "gate " + t.gate};
  if (!t.matrix.empty()) return {matrix_from_json(read_json_file(t.matrix)), t.matrix};
  throw ParseError("a target is required (--gate or --matrix)");
}

inline HardwareProfile load_profile(const std::string& spec) {
  if (spec == "gaas" || spec == "si") return builtin_profile(spec);
  if (std::filesystem::exists(spec)) return profile_from_json(read_json_file(spec));
  throw ParseError("unknown hardware profile '" + spec + "' (use gaas, si or a JSON file)");
}

inline std::string describe_op(const GateOp& op) {
  std::ostringstream os;
  if (const auto* l = std::get_if<LocalOp>(&op)) {
    os << "local  q" << l->qubit << "  " << (l->label.empty() ? "(unlabelled)" : l->label);
  } else if (const auto* s = std::get_if<SwapPowOp>(&op)) {
    os << "swap^" << format_number(s->alpha);
  } else {
    const int c = std::get<CnotOp>(op).control;
    os << "cnot   control q" << c << " target q" << 3 - c;
  }
  return os.str();
}

inline void render_circuit_text(const Circuit& c, TextReport& r) {
  r.add("global_phase", c.global_phase);
  for (std::size_t i = 0; i < c.ops.size(); ++i)
    r.add("op " + std::to_string(i), describe_op(c.ops[i]));
}

inline Json counts_json(const GateCounts& n) {
  Json j;
  j["swaps"] = n.swaps;
  j["cnots"] = n.cnots;
  j["locals"] = n.locals;
  return j;
}

inline std::string counts_text(const GateCounts& n) {
  return std::to_string(n.swaps) + " swap_pow, " + std::to_string(n.cnots) + " cnot, " +
         std::to_string(n.locals) + " local";
}

inline void emit(std::ostream& out, const GlobalOptions& g, const Json& j, const TextReport& r) {
  if (g.json) out << j.dump(2) << '\n';
  else r.render(out);
}

// ---- synth ------------------------------------------------------------------

inline int cmd_synth(const TargetOptions& t, const std::string& backend, const GlobalOptions& g,
                     std::ostream& out) {
  const Target target = load_target(t);
  const CanonicalDecomposition d = kak_decompose(target.matrix);
  Circuit c;
  Json core = Json::object();
  TextReport r;
  r.add("target", target.description);
  r.add("backend", backend);
  r.add("hx hy hz", format_number(d.params.hx) + "  " + format_number(d.params.hy) + "  " +
                        format_number(d.params.hz));
  if (backend == "swap") {
    const SwapAngles a = swap_angles(d.params);
    c = synthesize_swap(d);
    core["alpha"] = a.alpha;
    core["beta"] = a.beta;
    core["gamma"] = a.gamma;
    r.add("alpha beta gamma",
          format_number(a.alpha) + "  " + format_number(a.beta) + "  " + format_number(a.gamma));
  } else if (backend == "cnot") {
    const CnotPhaseParams q = cnot_phase_params(cnot_core_phases(d.params));
    c = synthesize_cnot(d);
    core["zeta1"] = q.zeta1;
    core["xi1"] = q.xi1;
    core["zeta2"] = q.zeta2;
    core["xi2"] = q.xi2;
    r.add("zeta1 xi1 zeta2 xi2", format_number(q.zeta1) + "  " + format_number(q.xi1) + "  " +
                                     format_number(q.zeta2) + "  " + format_number(q.xi2));
  } else {
    throw ParseError("unknown backend '" + backend + "' (use swap or cnot)");
  }
  if (g.prune) c = prune_identity_locals(c);

  const double residual = phase_distance(evaluate_circuit(c), target.matrix);
  const bool pass = residual <= g.tolerance;
  const GateCounts n = gate_counts(c);

  r.add("gate counts", counts_text(n));
  render_circuit_text(c, r);
  r.add("residual", residual);
  r.add("tolerance", g.tolerance);
  r.add("status", pass ? "PASS" : "FAIL");
  if (!g.out.empty()) {
    write_json_file(g.out, circuit_to_json(c));
    r.add("circuit written", g.out);
  }

  Json j;
  j["target"] = target.description;
  j["backend"] = backend;
  j["params"] = {{"hx", d.params.hx}, {"hy", d.params.hy}, {"hz", d.params.hz}};
  j[backend == "swap" ? "exponents" : "cnot_phase_params"] = core;
  j["gate_counts"] = counts_json(n);
  j["residual"] = residual;
  j["tolerance"] = g.tolerance;
  j["pass"] = pass;
  j["circuit"] = circuit_to_json(c);
  emit(out, g, j, r);
  return pass ? kSuccess : kVerificationFailure;
}

// ---- verify -----------------------------------------------------------------

inline int cmd_verify(const std::string& circuit_path, const TargetOptions& t,
                      const GlobalOptions& g, std::ostream& out) {
  const Circuit c = circuit_from_json(read_json_file(circuit_path));
  const Target target = load_target(t);
  const double distance = phase_distance(evaluate_circuit(c), target.matrix);
  const bool pass = distance < g.tolerance;
  TextReport r;
  r.add("circuit", circuit_path);
  r.add("target", target.description);
  r.add("gate counts", counts_text(gate_counts(c)));
  r.add("phase_distance", distance);
  r.add("tolerance", g.tolerance);
  r.add("status", pass ? "PASS" : "FAIL");
  Json j;
  j["circuit"] = circuit_path;
  j["target"] = target.description;
  j["phase_distance"] = distance;
  j["tolerance"] = g.tolerance;
  j["pass"] = pass;
  emit(out, g, j, r);
  return pass ? kSuccess : kVerificationFailure;
}

// ---- analyze ----------------------------------------------------------------

inline int cmd_ep_curve(int points, double lo, double hi, const GlobalOptions& g,
                        std::ostream& out) {
  if (points < 2) throw ParseError("--points must be at least 2");
  if (!(hi > lo)) throw ParseError("--max must exceed --min");
  TextReport r;
  r.line("alpha            E_p(closed form)   E_p(trace formula)");
  Json rows = Json::array();
  double peak_alpha = lo, peak = -1.0;
  for (int k = 0; k < points; ++k) {
    const double a = lo + (hi - lo) * k / (points - 1);
    const double closed = ep_closed_form_swap(a);
    const double exact = ep_exact(swap_pow(a));
    if (closed > peak + 1e-15) {
      peak = closed;
      peak_alpha = a;
    }
    std::ostringstream os;
    os << std::left << std::setw(16) << format_number(a, 8) << ' ' << std::setw(18)
       << format_number(closed, 12) << ' ' << format_number(exact, 12);
    r.line(os.str());
    rows.push_back({{"alpha", a}, {"ep_closed_form", closed}, {"ep_exact", exact}});
  }
  r.add("peak", "alpha = " + format_number(peak_alpha) + ", E_p = " + format_number(peak));
  Json j;
  j["curve"] = std::move(rows);
  j["peak"] = {{"alpha", peak_alpha}, {"ep", peak}};
  emit(out, g, j, r);
  return kSuccess;
}

inline int cmd_ep_matrix(const TargetOptions& t, std::int64_t samples, std::uint64_t seed,
                         const GlobalOptions& g, std::ostream& out) {
  const Target target = load_target(t);
  const double exact = ep_exact(target.matrix);
  TextReport r;
  r.add("target", target.description);
  r.add("E_p (trace formula)", exact);
  Json j;
  j["target"] = target.description;
  j["ep_exact"] = exact;
  if (samples > 0) {
    const EpEstimate e = ep_monte_carlo(target.matrix, samples, seed);
    r.add("E_p (Monte Carlo)", format_number(e.mean) + " +/- " + format_number(e.std_error, 4));
    r.add("samples, seed", std::to_string(e.samples) + ", " + std::to_string(e.seed));
    j["monte_carlo"] = {{"mean", e.mean},
                        {"std_error", e.std_error},
                        {"samples", e.samples},
                        {"seed", e.seed}};
  }
  emit(out, g, j, r);
  return kSuccess;
}

inline int cmd_appendix_a(double alpha, const GlobalOptions& g, std::ostream& out) {
  const TraceTerms closed = appendix_a_terms(alpha);
  const TraceTerms direct = trace_terms(swap_pow(alpha));
  const double ep_from_terms = 5.0 / 9.0 - (closed.direct + closed.swapped) / 36.0;
  const double r2 = std::abs(closed.direct - direct.direct);
  const double r3 = std::abs(closed.swapped - direct.swapped);
  TextReport r;
  r.add("alpha", alpha);
  r.add("term2 closed / direct", format_number(closed.direct) + " / " + format_number(direct.direct));
  r.add("term3 closed / direct",
        format_number(closed.swapped) + " / " + format_number(direct.swapped));
  r.add("residuals", format_number(r2, 3) + ", " + format_number(r3, 3));
  r.add("E_p from terms", ep_from_terms);
  r.add("E_p closed form", ep_closed_form_swap(alpha));
  Json j;
  j["alpha"] = alpha;
  j["term2"] = closed.direct;
  j["term3"] = closed.swapped;
  j["term2_direct"] = direct.direct;
  j["term3_direct"] = direct.swapped;
  j["residual_term2"] = r2;
  j["residual_term3"] = r3;
  j["ep"] = ep_from_terms;
  emit(out, g, j, r);
  return kSuccess;
}

inline int cmd_pulse(double coupling, const GlobalOptions& g, std::ostream& out) {
  const PulseSpec p{coupling, "cli"};
  const PulseResult res = heisenberg_evolution(p);
  const double dist = phase_distance(res.unitary, swap_pow(res.alpha));
  TextReport r;
  r.add("integrated coupling (J s)", coupling);
  r.add("alpha (S = sigma/2, 2 int J dt / h)", res.alpha);
  r.add("alpha (int J dt / h, Pauli S)", pauli_convention_exponent(p));
  r.add("global phase", res.global_phase);
  r.add("distance to SWAP^alpha", dist);
  Json j;
  j["integrated_coupling"] = coupling;
  j["alpha"] = res.alpha;
  j["alpha_convention"] = "spin_half: alpha = 2 * integral(J dt) / h";
  j["alpha_pauli_convention"] = pauli_convention_exponent(p);
  j["global_phase"] = res.global_phase;
  j["phase_distance"] = dist;
  emit(out, g, j, r);
  return kSuccess;
}

inline int cmd_ep_alpha(double target, const GlobalOptions& g, std::ostream& out) {
  const double a = alpha_for_entangling_power(target);
  TextReport r;
  r.add("target E_p", target);
  r.add("alpha", a);
  r.add("alpha (mirror)", 1.0 - a);
  Json j;
  j["target"] = target;
  j["alpha"] = a;
  j["alpha_mirror"] = 1.0 - a;
  emit(out, g, j, r);
  return kSuccess;
}

// ---- cost -------------------------------------------------------------------

inline Json schedule_json(const Schedule& s) {
  Json layers = Json::array();
  for (const auto& l : s.layers)
    layers.push_back({{"duration_s", l.duration},
                      {"kind", l.two_qubit ? "two_qubit" : "local"},
                      {"ops", l.ops}});
  Json j;
  j["layers"] = std::move(layers);
  j["local_layers"] = s.local_layers();
  j["two_qubit_layers"] = s.two_qubit_layers();
  j["total_time_s"] = s.total_time;
  return j;
}

inline int cmd_cost(const std::string& circuit_path, const std::string& profile_spec, bool compare,
                    const TargetOptions& t, const GlobalOptions& g, std::ostream& out) {
  const HardwareProfile p = load_profile(profile_spec);
  TextReport r;
  Json j;
  r.add("profile", p.name + " (t_pi " + format_time(p.pi_rotation_time_s) + ", SWAP " +
                       format_time(p.swap_full_time_s) + ", " +
                       policy_name(p.local_rotation_policy) + ")");
  j["profile"] = profile_to_json(p);
  if (compare) {
    const Target target = load_target(t);
    const BackendComparison cmp = compare_backends(target.matrix, p);
    r.add("target", target.description);
    j["target"] = target.description;
    Json backends = Json::array();
    for (const BackendCost* b : {&cmp.swap, &cmp.cnot, &cmp.naive}) {
      r.add(b->backend, counts_text(b->counts) + ", " +
                            std::to_string(b->schedule.local_layers()) + " local layers, total " +
                            format_time(b->schedule.total_time));
      backends.push_back({{"backend", b->backend},
                          {"gate_counts", counts_json(b->counts)},
                          {"residual", b->residual},
                          {"schedule", schedule_json(b->schedule)}});
    }
    if (!cmp.note.empty()) r.add("note", cmp.note);
    j["backends"] = std::move(backends);
    j["note"] = cmp.note;
  } else {
    if (circuit_path.empty()) throw ParseError("cost needs a circuit file or --compare");
    const Circuit c = circuit_from_json(read_json_file(circuit_path));
    const Schedule s = schedule_circuit(c, p);
    r.add("circuit", circuit_path);
    for (std::size_t i = 0; i < s.layers.size(); ++i) {
      const Layer& l = s.layers[i];
      std::string ops;
      for (auto k : l.ops) ops += (ops.empty() ? "" : ",") + std::to_string(k);
      r.add("layer " + std::to_string(i),
            std::string(l.two_qubit ? "two-qubit" : "local    ") + "  " + format_time(l.duration) +
                "  ops [" + ops + "]");
    }
    r.add("local layers", std::to_string(s.local_layers()));
    r.add("two-qubit layers", std::to_string(s.two_qubit_layers()));
    r.add("total time", format_time(s.total_time));
    j["circuit"] = circuit_path;
    j["schedule"] = schedule_json(s);
  }
  emit(out, g, j, r);
  return kSuccess;
}

// ---- random -----------------------------------------------------------------

inline int cmd_random(std::uint64_t seed, int count, const GlobalOptions& g, std::ostream& out) {
  if (count < 0) throw ParseError("--count must be non-negative");
  const std::filesystem::path dir = g.out.empty() ? std::filesystem::path(".") : std::filesystem::path(g.out);
  if (count > 0) std::filesystem::create_directories(dir);
  std::mt19937_64 rng(seed);
  Json files = Json::array();
  TextReport r;
  for (int k = 0; k < count; ++k) {
    const Matrix4 u = project_su(haar_random_unitary<4>(rng)).matrix;
    char name[64];
    std::snprintf(name, sizeof name, "haar_%llu_%04d.json", static_cast<unsigned long long>(seed), k);
    const std::string path = (dir / name).string();
    write_json_file(path, matrix_to_json(u));
    files.push_back(path);
    r.add("wrote", path);
  }
  r.add("count", std::to_string(count));
  Json j;
  j["seed"] = seed;
  j["files"] = std::move(files);
  emit(out, g, j, r);
  return kSuccess;
}

// ---- dispatch ---------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"swapsynth: two-qubit synthesis with (SWAP)^alpha and CNOT gates"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--out", g.out, "output file (synth) or directory (random)");
  app.add_flag("--json", g.json, "print the report as JSON");
  app.add_option("--tolerance", g.tolerance, "verification gate on phase_distance")
      ->check(CLI::PositiveNumber);
  app.add_flag("--prune", g.prune, "drop single-qubit gates equal to identity up to phase");

  TargetOptions synth_target, verify_target, ep_target, cost_target;
  std::string backend = "swap";
  auto* synth = app.add_subcommand("synth", "decompose a target and emit a circuit");
  add_target_options(synth, synth_target, true);
  synth->add_option("--backend", backend, "swap or cnot")
      ->check(CLI::IsMember({"swap", "cnot"}));

  std::string verify_circuit;
  auto* verify = app.add_subcommand("verify", "check a circuit file against a target");
  verify->add_option("circuit", verify_circuit, "circuit JSON file")->required();
  add_target_options(verify, verify_target, true);

  auto* analyze = app.add_subcommand("analyze", "entangling power and pulse analytics");
  analyze->require_subcommand(1);
  int points = 21;
  double lo = 0.0, hi = 1.0;
  auto* curve = analyze->add_subcommand("ep-curve", "E_p of (SWAP)^alpha over an alpha grid");
  curve->add_option("--points", points, "grid points");
  curve->add_option("--min", lo, "first alpha");
  curve->add_option("--max", hi, "last alpha");
  std::int64_t samples = 0;
  std::uint64_t seed = 1;
  auto* epm = analyze->add_subcommand("ep-matrix", "entangling power of a target");
  add_target_options(epm, ep_target, true);
  epm->add_option("--samples", samples, "Monte Carlo samples (0 = skip)");
  epm->add_option("--seed", seed, "Monte Carlo seed");
  double alpha = 0.0;
  auto* appa = analyze->add_subcommand("appendix-a", "trace terms of E_p for (SWAP)^alpha");
  appa->add_option("--alpha", alpha, "exponent")->required();
  double coupling = 0.0;
  auto* pulse = analyze->add_subcommand("pulse", "Heisenberg pulse to (SWAP)^alpha");
  pulse->add_option("--coupling", coupling, "integrated exchange coupling, J s")->required();
  double ep_target_value = 0.0;
  auto* epa = analyze->add_subcommand("ep-alpha", "exponent with a given E_p");
  epa->add_option("--target", ep_target_value, "E_p in [0, 1/6]")->required();

  std::string cost_circuit, profile = "gaas";
  bool compare = false;
  auto* cost = app.add_subcommand("cost", "schedule a circuit on a hardware profile");
  cost->add_option("circuit", cost_circuit, "circuit JSON file");
  cost->add_option("--profile", profile, "gaas, si or a profile JSON file");
  cost->add_flag("--compare", compare, "compare swap, cnot and naive backends on a target");
  add_target_options(cost, cost_target, false);

  int count = 1;
  std::uint64_t random_seed = 0;
  auto* random = app.add_subcommand("random", "write Haar-random SU(4) matrix files");
  random->add_option("--seed", random_seed, "seed");
  random->add_option("--count", count, "number of files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*synth) return cmd_synth(synth_target, backend, g, out);
    if (*verify) return cmd_verify(verify_circuit, verify_target, g, out);
    if (*curve) return cmd_ep_curve(points, lo, hi, g, out);
    if (*epm) return cmd_ep_matrix(ep_target, samples, seed, g, out);
    if (*appa) return cmd_appendix_a(alpha, g, out);
    if (*pulse) return cmd_pulse(coupling, g, out);
    if (*epa) return cmd_ep_alpha(ep_target_value, g, out);
    if (*cost) return cmd_cost(cost_circuit, profile, compare, cost_target, g, out);
    if (*random) return cmd_random(random_seed, count, g, out);
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace swapsynth::cli
