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

// Wall-clock estimates for synthesized circuits on spin-qubit hardware.
//
// Scheduling is greedy, left to right: consecutive single-qubit gates on
// different qubits share a layer, every two-qubit gate gets a layer of its
// own. A layer lasts as long as its slowest gate.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "swapsynth/circuit.hpp"
#include "swapsynth/errors.hpp"
#include "swapsynth/gates.hpp"
#include "swapsynth/synthesis.hpp"

namespace swapsynth {

enum class LocalRotationPolicy { fixed_pi, proportional };

struct HardwareProfile {
  std::string name;
  double rabi_frequency_hz = 0.0;  // 0 when unknown
  double pi_rotation_time_s = 0.0;
  double swap_full_time_s = 0.0;   // full SWAP, alpha = 1
  LocalRotationPolicy local_rotation_policy = LocalRotationPolicy::fixed_pi;

  // t_pi = 1 / (2 f_Rabi), within 10%.
  bool rabi_consistent(double rel_tol = 0.10) const {
    if (rabi_frequency_hz <= 0.0) return true;
    const double expected = 1.0 / (2.0 * rabi_frequency_hz);
    return std::abs(pi_rotation_time_s - expected) <= rel_tol * expected;
  }

  void validate() const {
    if (!(pi_rotation_time_s > 0.0) || !(swap_full_time_s > 0.0) || !(rabi_frequency_hz >= 0.0) ||
        !std::isfinite(pi_rotation_time_s) || !std::isfinite(swap_full_time_s) ||
        !std::isfinite(rabi_frequency_hz))
      throw ContractError("hardware profile '" + name + "': times must be positive and finite");
    if (!rabi_consistent()) {
      std::ostringstream os;
      os << "hardware profile '" << name << "': pi rotation time " << pi_rotation_time_s
         << " s is not within 10% of 1/(2 f_Rabi) = " << 1.0 / (2.0 * rabi_frequency_hz) << " s";
      throw ContractError(os.str());
    }
  }
};

// GaAs and Si electron spins at a 1 mT resonant field; exchange J ~ 0.1 meV.
inline HardwareProfile builtin_profile(std::string_view name) {
  if (name == "gaas") return {"gaas", 6.2e6, 80e-9, 50e-12, LocalRotationPolicy::fixed_pi};
  if (name == "si") return {"si", 28e6, 18e-9, 50e-12, LocalRotationPolicy::fixed_pi};
  throw ParseError("unknown hardware profile '" + std::string(name) + "'");
}

// Bloch-sphere rotation angle of a single-qubit gate, ignoring global phase.
inline double rotation_angle(const Matrix2& u) {
  const Complex root = std::sqrt(determinant(u));
  const double half_cos = std::abs(u.trace() / root) / 2.0;
  return 2.0 * std::acos(std::clamp(half_cos, 0.0, 1.0));
}

inline double op_duration(const GateOp& op, const HardwareProfile& p) {
  if (const auto* l = std::get_if<LocalOp>(&op)) {
    if (p.local_rotation_policy == LocalRotationPolicy::fixed_pi) return p.pi_rotation_time_s;
    return p.pi_rotation_time_s * rotation_angle(l->matrix) / kPi;
  }
  if (const auto* s = std::get_if<SwapPowOp>(&op)) {
    const double r = reduce_exponent(s->alpha);
    return p.swap_full_time_s * std::min(1.0, std::min(r, 2.0 - r));
  }
  // A CNOT is taken to cost as much as a full SWAP pulse.
  return p.swap_full_time_s;
}

struct Layer {
  double duration = 0.0;
  std::vector<std::size_t> ops;  // indices into Circuit::ops
  bool two_qubit = false;
};

struct Schedule {
  std::vector<Layer> layers;
  double total_time = 0.0;

  int local_layers() const {
    return static_cast<int>(std::count_if(layers.begin(), layers.end(),
                                          [](const Layer& l) { return !l.two_qubit; }));
  }
  int two_qubit_layers() const { return static_cast<int>(layers.size()) - local_layers(); }
};

inline Schedule schedule_circuit(const Circuit& c, const HardwareProfile& p) {
  validate_circuit(c);
  p.validate();
  Schedule s;
  unsigned open_mask = 0;  // qubits used by the trailing local layer
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const GateOp& op = c.ops[i];
    const unsigned mask = qubit_mask(op);
    const double d = op_duration(op, p);
    const bool two = mask == 3u;
    const bool joins = !two && !s.layers.empty() && !s.layers.back().two_qubit &&
                       (open_mask & mask) == 0u;
    if (joins) {
      s.layers.back().ops.push_back(i);
      s.layers.back().duration = std::max(s.layers.back().duration, d);
      open_mask |= mask;
    } else {
      s.layers.push_back(Layer{d, {i}, two});
      open_mask = two ? 0u : mask;
    }
  }
  for (const auto& l : s.layers) s.total_time += l.duration;
  return s;
}

struct BackendCost {
  std::string backend;
  Circuit circuit;
  GateCounts counts;
  Schedule schedule;
  double residual = 0.0;  // phase_distance to the target
};

struct BackendComparison {
  BackendCost swap;
  BackendCost cnot;
  BackendCost naive;  // CNOT backend with each CNOT replaced by two sqrt(SWAP)
  std::string note;
};

inline BackendCost cost_backend(std::string name, Circuit c, const Matrix4& target,
                                const HardwareProfile& p) {
  BackendCost b;
  b.backend = std::move(name);
  b.counts = gate_counts(c);
  b.schedule = schedule_circuit(c, p);
  b.residual = phase_distance(evaluate_circuit(c), target);
  if (b.residual > kReconstructionTolerance) {
    std::ostringstream os;
    os << "compare_backends: " << b.backend << " circuit misses the target (residual "
       << b.residual << ")";
    throw NumericalError(os.str());
  }
  b.circuit = std::move(c);
  return b;
}

inline BackendComparison compare_backends(const Matrix4& u, const HardwareProfile& p) {
  const CanonicalDecomposition d = kak_decompose(u);
  BackendComparison r;
  r.swap = cost_backend("swap", synthesize_swap(d), u, p);
  Circuit cn = synthesize_cnot(d);
  r.naive = cost_backend("naive", substitute_cnots_with_sqrt_swaps(cn), u, p);
  r.cnot = cost_backend("cnot", std::move(cn), u, p);
  const int layers = r.swap.schedule.local_layers();
  if (layers > 3) {
    std::ostringstream os;
    os << "swap backend schedules " << layers
       << " sequential single-qubit layers (front pair, X, Z, back pair), not three";
    r.note = os.str();
  }
  return r;
}

}  // namespace swapsynth
