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

// Named gates, fractional SWAP and the Heisenberg exchange pulse.

#include <cmath>
#include <string>
#include <string_view>
#include <variant>

#include "swapsynth/errors.hpp"
#include "swapsynth/linalg.hpp"

namespace swapsynth {

// Planck constant, J s (exact SI value).
inline constexpr double kPlanck = 6.62607015e-34;
inline constexpr double kHbar = kPlanck / (2.0 * kPi);

// (SWAP)^alpha: identity on the triplet, e^{i pi alpha} on the singlet.
inline Matrix4 swap_pow(double alpha) {
  const Complex e = std::polar(1.0, kPi * alpha);
  const Complex p = (1.0 + e) / 2.0;
  const Complex m = (1.0 - e) / 2.0;
  return {{1.0, 0.0, 0.0, 0.0}, {0.0, p, m, 0.0}, {0.0, m, p, 0.0}, {0.0, 0.0, 0.0, 1.0}};
}

// Reduce a SWAP exponent into [0, 2).
inline double reduce_exponent(double alpha) {
  double r = std::fmod(alpha, 2.0);
  if (r < 0.0) r += 2.0;
  if (r >= 2.0) r = 0.0;
  return r;
}

// exp(-i zeta sigma_z) = diag(e^{-i zeta}, e^{i zeta}).
inline Matrix2 rz(double zeta) {
  return Matrix2::diagonal({std::polar(1.0, -zeta), std::polar(1.0, zeta)});
}

struct PulseSpec {
  double integrated_coupling = 0.0;  // integral of J(t) dt, J s; negative runs the evolution backwards
  std::string label;
};

struct PulseResult {
  Matrix4 unitary;      // exp(-(i/hbar) S1.S2 integral J dt), S = sigma/2
  double alpha;         // exponent in [0, 2): unitary = e^{i global_phase} (SWAP)^alpha
  double global_phase;  // radians
};

// Exponent under the spin-1/2 convention used by heisenberg_evolution:
// alpha = 2 integral J dt / h.
inline double spin_half_exponent(const PulseSpec& p) {
  return 2.0 * p.integrated_coupling / kPlanck;
}

// The alternative scalar mapping alpha = integral J dt / h, which treats S as
// bare Pauli matrices. Reported alongside, not used for the gate.
inline double pauli_convention_exponent(const PulseSpec& p) {
  return p.integrated_coupling / kPlanck;
}

// Exchange evolution built from its Bell-basis spectrum: S1.S2 is +1/4 on
// the triplet and -3/4 on the singlet. The exponent and phase are then read
// back from the singlet/triplet diagonal elements of the computed matrix.
inline PulseResult heisenberg_evolution(const PulseSpec& p) {
  if (!std::isfinite(p.integrated_coupling))
    throw ContractError("heisenberg_evolution: integrated coupling is not finite");
  const double action = p.integrated_coupling / kHbar;
  const Complex triplet = std::polar(1.0, -0.25 * action);
  const Complex singlet = std::polar(1.0, 0.75 * action);
  PulseResult r;
  r.unitary = bell_diagonal({triplet, triplet, triplet, singlet});

  const auto phi = bell_state(Bell::phi_plus);
  const auto psi = bell_state(Bell::psi_minus);
  const Complex t = inner(phi, r.unitary * phi);
  const Complex s = inner(psi, r.unitary * psi);
  r.global_phase = principal_arg(t);
  double rel = std::arg(s / t);
  if (rel < 0.0) rel += 2.0 * kPi;
  r.alpha = reduce_exponent(rel / kPi);
  return r;
}

inline Matrix2 hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {{s, s}, {s, -s}};
}

// CNOT with control on qubit `control` (1 or 2).
inline Matrix4 cnot(int control = 1) {
  if (control == 1)
    return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
  if (control == 2)
    return {{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}};
  throw ContractError("cnot: control must be qubit 1 or 2");
}

using NamedGate = std::variant<Matrix2, Matrix4>;

// Lowercase gate names: cnot, cz, swap, identity2, identity4, x, y, z,
// hadamard.
inline NamedGate named_gate(std::string_view name) {
  if (name == "cnot") return cnot(1);
  if (name == "cz") return Matrix4::diagonal({1.0, 1.0, 1.0, -1.0});
  if (name == "swap") return swap_pow(1.0);
  if (name == "identity4") return Matrix4::identity();
  if (name == "identity2") return Matrix2::identity();
  if (name == "x") return sigma_x();
  if (name == "y") return sigma_y();
  if (name == "z") return sigma_z();
  if (name == "hadamard") return hadamard();
  throw ParseError("unknown gate name '" + std::string(name) + "'");
}

// Two-qubit named gate; single-qubit names are rejected.
inline Matrix4 named_gate4(std::string_view name) {
  auto g = named_gate(name);
  if (auto* m = std::get_if<Matrix4>(&g)) return *m;
  throw ParseError("gate '" + std::string(name) + "' is a single-qubit gate");
}

inline constexpr std::array<std::string_view, 9> kGateNames = {
    "cnot", "cz", "swap", "identity2", "identity4", "x", "y", "z", "hadamard"};

}  // namespace swapsynth
