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

// Circuit synthesis for two-qubit unitaries.
//
// Swap backend: three (SWAP)^alpha pulses with fixed Pauli gates in between
// and six single-qubit gates in total:
//
//   exp(-iH) = e^{i(hz-hx-hy)} (Z (x) X) S^gamma (Z (x) I) S^beta (I (x) X) S^alpha
//   alpha = 2(hx+hy)/pi,  beta = 2(hx-hz)/pi,  gamma = 2(hy-hz)/pi
//
// CNOT backend: three CNOTs around z-rotations that imprint Bell phases,
//
//   CNOT (W (x) I)(Rz(zeta2) (x) Rz(xi2)) CNOT (Rz(zeta1) (x) Rz(xi1))(W (x) I) CNOT
//
// with Rz(t) = exp(-i t Z). That core exchanges |Phi-> and |Psi->; the swap is
// a fixed local gate times Bell phases, absorbed by the back locals.

#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "swapsynth/canonical.hpp"
#include "swapsynth/circuit.hpp"
#include "swapsynth/errors.hpp"
#include "swapsynth/gates.hpp"
#include "swapsynth/linalg.hpp"

namespace swapsynth {

struct SwapAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct CnotPhaseParams {
  double zeta1 = 0.0;
  double xi1 = 0.0;
  double zeta2 = 0.0;
  double xi2 = 0.0;
};

namespace detail {

inline void require_chamber(const CanonicalParams& p, const char* what) {
  if (!std::isfinite(p.hx) || !std::isfinite(p.hy) || !std::isfinite(p.hz) ||
      !p.in_weyl_chamber(kExactTolerance)) {
    std::ostringstream os;
    os << what << ": parameters (" << p.hx << ", " << p.hy << ", " << p.hz
       << ") are outside the Weyl chamber pi/4 >= hx >= hy >= |hz|";
    throw ContractError(os.str());
  }
}

}  // namespace detail

inline SwapAngles swap_angles(const CanonicalParams& p) {
  detail::require_chamber(p, "swap_angles");
  return {2.0 * (p.hx + p.hy) / kPi, 2.0 * (p.hx - p.hz) / kPi, 2.0 * (p.hy - p.hz) / kPi};
}

// exp(-iH) as S^alpha, X on q2, S^beta, Z on q1, S^gamma, Z on q1, X on q2.
inline Circuit build_core_swap_circuit(const CanonicalParams& p) {
  const SwapAngles a = swap_angles(p);
  Circuit c;
  c.ops = {SwapPowOp{a.alpha}, LocalOp{2, sigma_x(), "X"},  SwapPowOp{a.beta},
           LocalOp{1, sigma_z(), "Z"}, SwapPowOp{a.gamma}, LocalOp{1, sigma_z(), "Z"},
           LocalOp{2, sigma_x(), "X"}};
  c.global_phase = p.hz - p.hx - p.hy;
  return c;
}

// Full swap-backend circuit; the trailing Z and X of the core are merged
// into the back locals, leaving 3 swap_pow ops and 6 locals.
inline Circuit synthesize_swap(const CanonicalDecomposition& d) {
  const SwapAngles a = swap_angles(d.params);
  Circuit c;
  c.ops = {LocalOp{1, d.front.first, "u1"},
           LocalOp{2, d.front.second, "v1"},
           SwapPowOp{a.alpha},
           LocalOp{2, sigma_x(), "X"},
           SwapPowOp{a.beta},
           LocalOp{1, sigma_z(), "Z"},
           SwapPowOp{a.gamma},
           LocalOp{1, d.back.first * sigma_z(), "u4'·Z"},
           LocalOp{2, d.back.second * sigma_x(), "v4'·X"}};
  c.global_phase = wrap_angle(d.global_phase + d.params.hz - d.params.hx - d.params.hy);
  return c;
}

inline Circuit synthesize_swap(const Matrix4& u) { return synthesize_swap(kak_decompose(u)); }

// Solves the Bell-phase map of the CNOT core in the gauge zeta1 = zeta2 with
// a symmetric split of the xi's.
inline CnotPhaseParams cnot_phase_params(const BellPhases& l) {
  if (!(std::abs(l.sum()) <= 1e-9)) {
    std::ostringstream os;
    os << "cnot_phase_params: Bell phases must sum to zero (sum " << l.sum() << ")";
    throw ContractError(os.str());
  }
  const double zeta = (l.l00 + l.l01) / 4.0;
  const double xi_sum = (l.l00 - l.l01) / 2.0;
  const double xi_diff = (l.l10 - l.l11) / 2.0;  // xi2 - xi1
  return {zeta, (xi_sum - xi_diff) / 2.0, zeta, (xi_sum + xi_diff) / 2.0};
}

// Bell phases imprinted by the core: |Phi+> and |Psi+> keep their slot,
// |Phi-> and |Psi-> are exchanged, and the phase on each output Bell state
// is e^{-i lambda_b}.
inline Circuit build_core_cnot_circuit(const CnotPhaseParams& q) {
  const Matrix2 w = hadamard();
  Circuit c;
  c.ops = {CnotOp{1},
           LocalOp{1, rz(q.zeta1) * w, "Rz(zeta1)·W"},
           LocalOp{2, rz(q.xi1), "Rz(xi1)"},
           CnotOp{1},
           LocalOp{1, w * rz(q.zeta2), "W·Rz(zeta2)"},
           LocalOp{2, rz(q.xi2), "Rz(xi2)"},
           CnotOp{1}};
  return c;
}

// Local gate exp(i pi/4 X) (x) exp(-i pi/4 X). Maps |Phi-> -> -i|Psi->,
// |Psi-> -> -i|Phi-> and fixes |Phi+>, |Psi+>.
inline LocalPair bell_exchange_local() {
  const double s = 1.0 / std::numbers::sqrt2;
  const Matrix2 plus = {{s, kI * s}, {kI * s, s}};
  const Matrix2 minus = {{s, -kI * s}, {-kI * s, s}};
  return {plus, minus};
}

// Core Bell phases that, together with bell_exchange_local(), realise
// exp(-iH) for the target parameters:
//   core = e^{i pi/4} L exp(-iH).
inline BellPhases cnot_core_phases(const CanonicalParams& p) {
  const BellPhases t = lambdas(p);
  return {t.l00 - kPi / 4, t.l01 - kPi / 4, t.l11 + kPi / 4, t.l10 + kPi / 4};
}

inline Circuit synthesize_cnot(const CanonicalDecomposition& d) {
  const CnotPhaseParams q = cnot_phase_params(cnot_core_phases(d.params));
  const LocalPair fix = bell_exchange_local();
  Circuit core = build_core_cnot_circuit(q);
  Circuit c;
  c.ops.reserve(11);
  c.ops.push_back(LocalOp{1, d.front.first, "u1"});
  c.ops.push_back(LocalOp{2, d.front.second, "v1"});
  for (auto& op : core.ops) c.ops.push_back(std::move(op));
  c.ops.push_back(LocalOp{1, d.back.first * fix.first.adjoint(), "u4'·L1^dagger"});
  c.ops.push_back(LocalOp{2, d.back.second * fix.second.adjoint(), "v4'·L2^dagger"});
  c.global_phase = wrap_angle(d.global_phase - kPi / 4);
  return c;
}

inline Circuit synthesize_cnot(const Matrix4& u) { return synthesize_cnot(kak_decompose(u)); }

// CNOT with the given control as two sqrt(SWAP) pulses and z-rotations:
// H on the target, S^{1/2}, Rz(-pi/2) on the control, S^{1/2}, then
// Rz(-3pi/4) on the control and H Rz(-pi/4) on the target. Returns the ops
// and the phase e^{i phase} needed for exact equality with CNOT.
struct GateSequence {
  std::vector<GateOp> ops;
  double phase = 0.0;
};

inline GateSequence cnot_as_sqrt_swaps(int control) {
  if (control != 1 && control != 2) throw ContractError("cnot control must be 1 or 2");
  const int target = 3 - control;
  const Matrix2 h = hadamard();
  GateSequence s;
  s.ops = {LocalOp{control, Matrix2::identity(), "I"},
           LocalOp{target, h, "H"},
           SwapPowOp{0.5},
           LocalOp{control, rz(-kPi / 2), "Rz(-pi/2)"},
           SwapPowOp{0.5},
           LocalOp{control, rz(-3 * kPi / 4), "Rz(-3pi/4)"},
           LocalOp{target, h * rz(-kPi / 4), "H·Rz(-pi/4)"}};
  Circuit probe{s.ops, 0.0};
  const Matrix4 got = evaluate_circuit(probe);
  const Matrix4 want = cnot(control);
  Complex overlap{};
  for (std::size_t i = 0; i < 16; ++i) overlap += std::conj(got.data()[i]) * want.data()[i];
  s.phase = std::arg(overlap);
  if (max_abs_diff(std::polar(1.0, s.phase) * got, want) > kExactTolerance)
    throw NumericalError("cnot_as_sqrt_swaps: sqrt(SWAP) block does not reproduce CNOT");
  return s;
}

// Replaces every CNOT by its two-sqrt(SWAP) block.
inline Circuit substitute_cnots_with_sqrt_swaps(const Circuit& c) {
  Circuit out;
  out.global_phase = c.global_phase;
  for (const auto& op : c.ops) {
    if (const auto* g = std::get_if<CnotOp>(&op)) {
      auto block = cnot_as_sqrt_swaps(g->control);
      for (auto& b : block.ops) out.ops.push_back(std::move(b));
      out.global_phase += block.phase;
    } else {
      out.ops.push_back(op);
    }
  }
  out.global_phase = wrap_angle(out.global_phase);
  return out;
}

}  // namespace swapsynth
