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

// Gate-level circuit IR shared by the synthesis backends, the cost model and
// the JSON layer. Ops are stored in application order (first op acts first).

#include <cmath>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "swapsynth/errors.hpp"
#include "swapsynth/gates.hpp"
#include "swapsynth/linalg.hpp"

namespace swapsynth {

struct LocalOp {
  int qubit = 1;  // 1 or 2
  Matrix2 matrix = Matrix2::identity();
  std::string label;
};

struct SwapPowOp {
  double alpha = 0.0;
};

struct CnotOp {
  int control = 1;  // target is the other qubit
};

using GateOp = std::variant<LocalOp, SwapPowOp, CnotOp>;

struct Circuit {
  std::vector<GateOp> ops;
  double global_phase = 0.0;  // radians
};

struct GateCounts {
  int swaps = 0;
  int cnots = 0;
  int locals = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

// Bitmask of touched qubits: bit 0 is qubit 1, bit 1 is qubit 2.
inline unsigned qubit_mask(const GateOp& op) {
  if (const auto* l = std::get_if<LocalOp>(&op)) return l->qubit == 1 ? 1u : 2u;
  return 3u;
}

inline void validate_op(const GateOp& op) {
  std::visit(
      [](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, LocalOp>) {
          if (g.qubit != 1 && g.qubit != 2) throw ContractError("local op qubit must be 1 or 2");
          require_unitary(g.matrix, "local op");
        } else if constexpr (std::is_same_v<T, SwapPowOp>) {
          if (!std::isfinite(g.alpha)) throw ContractError("swap_pow exponent is not finite");
        } else {
          if (g.control != 1 && g.control != 2) throw ContractError("cnot control must be 1 or 2");
        }
      },
      op);
}

inline void validate_circuit(const Circuit& c) {
  if (!std::isfinite(c.global_phase)) throw ContractError("circuit global phase is not finite");
  for (const auto& op : c.ops) validate_op(op);
}

inline Matrix4 embed_local(int qubit, const Matrix2& m) {
  return qubit == 1 ? tensor_product(m, Matrix2::identity())
                    : tensor_product(Matrix2::identity(), m);
}

inline Matrix4 op_matrix(const GateOp& op) {
  return std::visit(
      [](const auto& g) -> Matrix4 {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, LocalOp>) {
          return embed_local(g.qubit, g.matrix);
        } else if constexpr (std::is_same_v<T, SwapPowOp>) {
          return swap_pow(g.alpha);
        } else {
          return cnot(g.control);
        }
      },
      op);
}

inline Matrix4 evaluate_circuit(const Circuit& c) {
  validate_circuit(c);
  Matrix4 u = Matrix4::identity();
  for (const auto& op : c.ops) u = op_matrix(op) * u;
  return std::polar(1.0, c.global_phase) * u;
}

inline GateCounts gate_counts(const Circuit& c) {
  GateCounts n;
  for (const auto& op : c.ops) {
    if (std::holds_alternative<LocalOp>(op)) ++n.locals;
    else if (std::holds_alternative<SwapPowOp>(op)) ++n.swaps;
    else ++n.cnots;
  }
  return n;
}

// Drops locals that equal the identity up to a phase (max-entry tolerance
// `tol`), folding the dropped phases into the circuit's global phase.
inline Circuit prune_identity_locals(const Circuit& c, double tol = kExactTolerance) {
  Circuit out;
  out.global_phase = c.global_phase;
  for (const auto& op : c.ops) {
    if (const auto* l = std::get_if<LocalOp>(&op)) {
      const Complex t = l->matrix.trace();
      if (std::abs(t) > 1.0) {
        const Complex ph = t / std::abs(t);
        if (max_abs_diff(l->matrix, Matrix2::identity() * ph) <= tol) {
          out.global_phase += std::arg(ph);
          continue;
        }
      }
    }
    out.ops.push_back(op);
  }
  out.global_phase = wrap_angle(out.global_phase);
  return out;
}

}  // namespace swapsynth
