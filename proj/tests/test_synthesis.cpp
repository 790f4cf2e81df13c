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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "swapsynth/synthesis.hpp"

namespace swapsynth {
namespace {

CanonicalParams random_chamber_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double hx = kPi / 4 * u(rng);
  const double hy = hx * u(rng);
  return {hx, hy, hy * (2.0 * u(rng) - 1.0)};
}

TEST(SwapBackend, NamedGateExponents) {
  const SwapAngles c = swap_angles(kak_decompose(cnot()).params);
  EXPECT_NEAR(c.alpha, 0.5, 1e-9);
  EXPECT_NEAR(c.beta, 0.5, 1e-9);
  EXPECT_NEAR(c.gamma, 0.0, 1e-9);
  const SwapAngles s = swap_angles(kak_decompose(named_gate4("swap")).params);
  EXPECT_NEAR(s.alpha, 1.0, 1e-9);
  EXPECT_NEAR(s.beta, 0.0, 1e-9);
  EXPECT_NEAR(s.gamma, 0.0, 1e-9);
}

TEST(SwapBackend, ExponentRanges) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const SwapAngles a = swap_angles(random_chamber_point(rng));
    EXPECT_GE(a.alpha, -1e-12);
    EXPECT_LE(a.alpha, 1.0 + 1e-12);
    EXPECT_GE(a.beta, -1e-12);
    EXPECT_LE(a.beta, 1.0 + 1e-12);
    EXPECT_GE(a.gamma, -1e-12);
    EXPECT_LE(a.gamma, a.beta + 1e-12);
  }
}

TEST(SwapBackend, RejectsParamsOutsideChamber) {
  EXPECT_THROW(swap_angles({0.1, 0.2, 0.0}), ContractError);
  EXPECT_THROW(swap_angles({1.0, 0.2, 0.0}), ContractError);
  EXPECT_THROW(swap_angles({0.3, 0.2, 0.25}), ContractError);
}

TEST(SwapBackend, CoreIdentityAgainstPauliExponential) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 500; ++k) {
    const CanonicalParams p = random_chamber_point(rng);
    const Matrix4 got = evaluate_circuit(build_core_swap_circuit(p));
    EXPECT_LT(max_abs_diff(got, oracle::exp_minus_i_interaction(p.hx, p.hy, p.hz)), 1e-12);
  }
}

TEST(SwapBackend, RoundTripAndShape) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    const Matrix4 u = haar_random_unitary<4>(rng);
    const Circuit c = synthesize_swap(u);
    const GateCounts n = gate_counts(c);
    EXPECT_EQ(n.swaps, 3);
    EXPECT_EQ(n.locals, 6);
    EXPECT_EQ(n.cnots, 0);
    EXPECT_LT(max_abs_diff(evaluate_circuit(c), u), 1e-12);
  }
}

TEST(CnotBackend, PhaseParamsSolveTheBellMap) {
  // Core phase on output Bell state b: zeta1 + zeta2 plus or minus the xi's.
  const BellPhases l{0.4, -0.1, 0.5, -0.8};
  const CnotPhaseParams q = cnot_phase_params(l);
  EXPECT_NEAR(q.zeta1 + q.zeta2 + q.xi1 + q.xi2, l.l00, 1e-15);
  EXPECT_NEAR(q.zeta1 + q.zeta2 - q.xi1 - q.xi2, l.l01, 1e-15);
  EXPECT_NEAR(-q.zeta1 - q.zeta2 - q.xi1 + q.xi2, l.l10, 1e-15);
  EXPECT_NEAR(-q.zeta1 - q.zeta2 + q.xi1 - q.xi2, l.l11, 1e-15);
}

TEST(CnotBackend, PhaseParamsGauge) {
  const CnotPhaseParams q = cnot_phase_params({kPi / 4, kPi / 4, -kPi / 4, -kPi / 4});
  EXPECT_NEAR(q.zeta1, kPi / 8, 1e-15);
  EXPECT_NEAR(q.zeta2, kPi / 8, 1e-15);
  EXPECT_NEAR(q.xi1, 0.0, 1e-15);
  EXPECT_NEAR(q.xi2, 0.0, 1e-15);
  EXPECT_THROW(cnot_phase_params({0.1, 0.0, 0.0, 0.0}), ContractError);
}

TEST(CnotBackend, CoreExchangesPhiMinusAndPsiMinus) {
  // Applied to Bell vectors, the core maps b to e^{-i lambda} b' with
  // Phi- <-> Psi- and Phi+, Psi+ fixed.
  std::mt19937_64 rng(4);
  const auto bell = oracle::bell_vectors();
  const std::array<std::size_t, 4> image = {0, 1, 3, 2};
  for (int k = 0; k < 100; ++k) {
    const BellPhases l = lambdas(random_chamber_point(rng));
    const Matrix4 core = evaluate_circuit(build_core_cnot_circuit(cnot_phase_params(l)));
    // The overall phase is fixed by Phi+.
    const Complex ref = inner(bell[0], core * bell[0]) / std::polar(1.0, -l.l00);
    const auto la = l.as_array();
    for (std::size_t b = 0; b < 4; ++b) {
      const Vector4 out = core * bell[b];
      const Complex amp = inner(bell[image[b]], out);
      EXPECT_NEAR(std::abs(amp), 1.0, 1e-12);
      EXPECT_LT(std::abs(amp / ref - std::polar(1.0, -la[image[b]])), 1e-12) << "bell " << b;
    }
  }
}

TEST(CnotBackend, BellExchangeLocal) {
  const Matrix4 l = bell_exchange_local().tensor();
  const auto bell = oracle::bell_vectors();
  const Complex mi{0.0, -1.0};
  EXPECT_LT(std::abs(inner(bell[0], l * bell[0]) - 1.0), 1e-15);
  EXPECT_LT(std::abs(inner(bell[1], l * bell[1]) - 1.0), 1e-15);
  EXPECT_LT(std::abs(inner(bell[3], l * bell[2]) - mi), 1e-15);
  EXPECT_LT(std::abs(inner(bell[2], l * bell[3]) - mi), 1e-15);
}

TEST(CnotBackend, RoundTripAndShape) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const Matrix4 u = haar_random_unitary<4>(rng);
    const Circuit c = synthesize_cnot(u);
    const GateCounts n = gate_counts(c);
    EXPECT_EQ(n.cnots, 3);
    EXPECT_LE(n.locals, 8);
    EXPECT_EQ(n.swaps, 0);
    EXPECT_LT(max_abs_diff(evaluate_circuit(c), u), 1e-12);
  }
}

TEST(NaiveSubstitution, SqrtSwapBlockIsCnot) {
  for (int control : {1, 2}) {
    const GateSequence s = cnot_as_sqrt_swaps(control);
    const Matrix4 got = std::polar(1.0, s.phase) * evaluate_circuit(Circuit{s.ops, 0.0});
    EXPECT_LT(max_abs_diff(got, cnot(control)), 1e-14);
    int swaps = 0;
    for (const auto& op : s.ops) swaps += std::holds_alternative<SwapPowOp>(op);
    EXPECT_EQ(swaps, 2);
  }
}

TEST(NaiveSubstitution, PreservesTheUnitary) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 50; ++k) {
    const Matrix4 u = haar_random_unitary<4>(rng);
    const Circuit naive = substitute_cnots_with_sqrt_swaps(synthesize_cnot(u));
    EXPECT_EQ(gate_counts(naive).swaps, 6);
    EXPECT_EQ(gate_counts(naive).cnots, 0);
    EXPECT_LT(max_abs_diff(evaluate_circuit(naive), u), 1e-12);
  }
}

TEST(Circuit, PruneKeepsTheUnitary) {
  const Matrix4 u = haar_random_unitary<4>(7);
  Circuit c;
  c.ops = {LocalOp{1, std::polar(1.0, 0.7) * Matrix2::identity(), "phase"}, SwapPowOp{0.3},
           LocalOp{2, sigma_x(), "X"}, LocalOp{2, Matrix2::identity(), "I"}};
  const Circuit pruned = prune_identity_locals(c);
  EXPECT_EQ(gate_counts(pruned).locals, 1);
  EXPECT_LT(max_abs_diff(evaluate_circuit(pruned), evaluate_circuit(c)), 1e-12);
  const Circuit r = synthesize_swap(u);
  EXPECT_LT(max_abs_diff(evaluate_circuit(prune_identity_locals(r)), u), 1e-12);
}

TEST(Circuit, ValidationRejectsBadOps) {
  EXPECT_THROW(validate_op(LocalOp{3, Matrix2::identity(), ""}), ContractError);
  EXPECT_THROW(validate_op(CnotOp{0}), ContractError);
  EXPECT_THROW(validate_op(SwapPowOp{std::nan("")}), ContractError);
  Matrix2 bad = Matrix2::identity();
  bad(0, 0) = 2.0;
  EXPECT_THROW(validate_op(LocalOp{1, bad, ""}), ContractError);
}

TEST(Circuit, EmbedLocalOrdersQubits) {
  const Matrix4 x1 = embed_local(1, sigma_x());
  EXPECT_EQ(max_abs_diff(x1, oracle::kron(sigma_x(), Matrix2::identity())), 0.0);
  const Matrix4 x2 = embed_local(2, sigma_x());
  EXPECT_EQ(max_abs_diff(x2, oracle::kron(Matrix2::identity(), sigma_x())), 0.0);
}

}  // namespace
}  // namespace swapsynth
