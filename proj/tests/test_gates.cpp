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
#include "swapsynth/gates.hpp"

namespace swapsynth {
namespace {

TEST(Gates, SwapPowEndpoints) {
  EXPECT_EQ(max_abs_diff(swap_pow(0.0), Matrix4::identity()), 0.0);
  EXPECT_LT(max_abs_diff(swap_pow(1.0), oracle::swap_gate()), 1e-15);
  EXPECT_LT(max_abs_diff(swap_pow(2.0), Matrix4::identity()), 1e-15);
}

TEST(Gates, SqrtSwapSquaresToSwap) {
  const Matrix4 s = swap_pow(0.5);
  EXPECT_LT(max_abs_diff(s * s, oracle::swap_gate()), 1e-15);
}

TEST(Gates, SwapPowIsAOneParameterGroup) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    const double a = u(rng), b = u(rng);
    EXPECT_LT(max_abs_diff(swap_pow(a) * swap_pow(b), swap_pow(a + b)), 1e-14);
    EXPECT_LT(unitarity_deviation(swap_pow(a)), 1e-14);
  }
}

TEST(Gates, SwapPowActsOnSingletOnly) {
  const double a = 0.37;
  const Matrix4 s = swap_pow(a);
  const Vector4 singlet = bell_state(Bell::psi_minus);
  const Complex got = inner(singlet, s * singlet);
  EXPECT_LT(std::abs(got - std::polar(1.0, kPi * a)), 1e-15);
  for (Bell b : {Bell::phi_plus, Bell::psi_plus, Bell::phi_minus}) {
    const Vector4 v = bell_state(b);
    EXPECT_LT(std::abs(inner(v, s * v) - 1.0), 1e-15);
  }
}

TEST(Gates, ReduceExponent) {
  EXPECT_DOUBLE_EQ(reduce_exponent(2.5), 0.5);
  EXPECT_DOUBLE_EQ(reduce_exponent(-0.5), 1.5);
  EXPECT_DOUBLE_EQ(reduce_exponent(4.0), 0.0);
}

TEST(Gates, RzConvention) {
  const Matrix2 r = rz(0.3);
  const Matrix2 want = oracle::expm<2>(Complex{0.0, -0.3} * sigma_z());
  EXPECT_LT(max_abs_diff(r, want), 1e-15);
}

TEST(Gates, HadamardIsUnitaryAndSelfInverse) {
  EXPECT_LT(unitarity_deviation(hadamard()), 1e-15);
  EXPECT_LT(max_abs_diff(hadamard() * hadamard(), Matrix2::identity()), 1e-15);
}

TEST(Gates, CnotBothControls) {
  const Matrix4 c1 = cnot(1), c2 = cnot(2);
  // Basis order |q1 q2>: control 1 flips q2 when q1 = 1.
  EXPECT_EQ(c1(3, 2), Complex(1.0));
  EXPECT_EQ(c2(3, 1), Complex(1.0));
  const Matrix4 hh = tensor_product(hadamard(), hadamard());
  EXPECT_LT(max_abs_diff(hh * c1 * hh, c2), 1e-15);
  EXPECT_THROW(cnot(3), ContractError);
}

TEST(Gates, NamedGates) {
  for (auto name : kGateNames) {
    const NamedGate g = named_gate(name);
    std::visit([](const auto& m) { EXPECT_LT(unitarity_deviation(m), 1e-15); }, g);
  }
  EXPECT_THROW(named_gate("toffoli"), ParseError);
  EXPECT_THROW(named_gate4("x"), ParseError);
  EXPECT_EQ(named_gate4("cz")(3, 3), Complex(-1.0));
}

TEST(Gates, PulseAtHalfPlanckIsSwap) {
  // Integral J dt = h / 2 gives a full SWAP with S = sigma / 2.
  const PulseResult r = heisenberg_evolution({kPlanck / 2, "half"});
  EXPECT_NEAR(r.alpha, 1.0, 1e-12);
  EXPECT_LT(phase_distance(r.unitary, oracle::swap_gate()), 1e-14);
  const Matrix4 want = oracle::exchange_evolution(kPlanck / 2 / kHbar);
  EXPECT_LT(max_abs_diff(r.unitary, want), 1e-12);
  EXPECT_NEAR(pauli_convention_exponent({kPlanck / 2, ""}), 0.5, 1e-15);
}

TEST(Gates, PulseMatchesExchangeOracle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const double coupling = u(rng) * kPlanck;
    const PulseResult r = heisenberg_evolution({coupling, ""});
    const Matrix4 want = oracle::exchange_evolution(coupling / kHbar);
    EXPECT_LT(max_abs_diff(r.unitary, want), 1e-12);
    EXPECT_LT(max_abs_diff(std::polar(1.0, r.global_phase) * swap_pow(r.alpha), r.unitary), 1e-12);
    EXPECT_GE(r.alpha, 0.0);
    EXPECT_LT(r.alpha, 2.0);
    EXPECT_NEAR(reduce_exponent(spin_half_exponent({coupling, ""})), r.alpha, 1e-9);
  }
}

TEST(Gates, PulseRejectsNonFinite) {
  EXPECT_THROW(heisenberg_evolution({std::nan(""), ""}), ContractError);
}

}  // namespace
}  // namespace swapsynth
