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
#include "swapsynth/linalg.hpp"
#include "swapsynth/symmetric_eigen.hpp"

namespace swapsynth {
namespace {

TEST(Linalg, InitializerListChecksShape) {
  EXPECT_THROW((Matrix2{{1.0, 0.0}, {0.0}}), DimensionError);
  EXPECT_THROW((Matrix2{{1.0, 0.0}}), DimensionError);
}

TEST(Linalg, TensorProductOfPaulis) {
  const Matrix4 zx = tensor_product(sigma_z(), sigma_x());
  const Matrix4 want = {{0.0, 1.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, -1.0},
                        {0.0, 0.0, -1.0, 0.0}};
  EXPECT_EQ(max_abs_diff(zx, want), 0.0);
  EXPECT_EQ(max_abs_diff(zx, oracle::kron(sigma_z(), sigma_x())), 0.0);
}

TEST(Linalg, TensorProductIsMixedProductCompatible) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const Matrix2 a = haar_random_unitary<2>(rng), b = haar_random_unitary<2>(rng);
    const Matrix2 c = haar_random_unitary<2>(rng), d = haar_random_unitary<2>(rng);
    EXPECT_LT(max_abs_diff(tensor_product(a, b) * tensor_product(c, d), tensor_product(a * c, b * d)),
              1e-14);
  }
}

TEST(Linalg, DeterminantOfTensorProduct) {
  std::mt19937_64 rng(3);
  const Matrix2 a = haar_random_unitary<2>(rng), b = haar_random_unitary<2>(rng);
  const Complex want = std::pow(determinant(a), 2) * std::pow(determinant(b), 2);
  EXPECT_LT(std::abs(determinant(tensor_product(a, b)) - want), 1e-14);
}

TEST(Linalg, PhaseDistanceIgnoresGlobalPhase) {
  const Matrix4 u = haar_random_unitary<4>(5);
  EXPECT_NEAR(phase_distance(u, std::polar(1.0, 1.234) * u), 0.0, 1e-15);
  EXPECT_NEAR(phase_distance(Matrix4::identity(), Matrix4::identity()), 0.0, 0.0);
}

TEST(Linalg, PhaseDistanceBetweenPaulisIsOne) {
  EXPECT_NEAR(phase_distance(sigma_x(), sigma_z()), 1.0, 1e-15);
}

TEST(Linalg, PhaseDistanceIsSymmetricAndBounded) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const Matrix4 u = haar_random_unitary<4>(rng), v = haar_random_unitary<4>(rng);
    const double d = phase_distance(u, v);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
    EXPECT_NEAR(d, phase_distance(v, u), 1e-15);
  }
}

TEST(Linalg, PhaseDistanceRejectsNonUnitary) {
  const Matrix2 bad = {{1.0, 1.0}, {0.0, 1.0}};
  EXPECT_THROW(phase_distance(bad, sigma_x()), ContractError);
}

TEST(Linalg, HaarUnitaryIsUnitaryAndReproducible) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Matrix4 u = haar_random_unitary<4>(s);
    EXPECT_LT(unitarity_deviation(u), 1e-13);
    EXPECT_EQ(u, haar_random_unitary<4>(s));
  }
  EXPECT_NE(haar_random_unitary<4>(1), haar_random_unitary<4>(2));
}

TEST(Linalg, HaarMoments) {
  // E|U00|^2 = 1/N and E|U00|^4 = 2 / (N (N + 1)) for Haar measure.
  std::mt19937_64 rng(2024);
  const int n = 100000;
  double m2 = 0.0, m4 = 0.0, m2_2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double p = std::norm(haar_random_unitary<4>(rng)(0, 0));
    m2 += p;
    m4 += p * p;
    m2_2 += std::norm(haar_random_unitary<2>(rng)(1, 0));
  }
  EXPECT_NEAR(m2 / n, 0.25, 0.01);
  EXPECT_NEAR(m4 / n, 0.1, 0.01);
  EXPECT_NEAR(m2_2 / n, 0.5, 0.01);
}

TEST(Linalg, ProjectSuHasUnitDeterminant) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Matrix4 u = haar_random_unitary<4>(s);
    const SuProjection p = project_su(u);
    EXPECT_LT(std::abs(determinant(p.matrix) - 1.0), 1e-13);
    EXPECT_LT(max_abs_diff(std::polar(1.0, p.phase) * p.matrix, u), 1e-14);
  }
}

TEST(Linalg, PartialTraceOfProductAndBellStates) {
  const Vector2 zero{1.0, 0.0}, plus{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  const Matrix2 rho = partial_trace_first(density(tensor_product(zero, plus)));
  // Qubit 1 is kept, so the reduced state is |0><0|.
  EXPECT_NEAR(rho(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(rho(0, 1)), 0.0, 1e-15);
  const Matrix2 second = partial_trace_first(density(tensor_product(plus, zero)));
  EXPECT_NEAR(second(0, 1).real(), 0.5, 1e-15);
  const Matrix2 mixed = partial_trace_first(density(bell_state(Bell::psi_minus)));
  EXPECT_LT(max_abs_diff(mixed, 0.5 * Matrix2::identity()), 1e-15);
}

TEST(Linalg, BellStatesMatchAmplitudes) {
  const auto want = oracle::bell_vectors();
  for (std::size_t k = 0; k < 4; ++k) {
    const Vector4 got = bell_state(kBellOrder[k]);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(got[i] - want[k][i]), 0.0, 1e-15);
  }
}

TEST(Linalg, WrapAngle) {
  EXPECT_NEAR(wrap_angle(3 * kPi), kPi, 1e-15);
  EXPECT_NEAR(wrap_angle(-kPi), kPi, 1e-15);
  EXPECT_NEAR(wrap_angle(0.5 + 4 * kPi), 0.5, 1e-14);
}

// ---- complex symmetric unitary eigensolver ----------------------------------

RealMatrix4 random_orthogonal(std::mt19937_64& rng) {
  const Matrix4 u = haar_random_unitary<4>(rng);
  // The real part of a generic unitary is invertible; orthonormalise its
  // columns to get an orthogonal matrix.
  RealMatrix4 q = real_part(u);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double d = 0.0;
      for (std::size_t i = 0; i < 4; ++i) d += q(i, k) * q(i, j);
      for (std::size_t i = 0; i < 4; ++i) q(i, j) -= d * q(i, k);
    }
    double n = 0.0;
    for (std::size_t i = 0; i < 4; ++i) n += q(i, j) * q(i, j);
    for (std::size_t i = 0; i < 4; ++i) q(i, j) /= std::sqrt(n);
  }
  return q;
}

void expect_valid(const Matrix4& m, const SymmetricUnitaryEigen& e) {
  const Matrix4 q = to_complex(e.vectors);
  const Matrix4 d = Matrix4::diagonal(e.eigenvalues);
  EXPECT_LT(max_abs_diff(q * d * q.transpose(), m), 1e-11);
  EXPECT_LT(unitarity_deviation(e.vectors), 1e-12);
  EXPECT_NEAR(std::abs(determinant(e.vectors)), 1.0, 1e-12);
}

TEST(SymmetricEigen, RandomSymmetricUnitaries) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int k = 0; k < 1000; ++k) {
    const RealMatrix4 q = random_orthogonal(rng);
    std::array<Complex, 4> d{};
    for (auto& v : d) v = std::polar(1.0, angle(rng));
    const Matrix4 qc = to_complex(q);
    const Matrix4 m = qc * Matrix4::diagonal(d) * qc.transpose();
    expect_valid(m, diagonalize_complex_symmetric_unitary(m));
  }
}

TEST(SymmetricEigen, ClusteredAndDegenerateSpectra) {
  std::mt19937_64 rng(78);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> tiny(-1e-9, 1e-9);
  for (int k = 0; k < 1000; ++k) {
    const RealMatrix4 q = random_orthogonal(rng);
    const double a = angle(rng), b = angle(rng);
    std::array<Complex, 4> d{};
    switch (k % 4) {
      case 0: d = {std::polar(1.0, a), std::polar(1.0, a), std::polar(1.0, b), std::polar(1.0, b)}; break;
      case 1: d = {std::polar(1.0, a), std::polar(1.0, a), std::polar(1.0, a), std::polar(1.0, b)}; break;
      case 2: d.fill(std::polar(1.0, a)); break;
      default:
        d = {std::polar(1.0, a), std::polar(1.0, a + tiny(rng)), std::polar(1.0, -a),
             std::polar(1.0, -a + tiny(rng))};
    }
    const Matrix4 qc = to_complex(q);
    const Matrix4 m = qc * Matrix4::diagonal(d) * qc.transpose();
    expect_valid(m, diagonalize_complex_symmetric_unitary(m));
  }
}

TEST(SymmetricEigen, EigenvaluesAreSortedByPhase) {
  const Matrix4 m = Matrix4::diagonal({std::polar(1.0, 2.0), std::polar(1.0, -1.0),
                                       std::polar(1.0, 0.5), std::polar(1.0, -3.0)});
  const auto e = diagonalize_complex_symmetric_unitary(m);
  for (std::size_t k = 1; k < 4; ++k)
    EXPECT_LE(principal_arg(e.eigenvalues[k - 1]), principal_arg(e.eigenvalues[k]));
}

TEST(SymmetricEigen, RejectsNonSymmetricInput) {
  EXPECT_THROW(diagonalize_complex_symmetric_unitary(haar_random_unitary<4>(1)), ContractError);
}

}  // namespace
}  // namespace swapsynth
