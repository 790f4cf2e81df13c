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

// Entangling power of two-qubit gates: the average linear entropy
// E = 1 - tr(rho_1^2) produced from Haar-random product inputs.

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

#include "swapsynth/errors.hpp"
#include "swapsynth/gates.hpp"
#include "swapsynth/linalg.hpp"

namespace swapsynth {

// Zanardi constants for two qubits.
inline constexpr double kZanardiC2 = 6.0;
inline constexpr double kTraceT13 = 8.0;

// T13 |a,b,c,d> = |c,b,a,d> on (C^2)^{(x)4}; index bits are a b c d, most
// significant first. In U (x) U this exchanges the first qubits of the two
// copies.
inline const Matrix16& transposition_13() {
  static const Matrix16 t = [] {
    Matrix16 m;
    for (std::size_t i = 0; i < 16; ++i) {
      const std::size_t a = (i >> 3) & 1u, b = (i >> 2) & 1u, c = (i >> 1) & 1u, d = i & 1u;
      const std::size_t j = (c << 3) | (b << 2) | (a << 1) | d;
      m(j, i) = 1.0;
    }
    return m;
  }();
  return t;
}

// Linear entropy of qubit 1 for a normalised two-qubit pure state; in
// [0, 1/2].
inline double linear_entropy(const Vector4& state) {
  const double n = norm(state);
  if (!(std::abs(n - 1.0) <= kUnitarityTolerance)) {
    std::ostringstream os;
    os << "linear_entropy: state is not normalised (norm " << n << ")";
    throw ContractError(os.str());
  }
  const Matrix2 rho = partial_trace_first(density(state));
  return 1.0 - std::real((rho * rho).trace());
}

// <U (x) U, T13 (U (x) U) T13> with <A, B> = tr(A^dagger B). Real for any U.
inline double transposition_overlap(const Matrix4& u) {
  const Matrix16 uu = tensor_product(u, u);
  const Matrix16& t = transposition_13();
  const Matrix16 twisted = t * uu * t;
  Complex s{};
  for (std::size_t i = 0; i < 256; ++i) s += std::conj(uu.data()[i]) * twisted.data()[i];
  return s.real();
}

struct TraceTerms {
  double direct;   // <U(x)U, T13 U(x)U T13>
  double swapped;  // same for SWAP.U
};

inline TraceTerms trace_terms(const Matrix4& u) {
  return {transposition_overlap(u), transposition_overlap(swap_pow(1.0) * u)};
}

inline double ep_exact(const Matrix4& u) {
  require_unitary(u, "ep_exact");
  const TraceTerms t = trace_terms(u);
  return 5.0 / 9.0 - (t.direct + t.swapped) / 36.0;
}

inline double ep_closed_form_swap(double alpha) {
  return 1.0 / 12.0 - std::cos(2.0 * kPi * alpha) / 12.0;
}

// Closed forms of the two trace terms for U = (SWAP)^alpha.
inline TraceTerms appendix_a_terms(double alpha) {
  const double c1 = std::cos(kPi * alpha);
  const double c2 = std::cos(2.0 * kPi * alpha);
  return {17.0 / 2.0 + 6.0 * c1 + 1.5 * c2, 17.0 / 2.0 - 6.0 * c1 + 1.5 * c2};
}

// Smallest alpha in [0, 1/2] with ep_closed_form_swap(alpha) = target;
// target must lie in [0, 1/6].
inline double alpha_for_entangling_power(double target) {
  if (!(target >= 0.0 && target <= 1.0 / 6.0 + kExactTolerance))
    throw ContractError("entangling power of (SWAP)^alpha lies in [0, 1/6]");
  const double c = std::clamp(1.0 - 12.0 * target, -1.0, 1.0);
  return std::acos(c) / (2.0 * kPi);
}

struct EpEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo average over Haar product inputs. Single stream from `seed`,
// so results depend only on (seed, samples).
inline EpEstimate ep_monte_carlo(const Matrix4& u, std::int64_t samples, std::uint64_t seed) {
  require_unitary(u, "ep_monte_carlo");
  if (samples < 1) throw ContractError("ep_monte_carlo: samples must be >= 1");
  std::mt19937_64 rng(seed);
  double mean = 0.0, m2 = 0.0;
  for (std::int64_t k = 0; k < samples; ++k) {
    const Vector2 a = haar_random_state(rng);
    const Vector2 b = haar_random_state(rng);
    Vector4 out = u * tensor_product(a, b);
    // Renormalise away rounding so the entropy precondition holds exactly.
    const double n = norm(out);
    for (auto& v : out) v /= n;
    const double e = linear_entropy(out);
    const double delta = e - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (e - mean);
  }
  EpEstimate est;
  est.mean = mean;
  est.samples = samples;
  est.seed = seed;
  const double var = samples > 1 ? m2 / static_cast<double>(samples - 1) : 0.0;
  est.std_error = std::sqrt(var / static_cast<double>(samples));
  return est;
}

// |ep((a (x) b) u) - ep(u)|.
inline double local_invariance_check(const Matrix4& u, const Matrix2& a, const Matrix2& b) {
  require_unitary(a, "local_invariance_check");
  require_unitary(b, "local_invariance_check");
  return std::abs(ep_exact(tensor_product(a, b) * u) - ep_exact(u));
}

}  // namespace swapsynth
