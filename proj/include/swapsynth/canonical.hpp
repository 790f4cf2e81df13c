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

// Canonical (KAK) decomposition of a two-qubit unitary:
//
//   U = e^{i phase} (u4 (x) v4) exp(-i H) (u1 (x) v1),
//   H = hx XX + hy YY + hz ZZ,   pi/4 >= hx >= hy >= |hz|.
//
// H is diagonal in the Bell basis with eigenvalues lambda_b. In the magic
// basis every local pair u (x) v with u, v in SU(2) is a real SO(4) matrix,
// so U (projected to SU(4)) becomes O_L D O_R with D diagonal. The squared
// spectrum D^2 and O_R come from the real orthogonal eigenbasis of
// m = V^T V; the Weyl representative is then found by enumerating slot
// assignments and pi branches of the halved eigenphases.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include "swapsynth/errors.hpp"
#include "swapsynth/linalg.hpp"
#include "swapsynth/symmetric_eigen.hpp"

namespace swapsynth {

struct CanonicalParams {
  double hx = 0.0;
  double hy = 0.0;
  double hz = 0.0;

  // pi/4 >= hx >= hy >= |hz|, each bound relaxed by tol.
  bool in_weyl_chamber(double tol = kExactTolerance) const {
    return hx <= kPi / 4 + tol && hy <= hx + tol && std::abs(hz) <= hy + tol;
  }

  // The region with hz >= 0 as well.
  bool in_nonnegative_chamber(double tol = kExactTolerance) const {
    return in_weyl_chamber(tol) && hz >= -tol;
  }
};

// Eigenvalues of H on |Phi+>, |Psi+>, |Phi->, |Psi->.
struct BellPhases {
  double l00 = 0.0;
  double l01 = 0.0;
  double l10 = 0.0;
  double l11 = 0.0;

  double sum() const { return l00 + l01 + l10 + l11; }
  std::array<double, 4> as_array() const { return {l00, l01, l10, l11}; }
};

inline BellPhases lambdas(const CanonicalParams& p) {
  return {p.hx - p.hy + p.hz, p.hx + p.hy - p.hz, -p.hx + p.hy + p.hz, -p.hx - p.hy - p.hz};
}

// Inverse of lambdas() on the sum-zero subspace.
inline CanonicalParams params_from_lambdas(const BellPhases& l) {
  return {(l.l00 + l.l01) / 2.0, (l.l01 + l.l10) / 2.0, (l.l00 + l.l10) / 2.0};
}

// exp(-iH) = sum_b e^{-i lambda_b} |b><b|.
inline Matrix4 exp_minus_iH(const CanonicalParams& p) {
  const auto l = lambdas(p).as_array();
  std::array<Complex, 4> phases{};
  for (std::size_t k = 0; k < 4; ++k) phases[k] = std::polar(1.0, -l[k]);
  return bell_diagonal(phases);
}

struct LocalPair {
  Matrix2 first;   // qubit 1
  Matrix2 second;  // qubit 2

  Matrix4 tensor() const { return tensor_product(first, second); }
};

struct CanonicalDecomposition {
  double global_phase = 0.0;
  LocalPair front{Matrix2::identity(), Matrix2::identity()};  // u1, v1
  CanonicalParams params;
  LocalPair back{Matrix2::identity(), Matrix2::identity()};  // u4', v4'
};

// Magic basis, columns (|Phi+>, i|Phi->, i|Psi+>, |Psi->). Column k carries
// the Bell phase kMagicSlotToBell[k].
inline const Matrix4& magic_basis() {
  static const Matrix4 m = [] {
    const auto phi_p = bell_state(Bell::phi_plus);
    const auto phi_m = bell_state(Bell::phi_minus);
    const auto psi_p = bell_state(Bell::psi_plus);
    const auto psi_m = bell_state(Bell::psi_minus);
    Matrix4 b;
    for (std::size_t r = 0; r < 4; ++r) {
      b(r, 0) = phi_p[r];
      b(r, 1) = kI * phi_m[r];
      b(r, 2) = kI * psi_p[r];
      b(r, 3) = psi_m[r];
    }
    return b;
  }();
  return m;
}

// Index into BellPhases::as_array() for each magic-basis column.
inline constexpr std::array<std::size_t, 4> kMagicSlotToBell = {0, 2, 1, 3};

inline Matrix4 to_magic(const Matrix4& u) { return magic_basis().adjoint() * u * magic_basis(); }
inline Matrix4 from_magic(const Matrix4& u) { return magic_basis() * u * magic_basis().adjoint(); }

struct LocalSplit {
  LocalPair pair;     // both factors have determinant 1
  double phase;       // m = e^{i phase} (first (x) second)
  double residual;    // max-entry error of that identity
};

// Factor m = c (a (x) b), pivoting on the largest-norm 2x2 block.
inline LocalSplit split_local_pair(const Matrix4& m) {
  std::size_t bi = 0, bj = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      double n = 0.0;
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) n += std::norm(m(2 * i + r, 2 * j + c));
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  if (best <= 0.0) throw NumericalError("split_local_pair: zero matrix");

  Matrix2 b;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) b(r, c) = m(2 * bi + r, 2 * bj + c);
  const double bn2 = best;
  Matrix2 a;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Complex s{};
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) s += std::conj(b(r, c)) * m(2 * i + r, 2 * j + c);
      a(i, j) = s / bn2;
    }

  // Normalise both factors to SU(2); what is left over is a scalar phase.
  const Complex root_a = std::sqrt(determinant(a));
  const Complex root_b = std::sqrt(determinant(b));
  if (std::abs(root_a) < 1e-12 || std::abs(root_b) < 1e-12)
    throw NumericalError("split_local_pair: singular factor");
  a *= 1.0 / root_a;
  b *= 1.0 / root_b;
  const Complex scale = root_a * root_b;

  LocalSplit out{{a, b}, principal_arg(scale), 0.0};
  out.residual = max_abs_diff(m, tensor_product(a, b) * std::polar(1.0, out.phase));
  return out;
}

inline Matrix4 reconstruct(const CanonicalDecomposition& d) {
  return std::polar(1.0, d.global_phase) *
         (d.back.tensor() * exp_minus_iH(d.params) * d.front.tensor());
}

namespace detail {

inline constexpr double kSplitTolerance = 1e-8;

struct WeylCandidate {
  std::array<std::size_t, 4> slot_to_eigen;  // magic slot -> eigen index
  std::array<double, 4> theta;               // D = diag(e^{-i theta}) by magic slot
  double shift;                              // common part removed from theta
  CanonicalParams params;
  double violation;
};

inline double chamber_violation(const CanonicalParams& p) {
  return std::max({0.0, p.hx - kPi / 4, p.hy - p.hx, std::abs(p.hz) - p.hy});
}

// Search slot assignments and pi branches of the halved eigenphases for a
// Weyl-chamber representative. Each move is realised by a local gate or a
// global phase: permutations and pairs of pi shifts by SO(4) factors, a 2 pi
// shift of one branch by a pi/2 change of global phase.
inline WeylCandidate find_weyl_representative(const std::array<double, 4>& half_phase) {
  std::optional<WeylCandidate> best;
  std::array<std::size_t, 4> perm = {0, 1, 2, 3};
  do {
    for (int n1 = -2; n1 <= 2; ++n1)
      for (int n2 = -2; n2 <= 2; ++n2)
        for (int n3 = -2; n3 <= 2; ++n3) {
          const std::array<int, 4> n = {0, n1, n2, n3};
          std::array<double, 4> theta{};
          double total = 0.0;
          for (std::size_t j = 0; j < 4; ++j) {
            theta[j] = half_phase[perm[j]] + n[j] * kPi;
            total += theta[j];
          }
          // det D must be +1 so that O_L stays in SO(4).
          if (std::abs(std::polar(1.0, -total) - 1.0) > 1e-6) continue;
          const double shift = total / 4.0;
          BellPhases l;
          std::array<double, 4> by_bell{};
          for (std::size_t j = 0; j < 4; ++j) by_bell[kMagicSlotToBell[j]] = theta[j] - shift;
          l = {by_bell[0], by_bell[1], by_bell[2], by_bell[3]};
          const CanonicalParams p = params_from_lambdas(l);
          const double v = chamber_violation(p);
          // Prefer the smallest violation; among valid ones prefer hz >= 0,
          // which picks the representative on the hx = pi/4 face.
          bool better = false;
          if (!best) {
            better = true;
          } else if (v < 1e-10 && best->violation < 1e-10) {
            better = p.hz > best->params.hz + 1e-10;
          } else {
            better = v < best->violation;
          }
          if (better) best = WeylCandidate{perm, theta, shift, p, v};
        }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

inline CanonicalParams clamp_to_chamber(CanonicalParams p) {
  p.hx = std::min(p.hx, kPi / 4);
  p.hy = std::min(p.hy, p.hx);
  p.hz = std::clamp(p.hz, -p.hy, p.hy);
  return p;
}

}  // namespace detail

inline CanonicalDecomposition kak_decompose(const Matrix4& u) {
  require_unitary(u, "kak_decompose");
  const auto [v, phase] = project_su(u);
  const Matrix4 vm = to_magic(v);
  Matrix4 m = vm.transpose() * vm;
  m = 0.5 * (m + m.transpose());
  const auto eig = diagonalize_complex_symmetric_unitary(m);

  std::array<double, 4> half_phase{};
  for (std::size_t k = 0; k < 4; ++k) half_phase[k] = -principal_arg(eig.eigenvalues[k]) / 2.0;
  const auto cand = detail::find_weyl_representative(half_phase);
  if (cand.violation > 1e-8) {
    std::ostringstream os;
    os << "kak_decompose: no Weyl-chamber representative found (violation " << cand.violation
       << ")";
    throw NumericalError(os.str());
  }

  RealMatrix4 q;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t r = 0; r < 4; ++r) q(r, j) = eig.vectors(r, cand.slot_to_eigen[j]);
  if (determinant(q) < 0.0)
    for (std::size_t r = 0; r < 4; ++r) q(r, 0) = -q(r, 0);

  std::array<Complex, 4> d_inv{};
  for (std::size_t j = 0; j < 4; ++j) d_inv[j] = std::polar(1.0, cand.theta[j]);
  const Matrix4 left_c = vm * to_complex(q) * Matrix4::diagonal(d_inv);
  const double imag_residual = max_abs(imag_part(left_c));
  if (imag_residual > detail::kSplitTolerance) {
    std::ostringstream os;
    os << "kak_decompose: left factor is not real in the magic basis (residual " << imag_residual
       << ")";
    throw NumericalError(os.str());
  }
  const Matrix4 left = to_complex(real_part(left_c));
  const Matrix4 right = to_complex(q.transpose());

  const LocalSplit back = split_local_pair(from_magic(left));
  const LocalSplit front = split_local_pair(from_magic(right));
  if (back.residual > detail::kSplitTolerance || front.residual > detail::kSplitTolerance) {
    std::ostringstream os;
    os << "kak_decompose: local factor split failed (residuals back " << back.residual
       << ", front " << front.residual << ")";
    throw NumericalError(os.str());
  }

  CanonicalDecomposition d;
  d.params = detail::clamp_to_chamber(cand.params);
  d.front = front.pair;
  d.back = back.pair;
  d.global_phase = wrap_angle(phase - cand.shift + back.phase + front.phase);

  const double residual = phase_distance(reconstruct(d), u);
  if (residual > kReconstructionTolerance) {
    std::ostringstream os;
    os << "kak_decompose: reconstruction residual " << residual << " exceeds "
       << kReconstructionTolerance << " (hx=" << d.params.hx << ", hy=" << d.params.hy
       << ", hz=" << d.params.hz << ")";
    throw NumericalError(os.str());
  }
  return d;
}

}  // namespace swapsynth
