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

// Real orthogonal diagonalisation of a complex symmetric unitary 4x4 matrix.
//
// For m = m^T unitary, Re(m) and Im(m) are real symmetric and commute, so a
// single real orthogonal Q diagonalises both: m = Q D Q^T with D unit-modulus
// diagonal. The solver runs cyclic Jacobi on Re(m), re-diagonalises Im(m)
// inside each cluster of (near-)equal Re eigenvalues, and then finishes with
// joint Jacobi sweeps on the pair, which removes residual coupling left by
// clusters that sit just outside the clustering threshold.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <span>
#include <sstream>
#include <vector>

#include "swapsynth/errors.hpp"
#include "swapsynth/linalg.hpp"

namespace swapsynth {

struct SymmetricUnitaryEigen {
  std::array<Complex, 4> eigenvalues;  // unit modulus, sorted by phase in (-pi, pi]
  RealMatrix4 vectors;                 // columns are eigenvectors; m = Q D Q^T
  int sweeps = 0;                      // Jacobi sweeps spent, all phases
};

namespace detail {

inline constexpr double kClusterTolerance = 1e-8;
inline constexpr int kMaxSweeps = 100;
// Entries of a unitary are at most 1 in modulus, so these are absolute.
inline constexpr double kOffDiagonalTolerance = 1e-15;
inline constexpr double kSkipCoupling = 2.5e-16;

inline double off_diagonal(const RealMatrix4& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// A <- R^T A R for the plane rotation in (p, q).
inline void rotate_similarity(RealMatrix4& a, std::size_t p, std::size_t q, double c, double s) {
  for (std::size_t k = 0; k < 4; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp + s * akq;
    a(k, q) = -s * akp + c * akq;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk + s * aqk;
    a(q, k) = -s * apk + c * aqk;
  }
}

inline void rotate_columns(RealMatrix4& q_mat, std::size_t p, std::size_t q, double c, double s) {
  for (std::size_t k = 0; k < 4; ++k) {
    const double kp = q_mat(k, p);
    const double kq = q_mat(k, q);
    q_mat(k, p) = c * kp + s * kq;
    q_mat(k, q) = -s * kp + c * kq;
  }
}

// One cyclic sweep of joint Jacobi over the index set `idx`. Only the first
// `active` matrices steer the rotation angle; all of `mats` are rotated.
// The angle minimises the summed squared (p, q) off-diagonal entries of the
// steering matrices, which for a single matrix is the classical Jacobi angle.
// Returns the largest |sin| applied.
inline double joint_sweep(std::span<RealMatrix4*> mats, std::size_t active, RealMatrix4& q_mat,
                          std::span<const std::size_t> idx) {
  double largest = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const std::size_t p = idx[a];
      const std::size_t q = idx[b];
      double g11 = 0.0, g12 = 0.0, g22 = 0.0, coupling = 0.0;
      for (std::size_t k = 0; k < active; ++k) {
        const RealMatrix4& m = *mats[k];
        const double hd = m(p, p) - m(q, q);
        const double ho = m(p, q) + m(q, p);
        g11 += hd * hd;
        g12 += hd * ho;
        g22 += ho * ho;
        coupling = std::max(coupling, std::abs(m(p, q)));
      }
      // Rotating a roundoff-level coupling between (near-)equal diagonal
      // entries only shuffles noise.
      if (coupling <= kSkipCoupling) continue;
      const double theta = 0.25 * std::atan2(2.0 * g12, g11 - g22);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      if (std::abs(s) < 1e-300) continue;
      for (auto* m : mats) rotate_similarity(*m, p, q, c, s);
      rotate_columns(q_mat, p, q, c, s);
      largest = std::max(largest, std::abs(s));
    }
  return largest;
}

// Sweeps until the steering matrices are diagonal to roundoff or a sweep
// stops changing anything. Returns sweeps used.
inline int joint_jacobi(std::span<RealMatrix4*> mats, std::size_t active, RealMatrix4& q_mat,
                        std::span<const std::size_t> idx, int budget) {
  int sweeps = 0;
  while (true) {
    double off = 0.0;
    for (std::size_t k = 0; k < active; ++k) {
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
          if (a != b) off = std::max(off, std::abs((*mats[k])(idx[a], idx[b])));
    }
    if (off <= kOffDiagonalTolerance) return sweeps;
    if (sweeps >= budget) {
      std::ostringstream os;
      os << "symmetric unitary diagonalisation did not converge in " << kMaxSweeps
         << " sweeps (off-diagonal " << off << ")";
      throw NumericalError(os.str());
    }
    const double moved = joint_sweep(mats, active, q_mat, idx);
    ++sweeps;
    if (moved < 1e-15) return sweeps;
  }
}

}  // namespace detail

inline SymmetricUnitaryEigen diagonalize_complex_symmetric_unitary(const Matrix4& m) {
  require_unitary(m, "diagonalize_complex_symmetric_unitary");
  const double asym = max_abs_diff(m, m.transpose());
  if (asym > kUnitarityTolerance) {
    std::ostringstream os;
    os << "diagonalize_complex_symmetric_unitary: matrix is not symmetric (max |m - m^T| = "
       << asym << ")";
    throw ContractError(os.str());
  }

  RealMatrix4 re = real_part(m);
  RealMatrix4 im = imag_part(m);
  RealMatrix4 q = RealMatrix4::identity();
  std::array<RealMatrix4*, 2> both = {&re, &im};
  int sweeps = 0;

  // Re(m) alone.
  const std::array<std::size_t, 4> all = {0, 1, 2, 3};
  sweeps += detail::joint_jacobi(both, 1, q, all, detail::kMaxSweeps);

  // Im(m) inside each cluster of equal Re eigenvalues.
  std::array<std::size_t, 4> order = all;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return re(a, a) < re(b, b); });
  std::vector<std::size_t> cluster;
  auto flush = [&] {
    if (cluster.size() > 1) {
      std::array<RealMatrix4*, 2> im_first = {&im, &re};
      sweeps += detail::joint_jacobi(im_first, 1, q, cluster, detail::kMaxSweeps - sweeps);
    }
    cluster.clear();
  };
  for (std::size_t k = 0; k < 4; ++k) {
    if (!cluster.empty() &&
        re(order[k], order[k]) - re(cluster.back(), cluster.back()) > detail::kClusterTolerance)
      flush();
    cluster.push_back(order[k]);
  }
  flush();

  // Joint polish on both parts.
  sweeps += detail::joint_jacobi(both, 2, q, all, detail::kMaxSweeps - sweeps);

  SymmetricUnitaryEigen out;
  out.sweeps = sweeps;
  std::array<Complex, 4> values{};
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex d{re(k, k), im(k, k)};
    values[k] = d / std::abs(d);
  }

  // First clearly nonzero component of each eigenvector is positive.
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t r = 0; r < 4; ++r) {
      if (std::abs(q(r, c)) > 1e-12) {
        if (q(r, c) < 0)
          for (std::size_t k = 0; k < 4; ++k) q(k, c) = -q(k, c);
        break;
      }
    }
  }

  std::array<std::size_t, 4> perm = all;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const double pa = principal_arg(values[a]);
    const double pb = principal_arg(values[b]);
    if (pa != pb) return pa < pb;
    for (std::size_t r = 0; r < 4; ++r)
      if (q(r, a) != q(r, b)) return q(r, a) > q(r, b);
    return a < b;
  });
  for (std::size_t k = 0; k < 4; ++k) {
    out.eigenvalues[k] = values[perm[k]];
    for (std::size_t r = 0; r < 4; ++r) out.vectors(r, k) = q(r, perm[k]);
  }
  return out;
}

}  // namespace swapsynth
