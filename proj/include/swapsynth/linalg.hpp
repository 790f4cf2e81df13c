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

// Fixed-size dense complex linear algebra for two-qubit work (dimensions 2,
// 4 and 16), plus the Bell basis, Haar sampling and phase-insensitive
// distance.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>

#include "swapsynth/errors.hpp"

namespace swapsynth {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

// Admission tolerance for unitarity and hermiticity.
inline constexpr double kUnitarityTolerance = 1e-10;
// Bound for decompose-then-rebuild residuals.
inline constexpr double kReconstructionTolerance = 1e-9;
// Bound for identities that hold exactly in exact arithmetic.
inline constexpr double kExactTolerance = 1e-12;

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename T>
constexpr T conj_value(const T& v) {
  if constexpr (is_complex<T>::value) {
    return std::conj(v);
  } else {
    return v;
  }
}

}  // namespace detail

// Row-major square matrix of fixed dimension.
template <typename T, std::size_t N>
class SquareMatrix {
 public:
  using value_type = T;
  static constexpr std::size_t dim = N;

  constexpr SquareMatrix() = default;

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    if (rows.size() != N) throw DimensionError("matrix literal has wrong row count");
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw DimensionError("matrix literal has wrong column count");
      std::size_t c = 0;
      for (const auto& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T{1};
    return m;
  }

  static SquareMatrix diagonal(const std::array<T, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  const std::array<T, N * N>& data() const { return data_; }
  std::array<T, N * N>& data() { return data_; }

  SquareMatrix transpose() const {
    SquareMatrix t;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  SquareMatrix adjoint() const {
    SquareMatrix t;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) t(c, r) = detail::conj_value((*this)(r, c));
    return t;
  }

  SquareMatrix conjugate() const {
    SquareMatrix t;
    for (std::size_t i = 0; i < N * N; ++i) t.data_[i] = detail::conj_value(data_[i]);
    return t;
  }

  T trace() const {
    T s{};
    for (std::size_t i = 0; i < N; ++i) s += (*this)(i, i);
    return s;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  SquareMatrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const T& s) { return a *= s; }
  friend SquareMatrix operator*(const T& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix p;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const T a_rk = a(r, k);
        if (a_rk == T{}) continue;
        for (std::size_t c = 0; c < N; ++c) p(r, c) += a_rk * b(k, c);
      }
    return p;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<T, N * N> data_{};
};

template <std::size_t N>
using Matrix = SquareMatrix<Complex, N>;
using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;
using Matrix16 = Matrix<16>;
using RealMatrix4 = SquareMatrix<double, 4>;

template <std::size_t N>
using Vector = std::array<Complex, N>;
using Vector2 = Vector<2>;
using Vector4 = Vector<4>;

template <std::size_t N>
Vector<N> operator*(const Matrix<N>& m, const Vector<N>& v) {
  Vector<N> out{};
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out[r] += m(r, c) * v[c];
  return out;
}

template <std::size_t N>
Complex inner(const Vector<N>& a, const Vector<N>& b) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

template <std::size_t N>
double norm(const Vector<N>& v) {
  return std::sqrt(std::real(inner(v, v)));
}

template <std::size_t N>
Matrix<N> outer(const Vector<N>& a, const Vector<N>& b) {
  Matrix<N> m;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

// Largest absolute entry.
template <typename T, std::size_t N>
double max_abs(const SquareMatrix<T, N>& m) {
  double best = 0.0;
  for (const auto& v : m.data()) best = std::max(best, std::abs(v));
  return best;
}

template <typename T, std::size_t N>
double max_abs_diff(const SquareMatrix<T, N>& a, const SquareMatrix<T, N>& b) {
  return max_abs(a - b);
}

template <typename T, std::size_t N>
bool is_finite(const SquareMatrix<T, N>& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const T& v) {
    if constexpr (detail::is_complex<T>::value) {
      return std::isfinite(v.real()) && std::isfinite(v.imag());
    } else {
      return std::isfinite(v);
    }
  });
}

template <std::size_t N>
SquareMatrix<double, N> real_part(const Matrix<N>& m) {
  SquareMatrix<double, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = m(i, j).real();
  return r;
}

template <std::size_t N>
SquareMatrix<double, N> imag_part(const Matrix<N>& m) {
  SquareMatrix<double, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = m(i, j).imag();
  return r;
}

template <std::size_t N>
Matrix<N> to_complex(const SquareMatrix<double, N>& m) {
  Matrix<N> c;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) c(i, j) = m(i, j);
  return c;
}

// max |U^dagger U - I|, or +inf for non-finite input.
template <typename T, std::size_t N>
double unitarity_deviation(const SquareMatrix<T, N>& m) {
  if (!is_finite(m)) return std::numeric_limits<double>::infinity();
  return max_abs_diff(m.adjoint() * m, SquareMatrix<T, N>::identity());
}

template <typename T, std::size_t N>
bool is_unitary(const SquareMatrix<T, N>& m, double tol = kUnitarityTolerance) {
  return unitarity_deviation(m) <= tol;
}

template <typename T, std::size_t N>
void require_unitary(const SquareMatrix<T, N>& m, const char* what) {
  const double dev = unitarity_deviation(m);
  if (!(dev <= kUnitarityTolerance)) {
    std::ostringstream os;
    os << what << ": matrix is not unitary (max deviation |U^dagger U - I| = " << dev << ")";
    throw ContractError(os.str());
  }
}

template <std::size_t N>
double hermiticity_deviation(const Matrix<N>& m) {
  if (!is_finite(m)) return std::numeric_limits<double>::infinity();
  return max_abs_diff(m, m.adjoint());
}

// Kronecker product. Operands are ordered (first qubit, second qubit):
// basis index = dim(b) * i_a + i_b.
template <std::size_t A, std::size_t B>
  requires(A * B <= 16)
Matrix<A * B> tensor_product(const Matrix<A>& a, const Matrix<B>& b) {
  Matrix<A * B> k;
  for (std::size_t ar = 0; ar < A; ++ar)
    for (std::size_t ac = 0; ac < A; ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < B; ++br)
        for (std::size_t bc = 0; bc < B; ++bc) k(ar * B + br, ac * B + bc) = s * b(br, bc);
    }
  return k;
}

template <std::size_t A, std::size_t B>
Vector<A * B> tensor_product(const Vector<A>& a, const Vector<B>& b) {
  Vector<A * B> k{};
  for (std::size_t i = 0; i < A; ++i)
    for (std::size_t j = 0; j < B; ++j) k[i * B + j] = a[i] * b[j];
  return k;
}

// Determinant by LU with partial pivoting.
template <typename T, std::size_t N>
T determinant(SquareMatrix<T, N> m) {
  T det{1};
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (m(pivot, col) == T{}) return T{};
    if (pivot != col) {
      for (std::size_t c = 0; c < N; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < N; ++r) {
      const T f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < N; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

// Principal argument in (-pi, pi].
inline double principal_arg(Complex z) {
  double a = std::arg(z);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

// 1 - |tr(U^dagger V)| / N. Zero iff U and V agree up to a global phase.
template <std::size_t N>
double phase_distance(const Matrix<N>& u, const Matrix<N>& v) {
  require_unitary(u, "phase_distance");
  require_unitary(v, "phase_distance");
  Complex t{};
  for (std::size_t i = 0; i < N * N; ++i) t += std::conj(u.data()[i]) * v.data()[i];
  return std::clamp(1.0 - std::abs(t) / static_cast<double>(N), 0.0, 1.0);
}

struct SuProjection {
  Matrix4 matrix;  // e^{-i phase} U, determinant 1
  double phase;    // arg(det U) / 4
};

inline SuProjection project_su(const Matrix4& u) {
  require_unitary(u, "project_su");
  const double phase = principal_arg(determinant(u)) / 4.0;
  return {u * std::polar(1.0, -phase), phase};
}

// Haar-random unitary: Gram-Schmidt on the columns of a complex Ginibre
// matrix. Gram-Schmidt yields the QR factor with a positive real diagonal in
// R, which is the phase normalisation that makes the result Haar.
template <std::size_t N, std::uniform_random_bit_generator Rng>
  requires(N == 2 || N == 4)
Matrix<N> haar_random_unitary(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Vector<N>, N> cols{};
  for (auto& col : cols)
    for (auto& v : col) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v = {re, im};
    }
  for (std::size_t j = 0; j < N; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k) {
        const Complex proj = inner(cols[k], cols[j]);
        for (std::size_t i = 0; i < N; ++i) cols[j][i] -= proj * cols[k][i];
      }
    const double n = norm(cols[j]);
    for (auto& v : cols[j]) v /= n;
  }
  Matrix<N> u;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) u(r, c) = cols[c][r];
  return u;
}

template <std::size_t N>
  requires(N == 2 || N == 4)
Matrix<N> haar_random_unitary(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random_unitary<N>(rng);
}

// Haar-random pure single-qubit state.
template <std::uniform_random_bit_generator Rng>
Vector2 haar_random_state(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector2 s{};
  for (auto& v : s) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v = {re, im};
  }
  const double n = norm(s);
  for (auto& v : s) v /= n;
  return s;
}

// Reduced density matrix of qubit 1 (traces out qubit 2).
inline Matrix2 partial_trace_first(const Matrix4& rho) {
  const double herm = hermiticity_deviation(rho);
  if (!(herm <= kUnitarityTolerance)) {
    std::ostringstream os;
    os << "partial_trace_first: density matrix is not Hermitian (deviation " << herm << ")";
    throw ContractError(os.str());
  }
  if (std::abs(rho.trace() - 1.0) > kUnitarityTolerance)
    throw ContractError("partial_trace_first: density matrix trace is not 1");
  Matrix2 r;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t k = 0; k < 2; ++k) r(a, b) += rho(2 * a + k, 2 * b + k);
  return r;
}

inline Matrix4 density(const Vector4& psi) { return outer(psi, psi); }

inline Matrix2 sigma_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline Matrix2 sigma_y() { return {{0.0, -kI}, {kI, 0.0}}; }
inline Matrix2 sigma_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

// Bell states indexed by two bits (phase bit, parity bit), matching the
// phase labels lambda_00, lambda_01, lambda_10, lambda_11.
enum class Bell : std::size_t { phi_plus = 0, psi_plus = 1, phi_minus = 2, psi_minus = 3 };

inline Vector4 bell_state(Bell b) {
  const double s = 1.0 / std::numbers::sqrt2;
  switch (b) {
    case Bell::phi_plus:
      return {s, 0.0, 0.0, s};
    case Bell::psi_plus:
      return {0.0, s, s, 0.0};
    case Bell::phi_minus:
      return {s, 0.0, 0.0, -s};
    case Bell::psi_minus:
      return {0.0, s, -s, 0.0};
  }
  return {};
}

inline constexpr std::array<Bell, 4> kBellOrder = {Bell::phi_plus, Bell::psi_plus, Bell::phi_minus,
                                                  Bell::psi_minus};

inline std::array<Vector4, 4> bell_basis() {
  return {bell_state(Bell::phi_plus), bell_state(Bell::psi_plus), bell_state(Bell::phi_minus),
          bell_state(Bell::psi_minus)};
}

// sum_b phases[b] |b><b| over the Bell basis, indexed as kBellOrder.
inline Matrix4 bell_diagonal(const std::array<Complex, 4>& phases) {
  Matrix4 m;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto b = bell_state(kBellOrder[k]);
    m += phases[k] * outer(b, b);
  }
  return m;
}

}  // namespace swapsynth
