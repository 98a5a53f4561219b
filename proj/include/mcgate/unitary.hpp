// Copyright 2026 The mcgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcgate {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance used when a construction step validates its own inputs.
inline constexpr double kConstructionTol = 1e-8;
/// Tolerance used by post-hoc verification of exact constructions.
inline constexpr double kVerifyTol = 1e-10;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a synthesis request is well-formed but cannot be built with
/// the available qubits (e.g. too few dirty ancillas).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Dense 2x2 complex matrix, row-major. Used both as a general matrix and as
 * the payload of every one-qubit gate; unitarity is checked by the
 * operations that require it rather than on construction.
 */
class Matrix2 {
 public:
  constexpr Matrix2() : m_{Complex{1}, Complex{0}, Complex{0}, Complex{1}} {}
  constexpr Matrix2(Complex a, Complex b, Complex c, Complex d)
      : m_{a, b, c, d} {}

  constexpr Complex operator()(int row, int col) const {
    return m_[static_cast<std::size_t>(2 * row + col)];
  }
  constexpr Complex& operator()(int row, int col) {
    return m_[static_cast<std::size_t>(2 * row + col)];
  }

  Matrix2 operator*(const Matrix2& o) const;
  Matrix2 operator*(Complex s) const;
  Matrix2 operator+(const Matrix2& o) const;
  Matrix2 operator-(const Matrix2& o) const;
  bool operator==(const Matrix2&) const = default;

  Matrix2 adjoint() const;
  Complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Complex trace() const { return m_[0] + m_[3]; }

  /// max_ij |a_ij|
  double max_abs() const;
  /// Largest entry of |U U^dagger - I|.
  double unitarity_residual() const;
  bool is_unitary(double tol = kConstructionTol) const {
    return unitarity_residual() <= tol;
  }

  // Named gates. Rotations follow R_a(t) = exp(-i t a / 2).
  static Matrix2 identity() { return {}; }
  static Matrix2 x();
  static Matrix2 y();
  static Matrix2 z();
  static Matrix2 h();
  static Matrix2 s();
  static Matrix2 t();
  static Matrix2 rx(double theta);
  static Matrix2 ry(double theta);
  static Matrix2 rz(double theta);
  /// diag(1, e^{i alpha})
  static Matrix2 phase(double alpha);
  /// The OpenQASM 2.0 u3(theta, phi, lambda) matrix.
  static Matrix2 u3(double theta, double phi, double lambda);

 private:
  std::array<Complex, 4> m_;
};

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix2& a, const Matrix2& b);

/// Operator 2-norm (largest singular value).
double spectral_norm(const Matrix2& a);

/// Throws InvalidArgument if the residual of U U^dagger - I exceeds
/// kConstructionTol.
void require_unitary(const Matrix2& u, const char* what);

struct EigenSystem {
  /// Eigenphases in (-pi, pi]; an eigenvalue at -1 always reports +pi.
  double theta1 = 0.0;
  double theta2 = 0.0;
  /// Columns are orthonormal eigenvectors, column i pairs with theta(i+1).
  Matrix2 basis;

  Matrix2 reconstruct() const;
  /// Largest-magnitude eigenphase.
  double max_abs_phase() const;
};

EigenSystem eigen_decompose(const Matrix2& u);

/// Principal 2^j-th root: each eigenphase in (-pi, pi] divided by 2^j.
Matrix2 root_pow2(const Matrix2& u, unsigned j);

/// max_i |e^{i theta_i / N} - 1| over the eigenphases of u.
double spectral_error(const Matrix2& u, std::uint64_t big_n);

/// Same quantity for a known eigenphase magnitude.
double spectral_error_for_phase(double theta_abs, std::uint64_t big_n);

/// Smallest n_b >= 1 with spectral_error_for_phase(theta_abs, 2^(n_b-1)) <=
/// epsilon.
unsigned min_base_controls(double theta_abs, double epsilon);

struct ApproxPlan {
  double theta = 0.0;
  double epsilon = 0.0;
  unsigned n_base = 1;
  std::uint64_t big_n = 1;
  double predicted_error = 0.0;
};

/// Builds the plan for u at tolerance epsilon. A gate whose eigenphases are
/// all zero gets n_base = 1.
ApproxPlan make_plan(const Matrix2& u, double epsilon);

/// u = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta)
struct ZyzAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

ZyzAngles zyz_decompose(const Matrix2& u);

/// u = e^{i alpha} A X B X C with A B C = I; all three special-unitary.
struct AbcFactorization {
  double global_phase_alpha = 0.0;
  Matrix2 a_gate;
  Matrix2 b_gate;
  Matrix2 c_gate;
};

AbcFactorization abc_factorize(const Matrix2& u);

/// For m = [[a, -c], [c, conj(a)]] in SU(2) with c real, returns A in SU(2)
/// with X A^dagger X A = m. m = -I has no stable solution and is rejected.
Matrix2 solve_interleave(const Matrix2& m);

/// A square root of w that stays in SU(2) (w special-unitary). Equals the
/// principal root unless w = -I, where iZ is returned.
Matrix2 su2_sqrt(const Matrix2& w);

struct GateClass {
  bool special_unitary = false;
  bool real_main_diagonal = false;
  bool real_secondary_diagonal = false;
};

GateClass classify(const Matrix2& u, double tol = 1e-10);

}  // namespace mcgate
