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

#include "mcgate/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mcgate {

namespace {

constexpr Complex kI{0.0, 1.0};

// Eigenphases within this distance of -pi are reported as +pi.
constexpr double kBranchSnap = 1e-12;

double wrap_phase(double theta) {
  if (theta <= -kPi + kBranchSnap) return kPi;
  if (theta > kPi) return kPi;
  return theta;
}

Matrix2 diag(Complex a, Complex d) { return {a, Complex{0}, Complex{0}, d}; }

}  // namespace

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  const auto& a = m_;
  const auto& b = o.m_;
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix2 Matrix2::operator*(Complex s) const {
  return {m_[0] * s, m_[1] * s, m_[2] * s, m_[3] * s};
}

Matrix2 Matrix2::operator+(const Matrix2& o) const {
  return {m_[0] + o.m_[0], m_[1] + o.m_[1], m_[2] + o.m_[2], m_[3] + o.m_[3]};
}

Matrix2 Matrix2::operator-(const Matrix2& o) const {
  return {m_[0] - o.m_[0], m_[1] - o.m_[1], m_[2] - o.m_[2], m_[3] - o.m_[3]};
}

Matrix2 Matrix2::adjoint() const {
  return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
          std::conj(m_[3])};
}

double Matrix2::max_abs() const {
  double r = 0.0;
  for (const auto& v : m_) r = std::max(r, std::abs(v));
  return r;
}

double Matrix2::unitarity_residual() const {
  return max_abs_diff(*this * adjoint(), Matrix2::identity());
}

Matrix2 Matrix2::x() { return {0, 1, 1, 0}; }
Matrix2 Matrix2::y() { return {0, -kI, kI, 0}; }
Matrix2 Matrix2::z() { return {1, 0, 0, -1}; }
Matrix2 Matrix2::h() {
  const double r = 1.0 / std::sqrt(2.0);
  return {r, r, r, -r};
}
Matrix2 Matrix2::s() { return diag(1, kI); }
Matrix2 Matrix2::t() { return diag(1, std::polar(1.0, kPi / 4)); }

Matrix2 Matrix2::rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {c, -kI * s, -kI * s, c};
}

Matrix2 Matrix2::ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {c, -s, s, c};
}

Matrix2 Matrix2::rz(double theta) {
  return diag(std::polar(1.0, -theta / 2), std::polar(1.0, theta / 2));
}

Matrix2 Matrix2::phase(double alpha) { return diag(1, std::polar(1.0, alpha)); }

Matrix2 Matrix2::u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {c, -std::polar(s, lambda), std::polar(s, phi),
          std::polar(c, phi + lambda)};
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  return (a - b).max_abs();
}

double spectral_norm(const Matrix2& a) {
  const Matrix2 g = a.adjoint() * a;
  const double p = g(0, 0).real(), r = g(1, 1).real();
  const double q = std::abs(g(0, 1));
  const double half = (p - r) / 2;
  const double lmax = (p + r) / 2 + std::sqrt(half * half + q * q);
  return std::sqrt(std::max(0.0, lmax));
}

void require_unitary(const Matrix2& u, const char* what) {
  const double res = u.unitarity_residual();
  if (!(res <= kConstructionTol)) {
    std::ostringstream os;
    os << what << ": matrix is not unitary (residual " << res << ")";
    throw InvalidArgument(os.str());
  }
}

Matrix2 EigenSystem::reconstruct() const {
  return basis *
         diag(std::polar(1.0, theta1), std::polar(1.0, theta2)) *
         basis.adjoint();
}

double EigenSystem::max_abs_phase() const {
  return std::max(std::abs(theta1), std::abs(theta2));
}

EigenSystem eigen_decompose(const Matrix2& u) {
  require_unitary(u, "eigen_decompose");
  const Complex a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);

  EigenSystem es;
  const double spread =
      std::max({std::abs(b), std::abs(c), std::abs(a - d)});
  if (spread < 1e-14) {
    es.theta1 = wrap_phase(std::arg(a));
    es.theta2 = wrap_phase(std::arg(d));
    return es;
  }

  const Complex tr = a + d;
  const Complex disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
  const Complex l1 = (tr + disc) / 2.0;

  // Null vector of (U - l1 I); pick whichever row gives the better
  // conditioned candidate.
  Complex v0 = b, v1 = l1 - a;
  const Complex w0 = l1 - d, w1 = c;
  if (std::norm(w0) + std::norm(w1) > std::norm(v0) + std::norm(v1)) {
    v0 = w0;
    v1 = w1;
  }
  const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
  v0 /= nrm;
  v1 /= nrm;
  // Orthogonal complement; normal matrices have orthogonal eigenvectors.
  const Complex u0 = -std::conj(v1), u1 = std::conj(v0);

  es.basis = Matrix2{v0, u0, v1, u1};
  const Matrix2 dm = es.basis.adjoint() * u * es.basis;
  es.theta1 = wrap_phase(std::arg(dm(0, 0)));
  es.theta2 = wrap_phase(std::arg(dm(1, 1)));
  return es;
}

Matrix2 root_pow2(const Matrix2& u, unsigned j) {
  const EigenSystem es = eigen_decompose(u);
  const double scale = std::ldexp(1.0, -static_cast<int>(j));
  return es.basis *
         diag(std::polar(1.0, es.theta1 * scale),
              std::polar(1.0, es.theta2 * scale)) *
         es.basis.adjoint();
}

double spectral_error_for_phase(double theta_abs, std::uint64_t big_n) {
  if (big_n == 0) throw InvalidArgument("spectral_error: N must be positive");
  // |e^{i t} - 1| = sqrt(2 (1 - cos t)) = 2 |sin(t / 2)|
  return 2.0 * std::abs(std::sin(theta_abs / (2.0 * static_cast<double>(big_n))));
}

double spectral_error(const Matrix2& u, std::uint64_t big_n) {
  if (big_n == 0) throw InvalidArgument("spectral_error: N must be positive");
  const EigenSystem es = eigen_decompose(u);
  return std::max(spectral_error_for_phase(es.theta1, big_n),
                  spectral_error_for_phase(es.theta2, big_n));
}

unsigned min_base_controls(double theta_abs, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 2.0)) {
    throw InvalidArgument("min_base_controls: epsilon must lie in (0, 2]");
  }
  if (!(theta_abs > 0.0 && theta_abs <= kPi + kBranchSnap)) {
    throw InvalidArgument("min_base_controls: theta must lie in (0, pi]");
  }
  // arccos(1 - eps^2 / 2) written as 2 asin(eps / 2) to survive tiny eps.
  const double max_angle = 2.0 * std::asin(epsilon / 2.0);
  const double real_nb = std::log2(theta_abs / max_angle) + 1.0;
  constexpr unsigned kMaxBase = 62;
  unsigned nb = real_nb <= 1.0
                    ? 1u
                    : static_cast<unsigned>(std::min<double>(
                          std::ceil(real_nb), kMaxBase));

  auto err = [&](unsigned base) {
    return spectral_error_for_phase(theta_abs, std::uint64_t{1} << (base - 1));
  };
  // Floating-point guard around the closed form: keep the bound and keep
  // minimality.
  while (nb < kMaxBase && err(nb) > epsilon) ++nb;
  while (nb > 1 && err(nb - 1) <= epsilon) --nb;
  return nb;
}

ApproxPlan make_plan(const Matrix2& u, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 2.0)) {
    throw InvalidArgument("epsilon must lie in (0, 2]");
  }
  const EigenSystem es = eigen_decompose(u);
  ApproxPlan plan;
  plan.theta = es.max_abs_phase();
  plan.epsilon = epsilon;
  if (plan.theta > 0.0) {
    plan.n_base = min_base_controls(plan.theta, epsilon);
  }
  plan.big_n = std::uint64_t{1} << (plan.n_base - 1);
  plan.predicted_error = spectral_error_for_phase(plan.theta, plan.big_n);
  return plan;
}

ZyzAngles zyz_decompose(const Matrix2& u) {
  require_unitary(u, "zyz_decompose");
  ZyzAngles z;
  z.alpha = std::arg(u.det()) / 2.0;
  const Matrix2 v = u * std::polar(1.0, -z.alpha);
  const Complex a = v(0, 0), b = v(1, 0);
  z.gamma = 2.0 * std::atan2(std::abs(b), std::abs(a));
  const double arg_a = std::abs(a) > 1e-14 ? std::arg(a) : 0.0;
  const double arg_b = std::abs(b) > 1e-14 ? std::arg(b) : 0.0;
  z.beta = arg_b - arg_a;
  z.delta = -arg_a - arg_b;
  return z;
}

AbcFactorization abc_factorize(const Matrix2& u) {
  const ZyzAngles z = zyz_decompose(u);
  AbcFactorization f;
  f.global_phase_alpha = z.alpha;
  f.a_gate = Matrix2::rz(z.beta) * Matrix2::ry(z.gamma / 2);
  f.b_gate = Matrix2::ry(-z.gamma / 2) * Matrix2::rz(-(z.delta + z.beta) / 2);
  f.c_gate = Matrix2::rz((z.delta - z.beta) / 2);
  return f;
}

Matrix2 solve_interleave(const Matrix2& m) {
  const Complex a = m(0, 0), c = m(1, 0);
  const double form_residual =
      std::max({std::abs(m.det() - 1.0), std::abs(c.imag()),
                std::abs(m(0, 1) + c), std::abs(m(1, 1) - std::conj(a))});
  if (!(form_residual <= kConstructionTol)) {
    throw InvalidArgument(
        "solve_interleave: expected a special-unitary matrix with real "
        "off-diagonal entries");
  }
  const double p = std::sqrt(std::max(0.0, (1.0 + a.real()) / 2.0));
  if (p < 1e-6) {
    throw InvalidArgument("solve_interleave: m = -I has no stable solution");
  }
  const Complex alpha{p, a.imag() / (2.0 * p)};
  const double beta = c.real() / (2.0 * p);
  return {alpha, -beta, beta, std::conj(alpha)};
}

Matrix2 su2_sqrt(const Matrix2& w) {
  const EigenSystem es = eigen_decompose(w);
  const double half = es.theta1 / 2.0;
  return es.basis * diag(std::polar(1.0, half), std::polar(1.0, -half)) *
         es.basis.adjoint();
}

GateClass classify(const Matrix2& u, double tol) {
  GateClass g;
  g.special_unitary = std::abs(u.det() - 1.0) <= tol;
  g.real_main_diagonal =
      std::abs(u(0, 0).imag()) <= tol && std::abs(u(1, 1).imag()) <= tol;
  g.real_secondary_diagonal =
      std::abs(u(0, 1).imag()) <= tol && std::abs(u(1, 0).imag()) <= tol;
  return g;
}

}  // namespace mcgate
