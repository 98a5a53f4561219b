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

#include "mcgate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <set>

namespace mcgate {

namespace {

void check_guard(unsigned width, unsigned limit, const char* what) {
  if (width > limit) {
    throw InvalidArgument(std::string(what) + ": width " +
                          std::to_string(width) + " exceeds oracle limit " +
                          std::to_string(limit) +
                          " (set MCGATE_MAX_ORACLE_QUBITS to override)");
  }
}

// Gate list with runs of one-qubit gates per wire multiplied together.
class Program {
 public:
  explicit Program(const Circuit& c) : width_(c.width()) {
    std::vector<std::optional<Matrix2>> pending(c.width());
    auto flush = [&](Qubit q) {
      if (pending[q]) {
        ops_.push_back({false, q, q, *pending[q]});
        pending[q].reset();
      }
    };
    for (const Gate& g : c.gates()) {
      if (const auto* one = std::get_if<OneQubitGate>(&g)) {
        auto& p = pending[one->target];
        p = p ? one->matrix * *p : one->matrix;
      } else {
        const auto& x = std::get<CnotGate>(g);
        flush(x.control);
        flush(x.target);
        ops_.push_back({true, x.control, x.target, {}});
      }
    }
    for (Qubit q = 0; q < width_; ++q) flush(q);
  }

  void run(StateVector& s) const {
    for (const Op& op : ops_) {
      if (op.is_cx) {
        s.apply_cx(op.a, op.b);
      } else {
        s.apply_1q(op.a, op.m);
      }
    }
  }

 private:
  struct Op {
    bool is_cx;
    Qubit a;
    Qubit b;
    Matrix2 m;
  };
  unsigned width_;
  std::vector<Op> ops_;
};

double column_diff(const StateVector& got, const StateVector& want) {
  return got.max_abs_diff(want);
}

}  // namespace

OracleLimits OracleLimits::from_env() {
  OracleLimits l;
  if (const char* v = std::getenv("MCGATE_MAX_ORACLE_QUBITS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && n > 0 && n < 40) {
      l.full_max = static_cast<unsigned>(n);
      l.statevector_max = static_cast<unsigned>(n);
    }
  }
  return l;
}

StateVector::StateVector(unsigned width) : width_(width) {
  if (width == 0 || width >= 40) {
    throw InvalidArgument("state vector width must be in [1, 40)");
  }
  amps_.assign(std::size_t{1} << width, Complex{0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(unsigned width, std::uint64_t index) {
  StateVector s(width);
  if (index >= s.dim()) throw InvalidArgument("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

void StateVector::apply_1q(Qubit target, const Matrix2& m) {
  if (target >= width_) throw InvalidArgument("apply: qubit out of range");
  const std::size_t stride = std::size_t{1} << target;
  const std::size_t n = amps_.size();
  const double ar = m(0, 0).real(), ai = m(0, 0).imag();
  const double br = m(0, 1).real(), bi = m(0, 1).imag();
  const double cr = m(1, 0).real(), ci = m(1, 0).imag();
  const double dr = m(1, 1).real(), di = m(1, 1).imag();
  auto* v = reinterpret_cast<double*>(amps_.data());
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      double* p = v + 2 * i;
      double* q = v + 2 * (i + stride);
      const double xr = p[0], xi = p[1], yr = q[0], yi = q[1];
      p[0] = ar * xr - ai * xi + br * yr - bi * yi;
      p[1] = ar * xi + ai * xr + br * yi + bi * yr;
      q[0] = cr * xr - ci * xi + dr * yr - di * yi;
      q[1] = cr * xi + ci * xr + dr * yi + di * yr;
    }
  }
}

void StateVector::apply_cx(Qubit control, Qubit target) {
  if (control >= width_ || target >= width_ || control == target) {
    throw InvalidArgument("apply: bad cx wires");
  }
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t n = amps_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

void StateVector::apply(const Gate& g) {
  if (const auto* one = std::get_if<OneQubitGate>(&g)) {
    apply_1q(one->target, one->matrix);
  } else {
    const auto& x = std::get<CnotGate>(g);
    apply_cx(x.control, x.target);
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::max_abs_diff(const StateVector& other) const {
  if (other.width_ != width_) throw InvalidArgument("width mismatch");
  double r = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    r = std::max(r, std::abs(amps_[i] - other.amps_[i]));
  }
  return r;
}

StateVector apply(const Circuit& c, StateVector state,
                  const OracleLimits& limits) {
  if (c.width() != state.width()) {
    throw InvalidArgument("apply: circuit and state widths differ");
  }
  check_guard(c.width(), limits.statevector_max, "apply");
  Program(c).run(state);
  return state;
}

DenseMatrix::DenseMatrix(std::uint64_t dim)
    : dim_(dim), data_(dim * dim, Complex{0.0}) {}

DenseMatrix DenseMatrix::identity(std::uint64_t dim) {
  DenseMatrix m(dim);
  for (std::uint64_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (o.dim_ != dim_) throw InvalidArgument("matrix dimension mismatch");
  DenseMatrix r(dim_);
  for (std::uint64_t j = 0; j < dim_; ++j) {
    for (std::uint64_t k = 0; k < dim_; ++k) {
      const Complex b = o(k, j);
      if (b == Complex{0.0}) continue;
      for (std::uint64_t i = 0; i < dim_; ++i) r(i, j) += (*this)(i, k) * b;
    }
  }
  return r;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& o) const {
  if (o.dim_ != dim_) throw InvalidArgument("matrix dimension mismatch");
  double r = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    r = std::max(r, std::abs(data_[i] - o.data_[i]));
  }
  return r;
}

DenseMatrix full_unitary(const Circuit& c, const OracleLimits& limits) {
  check_guard(c.width(), limits.full_max, "full_unitary");
  const Program prog(c);
  const std::uint64_t dim = std::uint64_t{1} << c.width();
  DenseMatrix u(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    StateVector s = StateVector::basis(c.width(), j);
    prog.run(s);
    for (std::uint64_t i = 0; i < dim; ++i) u(i, j) = s[i];
  }
  return u;
}

void ControlSpec::validate(unsigned width) const {
  std::set<Qubit> seen;
  auto take = [&](Qubit q) {
    if (q >= width) {
      throw InvalidArgument("control spec: qubit " + std::to_string(q) +
                            " out of range");
    }
    if (!seen.insert(q).second) {
      throw InvalidArgument("control spec: qubit " + std::to_string(q) +
                            " used twice");
    }
  };
  for (Qubit q : controls) take(q);
  for (const auto& [q, m] : targets) take(q);
  if (targets.empty()) throw InvalidArgument("control spec: no target");
}

bool ControlSpec::active(std::uint64_t basis_index) const {
  return std::all_of(controls.begin(), controls.end(), [&](Qubit q) {
    return (basis_index >> q) & 1u;
  });
}

StateVector ControlSpec::apply_to_basis(unsigned width,
                                        std::uint64_t basis_index) const {
  StateVector s = StateVector::basis(width, basis_index);
  if (active(basis_index)) {
    for (const auto& [q, m] : targets) s.apply_1q(q, m);
  }
  return s;
}

DenseMatrix ControlSpec::dense(unsigned width,
                               const OracleLimits& limits) const {
  validate(width);
  check_guard(width, limits.full_max, "ideal dense matrix");
  const std::uint64_t dim = std::uint64_t{1} << width;
  DenseMatrix u(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    const StateVector s = apply_to_basis(width, j);
    for (std::uint64_t i = 0; i < dim; ++i) u(i, j) = s[i];
  }
  return u;
}

ControlSpec ideal_mcu(const Matrix2& u, std::vector<Qubit> controls,
                      Qubit target) {
  return ControlSpec{std::move(controls), {{target, u}}};
}

Matrix2 DroppedRootModel::expected_action(const std::vector<Qubit>& controls,
                                          std::uint64_t basis_index) const {
  auto on = [&](Qubit q) { return ((basis_index >> q) & 1u) != 0; };
  if (!on(b1) || !std::all_of(extras.begin(), extras.end(), on)) {
    return Matrix2::identity();
  }
  const Matrix2 residual = root_pow2(u, n_base - 1).adjoint();
  const bool all = std::all_of(controls.begin(), controls.end(), on);
  return all ? u * residual : residual;
}

std::vector<PatternResult> control_patterns(
    const Circuit& c, const ControlSpec& ideal,
    const std::optional<DroppedRootModel>& model, const OracleLimits& limits) {
  ideal.validate(c.width());
  if (ideal.targets.size() != 1) {
    throw InvalidArgument("control_patterns: exactly one target required");
  }
  check_guard(c.width(), limits.statevector_max, "control_patterns");
  const Qubit t = ideal.targets[0].first;
  const std::uint64_t tbit = std::uint64_t{1} << t;
  std::uint64_t all_on = 0;
  for (Qubit q : ideal.controls) all_on |= std::uint64_t{1} << q;

  std::vector<std::pair<std::string, std::uint64_t>> patterns;
  patterns.emplace_back("all-active", all_on);
  for (Qubit q : ideal.controls) {
    patterns.emplace_back("inactive:q" + std::to_string(q),
                          all_on & ~(std::uint64_t{1} << q));
  }
  if (!ideal.controls.empty()) patterns.emplace_back("all-inactive", 0);

  const Program prog(c);
  std::vector<PatternResult> out;
  for (const auto& [name, base] : patterns) {
    Matrix2 block{0, 0, 0, 0};
    double leakage = 0.0;
    for (int col = 0; col < 2; ++col) {
      StateVector s = StateVector::basis(c.width(), base | (col ? tbit : 0));
      prog.run(s);
      block(0, col) = s[base];
      block(1, col) = s[base | tbit];
      // Summed directly: 1 - kept would cancel down to sqrt(ulp).
      double lost = 0.0;
      for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if ((i | tbit) != (base | tbit)) lost += std::norm(s[i]);
      }
      leakage = std::max(leakage, std::sqrt(lost));
    }
    PatternResult r;
    r.name = name;
    r.basis_index = base;
    const Matrix2 want =
        ideal.active(base) ? ideal.targets[0].second : Matrix2::identity();
    r.error_vs_ideal = std::max(spectral_norm(block - want), leakage);
    if (model) {
      const Matrix2 expect = model->expected_action(ideal.controls, base);
      r.error_vs_expected = std::max(spectral_norm(block - expect), leakage);
    }
    out.push_back(std::move(r));
  }
  return out;
}

double distance(const Circuit& c, const ControlSpec& ideal,
                const DistanceMode& mode, const OracleLimits& limits) {
  ideal.validate(c.width());
  const unsigned w = c.width();
  switch (mode.kind) {
    case DistanceMode::Kind::full: {
      check_guard(w, limits.full_max, "distance(full)");
      const Program prog(c);
      const std::uint64_t dim = std::uint64_t{1} << w;
      double worst = 0.0;
      for (std::uint64_t j = 0; j < dim; ++j) {
        StateVector s = StateVector::basis(w, j);
        prog.run(s);
        worst = std::max(worst, column_diff(s, ideal.apply_to_basis(w, j)));
      }
      return worst;
    }
    case DistanceMode::Kind::sampled_columns: {
      check_guard(w, limits.statevector_max, "distance(sampled)");
      const std::uint64_t dim = std::uint64_t{1} << w;
      std::vector<std::uint64_t> cols;
      if (dim <= mode.columns) {
        for (std::uint64_t j = 0; j < dim; ++j) cols.push_back(j);
      } else {
        std::set<std::uint64_t> chosen;
        std::uint64_t all_on = 0, targets_on = 0;
        for (Qubit q : ideal.controls) all_on |= std::uint64_t{1} << q;
        for (const auto& [q, m] : ideal.targets) targets_on |= std::uint64_t{1} << q;
        chosen.insert(all_on);
        chosen.insert(all_on | targets_on);
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, dim - 1);
        // Half of the random columns keep every control active so the
        // controlled branch is exercised with random ancilla contents.
        for (std::uint64_t draw = 0; chosen.size() < mode.columns; ++draw) {
          std::uint64_t j = pick(rng);
          if (draw % 2 == 0) j |= all_on;
          chosen.insert(j);
        }
        cols.assign(chosen.begin(), chosen.end());
      }
      const Program prog(c);
      double worst = 0.0;
      for (std::uint64_t j : cols) {
        StateVector s = StateVector::basis(w, j);
        prog.run(s);
        worst = std::max(worst, column_diff(s, ideal.apply_to_basis(w, j)));
      }
      return worst;
    }
    case DistanceMode::Kind::control_patterns: {
      double worst = 0.0;
      for (const auto& r : control_patterns(c, ideal, std::nullopt, limits)) {
        worst = std::max(worst, r.error_vs_ideal);
      }
      return worst;
    }
  }
  return 0.0;
}

}  // namespace mcgate
