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

#include <cstdlib>
#include <random>

#include "doctest.h"
#include "mcgate/oracle.hpp"
#include "support/helpers.hpp"
#include "support/reference.hpp"

using namespace mcgate;
using mcgate::testing::random_u2;

namespace {

// Dense unitary of a circuit via the reference Kronecker builder.
reference::Dense kron_unitary(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.width();
  reference::Dense u = reference::Dense::eye(dim);
  for (const Gate& g : c.gates()) {
    reference::Dense step;
    if (const auto* one = std::get_if<OneQubitGate>(&g)) {
      const Matrix2& m = one->matrix;
      step = reference::embed(reference::mat2(m(0, 0), m(0, 1), m(1, 0), m(1, 1)),
                              one->target, c.width());
    } else {
      const auto& x = std::get<CnotGate>(g);
      step = reference::cnot(x.control, x.target, c.width());
    }
    u = reference::matmul(step, u);
  }
  return u;
}

double diff(const DenseMatrix& a, const reference::Dense& b) {
  double d = 0.0;
  for (std::uint64_t i = 0; i < a.dim(); ++i)
    for (std::uint64_t j = 0; j < a.dim(); ++j)
      d = std::max(d, std::abs(a(i, j) - b.at(i, j)));
  return d;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    ::setenv("MCGATE_MAX_ORACLE_QUBITS", value, 1);
  }
  ~EnvGuard() { ::unsetenv("MCGATE_MAX_ORACLE_QUBITS"); }
};

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("simulator agrees with Kronecker products") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Qubit> wire(0, 3);
  Circuit c(4);
  for (int i = 0; i < 80; ++i) {
    const Qubit a = wire(rng);
    Qubit b = wire(rng);
    while (b == a) b = wire(rng);
    if (i % 3 == 0) {
      c.cx(a, b);
    } else {
      c.add_1q(a, random_u2(rng));
    }
  }
  CHECK(diff(full_unitary(c), kron_unitary(c)) < 1e-12);
}

TEST_CASE("basis states and CX") {
  StateVector s = StateVector::basis(3, 0b001);
  s.apply_cx(0, 2);
  CHECK(std::abs(s[0b101] - Complex(1.0)) < 1e-15);
  s.apply_1q(1, Matrix2::h());
  CHECK(std::abs(s[0b111] - Complex(1 / std::sqrt(2.0))) < 1e-15);
  CHECK(s.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(StateVector::basis(2, 4), InvalidArgument);
}

TEST_CASE("ideal multi-controlled matrix") {
  const Matrix2 u = Matrix2::u3(0.3, 0.2, 0.1);
  const ControlSpec s = ideal_mcu(u, {2, 1}, 0);
  const DenseMatrix d = s.dense(3);
  // Only the block with both controls on differs from identity.
  CHECK(std::abs(d(0b110, 0b110) - u(0, 0)) < 1e-15);
  CHECK(std::abs(d(0b111, 0b110) - u(1, 0)) < 1e-15);
  CHECK(std::abs(d(0b010, 0b010) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(d(0b011, 0b010)) < 1e-15);
  CHECK(s.active(0b110));
  CHECK_FALSE(s.active(0b100));
  CHECK_THROWS_AS(ideal_mcu(u, {0, 1}, 0).validate(2), InvalidArgument);
  CHECK_THROWS_AS(ideal_mcu(u, {3}, 0).validate(2), InvalidArgument);
}

TEST_CASE("distances detect a deleted gate") {
  Circuit good(3);
  good.h(2).cx(1, 2).tdg(2).cx(0, 2).t(2).cx(1, 2).tdg(2).cx(0, 2);
  good.t(1).t(2).h(2).cx(0, 1).t(0).tdg(1).cx(0, 1);
  const ControlSpec ccx{{0, 1}, {{2, Matrix2::x()}}};
  CHECK(distance(good, ccx, DistanceMode::full()) < 1e-12);
  CHECK(distance(good, ccx, DistanceMode::sampled(4, 9)) < 1e-12);
  CHECK(distance(good, ccx, DistanceMode::patterns()) < 1e-12);

  Circuit bad(3);
  bool skipped = false;
  for (const Gate& g : good.gates()) {
    if (!skipped && std::holds_alternative<CnotGate>(g)) {
      skipped = true;
      continue;
    }
    bad.add(g);
  }
  CHECK(distance(bad, ccx, DistanceMode::full()) > 0.1);
  // The sampled mode always includes the all-on inputs.
  CHECK(distance(bad, ccx, DistanceMode::sampled(2, 1)) > 0.1);
}

TEST_CASE("pattern list") {
  Circuit c(4);
  const auto pats = control_patterns(c, ideal_mcu(Matrix2::x(), {3, 2, 1}, 0));
  REQUIRE(pats.size() == 5);
  CHECK(pats[0].name == "all-active");
  CHECK(pats[0].error_vs_ideal == doctest::Approx(2.0));
  CHECK(pats[1].name == "inactive:q3");
  CHECK(pats.back().name == "all-inactive");
  for (std::size_t i = 1; i < pats.size(); ++i) {
    CHECK(pats[i].error_vs_ideal < 1e-15);
  }
}

TEST_CASE("leakage counts as error") {
  Circuit c(2);
  c.cx(0, 1);  // moves amplitude out of the target block of wire 0
  const auto pats = control_patterns(c, ideal_mcu(Matrix2::identity(), {1}, 0));
  CHECK(pats[0].error_vs_ideal == doctest::Approx(1.0));
}

TEST_CASE("dropped-root model") {
  const Matrix2 u = Matrix2::x();
  const DroppedRootModel m{u, 3, 3, {4}};
  const std::vector<Qubit> ctl{3, 2, 1, 4};
  CHECK(max_abs_diff(m.expected_action(ctl, 0), Matrix2::identity()) < 1e-15);
  // b1 off or an extra off: identity.
  CHECK(max_abs_diff(m.expected_action(ctl, 0b10110), Matrix2::identity()) < 1e-15);
  CHECK(max_abs_diff(m.expected_action(ctl, 0b01110), Matrix2::identity()) < 1e-15);
  const Matrix2 residual = root_pow2(u, 2).adjoint();
  CHECK(max_abs_diff(m.expected_action(ctl, 0b11000), residual) < 1e-15);
  CHECK(max_abs_diff(m.expected_action(ctl, 0b11110), u * residual) < 1e-15);
}

TEST_CASE("width guards and the environment override") {
  const OracleLimits tight{3, 3};
  CHECK_THROWS_AS(full_unitary(Circuit(4), tight), InvalidArgument);
  CHECK_NOTHROW(full_unitary(Circuit(3), tight));
  {
    EnvGuard env("2");
    const OracleLimits l = OracleLimits::from_env();
    CHECK(l.full_max == 2);
    CHECK(l.statevector_max == 2);
    CHECK_THROWS_AS(full_unitary(Circuit(3)), InvalidArgument);
  }
  {
    EnvGuard env("junk");
    CHECK(OracleLimits::from_env().full_max == OracleLimits{}.full_max);
  }
}

}  // TEST_SUITE
