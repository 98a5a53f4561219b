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

#include "mcgate/mcsu2.hpp"

#include <cmath>
#include <set>
#include <string>

#include "mcgate/mcx.hpp"

namespace mcgate {

namespace {

constexpr double kIdentityTol = 1e-15;

void check_wires(unsigned width, std::span<const Qubit> controls,
                 std::span<const Qubit> targets, const char* what) {
  std::set<Qubit> seen;
  for (auto group : {controls, targets}) {
    for (Qubit q : group) {
      if (q >= width || !seen.insert(q).second) {
        throw InvalidArgument(std::string(what) + ": bad or repeated qubit " +
                              std::to_string(q));
      }
    }
  }
}

void require_su2(const Matrix2& w, const char* what) {
  require_unitary(w, what);
  if (!classify(w, kConstructionTol).special_unitary) {
    throw InvalidArgument(std::string(what) + ": gate is not special-unitary");
  }
}

// One target of the core scheme: the interleaving gate A for a W with real
// off-diagonal entries.
struct Interleaved {
  Qubit target;
  Matrix2 w;
  Matrix2 a;
};

Interleaved interleave_for(Qubit target, const Matrix2& w) {
  return {target, w, solve_interleave(su2_sqrt(w))};
}

// Uncontrolled change of basis around the core on one target.
struct Frame {
  Qubit target;
  Matrix2 before;
  bool hadamard;
};

Matrix2 diagonal_su2(double theta) {
  return {std::polar(1.0, theta), 0, 0, std::polar(1.0, -theta)};
}

void append_core(Circuit& c, std::span<const Qubit> controls,
                 const std::vector<Interleaved>& parts) {
  const std::size_t k = controls.size();
  if (k == 1) {
    for (const auto& p : parts) append_controlled_u(c, p.w, controls[0], p.target);
    return;
  }
  const std::size_t k1 = (k + 1) / 2;
  const auto first = controls.first(k1);
  const auto second = controls.subspan(k1);
  std::vector<Qubit> targets;
  for (const auto& p : parts) targets.push_back(p.target);
  for (int round = 0; round < 2; ++round) {
    for (const auto& p : parts) c.add_1q(p.target, p.a);
    append_mcx(c, first, targets, second);
    for (const auto& p : parts) c.add_1q(p.target, p.a.adjoint());
    append_mcx(c, second, targets, first);
  }
}

}  // namespace

void append_controlled_u(Circuit& c, const Matrix2& u, Qubit control,
                         Qubit target) {
  const AbcFactorization f = abc_factorize(u);
  c.add_1q(target, f.c_gate);
  c.cx(control, target);
  c.add_1q(target, f.b_gate);
  c.cx(control, target);
  c.add_1q(target, f.a_gate);
  if (std::abs(f.global_phase_alpha) > 0.0) {
    c.add_1q(control, Matrix2::phase(f.global_phase_alpha),
             {"u1", {f.global_phase_alpha}});
  }
}

Circuit mcsu2_real_secondary(unsigned width, const Matrix2& w,
                             std::span<const Qubit> controls, Qubit target) {
  const Qubit t[] = {target};
  check_wires(width, controls, t, "mcsu2_real_secondary");
  require_su2(w, "mcsu2_real_secondary");
  if (!classify(w, kConstructionTol).real_secondary_diagonal) {
    throw InvalidArgument(
        "mcsu2_real_secondary: off-diagonal entries are not real");
  }
  Circuit c(width, "mcsu2");
  if (max_abs_diff(w, Matrix2::identity()) < kIdentityTol) return c;
  if (controls.empty()) {
    c.add_1q(target, w);
    return c;
  }
  append_core(c, controls, {interleave_for(target, w)});
  return c;
}

Circuit mcsu2_real_main(unsigned width, const Matrix2& w,
                        std::span<const Qubit> controls, Qubit target) {
  require_su2(w, "mcsu2_real_main");
  if (!classify(w, kConstructionTol).real_main_diagonal) {
    throw InvalidArgument("mcsu2_real_main: diagonal entries are not real");
  }
  const Matrix2 inner = Matrix2::h() * w * Matrix2::h();
  Circuit body = mcsu2_real_secondary(width, inner, controls, target);
  Circuit c(width, "mcsu2");
  if (body.empty()) return c;
  c.h(target);
  c.append(body);
  c.h(target);
  return c;
}

Circuit mcsu2_general(unsigned width, const Matrix2& w,
                      std::span<const Qubit> controls, Qubit target) {
  require_su2(w, "mcsu2_general");
  Circuit c(width, "mcsu2");
  if (max_abs_diff(w, Matrix2::identity()) < kIdentityTol) {
    const Qubit t[] = {target};
    check_wires(width, controls, t, "mcsu2_general");
    return c;
  }
  const EigenSystem es = eigen_decompose(w);
  // D = diag(e^{i t}, e^{-i t}) keeps det 1 even where the eigenphase
  // branch choice would not.
  const Matrix2 d = diagonal_su2(es.theta1);
  Circuit body = mcsu2_real_secondary(width, d, controls, target);
  c.add_1q(target, es.basis.adjoint());
  c.append(body);
  c.add_1q(target, es.basis);
  return c;
}

Circuit mcsu2_multi_target(const Su2Request& req) {
  std::vector<Qubit> targets;
  for (const auto& [q, w] : req.gates) targets.push_back(q);
  check_wires(req.width, req.controls, targets, "mcsu2_multi_target");
  if (req.gates.empty()) throw InvalidArgument("mcsu2_multi_target: no gates");

  Circuit c(req.width, "mcsu2_multi_target");
  if (req.controls.empty()) {
    for (const auto& [q, w] : req.gates) c.add_1q(q, w);
    return c;
  }
  std::vector<Interleaved> parts;
  std::vector<Frame> frames;
  for (const auto& [q, w] : req.gates) {
    require_su2(w, "mcsu2_multi_target");
    const GateClass cls = classify(w, kConstructionTol);
    if (cls.real_secondary_diagonal) {
      parts.push_back(interleave_for(q, w));
    } else if (cls.real_main_diagonal) {
      frames.push_back({q, Matrix2::h(), true});
      parts.push_back(interleave_for(q, Matrix2::h() * w * Matrix2::h()));
    } else {
      const EigenSystem es = eigen_decompose(w);
      frames.push_back({q, es.basis.adjoint(), false});
      parts.push_back(interleave_for(q, diagonal_su2(es.theta1)));
    }
  }
  for (const auto& f : frames) {
    f.hadamard ? c.h(f.target) : c.add_1q(f.target, f.before);
  }
  append_core(c, req.controls, parts);
  for (const auto& f : frames) {
    f.hadamard ? c.h(f.target) : c.add_1q(f.target, f.before.adjoint());
  }
  return c;
}

}  // namespace mcgate
