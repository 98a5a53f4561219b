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

// Linear-depth multi-controlled U(2) gates, exact and approximate.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcgate/circuit.hpp"

namespace mcgate {

/// One singly-controlled gate of the layout, on layout positions: position 0
/// is b1, position j-1 is b_j, position n_base is the target.
struct LayoutGate {
  enum class Kind { rx, root };

  unsigned control = 0;
  unsigned target = 0;
  Kind kind = Kind::rx;
  /// rx: angle sign * pi / 2^exponent. root: U^(sign / 2^exponent).
  int sign = 1;
  unsigned exponent = 0;

  bool central() const { return control == 0; }
  Matrix2 matrix(const Matrix2& u) const;
  bool operator==(const LayoutGate&) const = default;
};

/**
 * Two triangles of controlled Rx and controlled roots of U. The gates with
 * b1 as control (the central column) sit at the end of the first half of
 * each triangle; they commute with everything after them in that half.
 */
struct TriangleLayout {
  unsigned n_base = 0;
  std::vector<LayoutGate> first_triangle;
  std::vector<LayoutGate> second_triangle;

  /// Central gates of both triangles in circuit order. The root gate
  /// U^(1/2^(n_base-1)) is the last central gate of the first triangle.
  std::vector<LayoutGate> central_column() const;
  std::size_t size() const {
    return first_triangle.size() + second_triangle.size();
  }
  /// One gate per line; the golden-layout fixture format.
  std::string str() const;
};

/// Layout for C^(n_base) U; n_base >= 1.
TriangleLayout make_layout(unsigned n_base);

/// A layout placed on wires: base[j] is b_(j+1).
struct BoundLayout {
  TriangleLayout layout;
  Matrix2 u;
  unsigned width = 0;
  std::vector<Qubit> base;
  Qubit target = 0;

  Qubit wire(unsigned position) const;
};

/**
 * Every central gate gains `extra_controls`. The central root becomes an
 * exact C^(ne+1) root of U and each central Rx a C^(ne+1) Rx; the result is
 * an exact C^(nb+ne) U. No extras gives the plain layout circuit.
 */
Circuit extend_controls(const BoundLayout& layout,
                        std::span<const Qubit> extra_controls);

struct DecompositionReport {
  Circuit circuit;
  /// "exact", "approx-thm1" or "approx-thm3".
  std::string strategy;
  unsigned n = 0;
  std::size_t cnot_count = 0;
  std::optional<std::int64_t> bound;
  bool bound_satisfied = true;
  std::optional<double> oracle_error;
  std::optional<ApproxPlan> plan;
  TriangleLayout layout;
  /// Wires of b1 and of the extra controls; set when the root was dropped.
  std::optional<Qubit> b1;
  std::vector<Qubit> extras;

  std::string to_json(int indent = -1) const;
};

/// `width` 0 means one more than the largest wire used.
DecompositionReport mcu_exact(const Matrix2& u, std::span<const Qubit> controls,
                              Qubit target, unsigned width = 0);

/// The first n_base controls are the base; the rest are extras. Each
/// central Rx is lowered on its own.
DecompositionReport mcu_approx(const Matrix2& u,
                               std::span<const Qubit> controls, Qubit target,
                               double epsilon, unsigned width = 0);

/// As mcu_approx, but each triangle's central Rx gates form one
/// multi-target block.
DecompositionReport mcu_approx_opt(const Matrix2& u,
                                   std::span<const Qubit> controls,
                                   Qubit target, double epsilon,
                                   unsigned width = 0);

/// Cheapest predicted strategy; exact when epsilon is absent or k <= n_base.
/// Ties prefer exact, then the multi-target form.
DecompositionReport mcu_auto(const Matrix2& u, std::span<const Qubit> controls,
                             Qubit target, std::optional<double> epsilon,
                             unsigned width = 0);

enum class Strategy { exact, approx_thm1, approx_thm3, automatic };

std::string strategy_name(Strategy s);
/// Accepts "exact", "approx-thm1", "approx-thm3", "auto".
Strategy parse_strategy(const std::string& name);

DecompositionReport decompose(Strategy s, const Matrix2& u,
                              std::span<const Qubit> controls, Qubit target,
                              std::optional<double> epsilon,
                              unsigned width = 0);

}  // namespace mcgate
