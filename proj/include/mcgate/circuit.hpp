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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mcgate/unitary.hpp"

namespace mcgate {

/// Wire index. Qubit 0 is the least-significant bit of a basis-state index.
using Qubit = std::uint32_t;

/// Advisory name of a one-qubit gate, e.g. {"rx", {1.57}}. The matrix of the
/// gate is authoritative; the label only drives pretty-printing and QASM.
struct GateLabel {
  std::string name;
  std::vector<double> params;

  bool empty() const { return name.empty(); }
  bool operator==(const GateLabel&) const = default;

  /// "rx(1.5707963267948966)"
  std::string str() const;
  static GateLabel parse(const std::string& text);
};

struct OneQubitGate {
  Qubit target = 0;
  Matrix2 matrix;
  GateLabel label;
  bool operator==(const OneQubitGate&) const = default;
};

struct CnotGate {
  Qubit control = 0;
  Qubit target = 0;
  bool operator==(const CnotGate&) const = default;
};

using Gate = std::variant<OneQubitGate, CnotGate>;

/**
 * Ordered list of elementary gates on `width` wires. Gates are applied in
 * list order, so the circuit unitary is the product of the gate matrices
 * with later gates on the left.
 *
 * `counters` records construction-level facts that are not visible from the
 * gate list alone (e.g. how many relative-phase Toffolis a chain used).
 */
class Circuit {
 public:
  explicit Circuit(unsigned width = 1, std::string name = {});

  unsigned width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::map<std::string, std::uint64_t>& counters() const {
    return counters_;
  }
  std::uint64_t counter(const std::string& key) const;
  void bump(const std::string& key, std::uint64_t by = 1);

  Circuit& add(Gate g);
  Circuit& add_1q(Qubit q, const Matrix2& m, GateLabel label = {});
  Circuit& cx(Qubit control, Qubit target);

  Circuit& h(Qubit q);
  Circuit& x(Qubit q);
  Circuit& t(Qubit q);
  Circuit& tdg(Qubit q);
  Circuit& rx(Qubit q, double theta);
  Circuit& ry(Qubit q, double theta);
  Circuit& rz(Qubit q, double theta);

  /// Appends `other` (same width). Counters are summed.
  Circuit& append(const Circuit& other);
  /// Appends `other` with its wire i relabelled to wires[i].
  Circuit& append_on(const Circuit& other, std::span<const Qubit> wires);

  std::size_t cnot_count() const;
  std::size_t one_qubit_count() const;
  /// Longest chain of gates that pairwise share a wire.
  std::size_t depth() const;

  bool operator==(const Circuit& o) const {
    return width_ == o.width_ && gates_ == o.gates_;
  }

 private:
  void check_qubit(Qubit q) const;

  unsigned width_;
  std::string name_;
  std::vector<Gate> gates_;
  std::map<std::string, std::uint64_t> counters_;
};

/// a followed by b.
Circuit compose(const Circuit& a, const Circuit& b);

/// Reverses gate order and conjugate-transposes every one-qubit matrix.
Circuit adjoint(const Circuit& c);

/// Relabels wire i as permutation[i]; `permutation` must be a bijection on
/// [0, width).
Circuit map_qubits(const Circuit& c, std::span<const Qubit> permutation);

/// Circuit JSON, format tag "mcgate-circuit/1".
std::string to_json(const Circuit& c, int indent = -1);
Circuit from_json(const std::string& text);

/// OpenQASM 2.0 text over a single register q[width]. One-qubit gates without
/// a usable label are written as u3 from their ZYZ angles; the accumulated
/// global phase is recorded in a "// global phase:" comment.
std::string to_qasm(const Circuit& c);
/// Reads the subset of OpenQASM 2.0 that to_qasm emits, including the global
/// phase comment (applied to the first gate).
Circuit from_qasm(const std::string& text);

/// Shortest decimal representation that round-trips.
std::string format_double(double v);

/// Matrix that OpenQASM's qelib1.inc assigns to `label`, if the name is
/// known.
std::optional<Matrix2> qelib_matrix(const GateLabel& label);

}  // namespace mcgate
