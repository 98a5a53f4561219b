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

// Dense simulation used as the ground truth for every synthesized circuit.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcgate/circuit.hpp"

namespace mcgate {

/// Width guards. Defaults are laptop-safe; MCGATE_MAX_ORACLE_QUBITS
/// overrides both.
struct OracleLimits {
  unsigned full_max = 14;
  unsigned statevector_max = 24;

  static OracleLimits from_env();
};

class StateVector {
 public:
  /// |0...0> on `width` qubits.
  explicit StateVector(unsigned width);
  static StateVector basis(unsigned width, std::uint64_t index);

  unsigned width() const { return width_; }
  std::uint64_t dim() const { return std::uint64_t{1} << width_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::uint64_t i) const { return amps_[i]; }

  void apply_1q(Qubit target, const Matrix2& m);
  void apply_cx(Qubit control, Qubit target);
  void apply(const Gate& g);

  double norm() const;
  /// max_i |a_i - b_i|
  double max_abs_diff(const StateVector& other) const;

 private:
  unsigned width_;
  std::vector<Complex> amps_;
};

/// Applies the circuit gate by gate. Runs of one-qubit gates on the same wire
/// are fused before simulation.
StateVector apply(const Circuit& c, StateVector state,
                  const OracleLimits& limits = OracleLimits::from_env());

/// Square complex matrix, column-major.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::uint64_t dim);
  static DenseMatrix identity(std::uint64_t dim);

  std::uint64_t dim() const { return dim_; }
  Complex operator()(std::uint64_t r, std::uint64_t c) const {
    return data_[c * dim_ + r];
  }
  Complex& operator()(std::uint64_t r, std::uint64_t c) {
    return data_[c * dim_ + r];
  }
  DenseMatrix operator*(const DenseMatrix& o) const;
  double max_abs_diff(const DenseMatrix& o) const;

 private:
  std::uint64_t dim_;
  std::vector<Complex> data_;
};

/// Column j is apply(c, |j>).
DenseMatrix full_unitary(const Circuit& c,
                         const OracleLimits& limits = OracleLimits::from_env());

/**
 * Ideal multi-controlled, possibly multi-target operator: every target gets
 * its own matrix when all controls are |1>, otherwise the identity.
 */
struct ControlSpec {
  std::vector<Qubit> controls;
  std::vector<std::pair<Qubit, Matrix2>> targets;

  void validate(unsigned width) const;
  bool active(std::uint64_t basis_index) const;
  StateVector apply_to_basis(unsigned width, std::uint64_t basis_index) const;
  DenseMatrix dense(unsigned width,
                    const OracleLimits& limits = OracleLimits::from_env()) const;
};

ControlSpec ideal_mcu(const Matrix2& u, std::vector<Qubit> controls,
                      Qubit target);

/// Analytic behaviour of a circuit whose central n_b-root gate was dropped:
/// the circuit is exact when b1 or an extra control is |0>, and otherwise
/// leaves U^{-1/N} (N = 2^(n_b - 1)) on the target relative to the ideal.
struct DroppedRootModel {
  Matrix2 u;
  unsigned n_base = 1;
  Qubit b1 = 0;
  std::vector<Qubit> extras;

  /// Target action expected for a control assignment.
  Matrix2 expected_action(const std::vector<Qubit>& controls,
                          std::uint64_t basis_index) const;
};

struct PatternResult {
  std::string name;
  std::uint64_t basis_index = 0;  // target bit cleared
  /// Spectral norm of (measured target block - ideal block), or the leakage
  /// out of the block if that is larger.
  double error_vs_ideal = 0.0;
  std::optional<double> error_vs_expected;
};

/// Patterns: all controls active, each single control inactive, all
/// inactive. Wires outside the spec start in |0>. Requires a single target.
std::vector<PatternResult> control_patterns(
    const Circuit& c, const ControlSpec& ideal,
    const std::optional<DroppedRootModel>& model = std::nullopt,
    const OracleLimits& limits = OracleLimits::from_env());

struct DistanceMode {
  enum class Kind { full, sampled_columns, control_patterns };
  Kind kind = Kind::full;
  std::size_t columns = 64;
  std::uint64_t seed = 0x5eed;

  static DistanceMode full() { return {}; }
  static DistanceMode sampled(std::size_t columns = 64,
                              std::uint64_t seed = 0x5eed) {
    return {Kind::sampled_columns, columns, seed};
  }
  static DistanceMode patterns() { return {Kind::control_patterns}; }
};

/**
 * full / sampled_columns: max entrywise |difference| over the chosen columns
 * (all columns, or `columns` seeded basis inputs that always include the
 * all-controls-active inputs). control_patterns: max error_vs_ideal over
 * control_patterns().
 */
double distance(const Circuit& c, const ControlSpec& ideal,
                const DistanceMode& mode,
                const OracleLimits& limits = OracleLimits::from_env());

}  // namespace mcgate
