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

// Multi-controlled X gates: Toffoli variants and dirty-ancilla V-chains.

#pragma once

#include <span>
#include <vector>

#include "mcgate/circuit.hpp"

namespace mcgate {

/// Circuit counter keys. A multi-target Toffoli on nt wires counts as nt
/// "toffoli" entries.
inline constexpr const char* kToffoliCounter = "toffoli";
inline constexpr const char* kRpToffoliCounter = "rp_toffoli";

struct McxRequest {
  unsigned width = 0;
  std::vector<Qubit> controls;
  std::vector<Qubit> targets;
  /// Wires in an unknown state that may be borrowed and must be restored.
  std::vector<Qubit> dirty_ancillas;

  /// Throws InvalidArgument on out-of-range or overlapping wires.
  void validate() const;
};

/// H/T/CX Toffoli, 6 CNOTs.
Circuit toffoli(unsigned width, Qubit c1, Qubit c2, Qubit t);

/// Margolus gate: Toffoli up to a sign on one basis state, 3 CNOTs. The
/// circuit is an involution.
Circuit rp_toffoli(unsigned width, Qubit c1, Qubit c2, Qubit t);

/// Toffoli on targets[0]; each further target is fanned out with a CX on
/// either side, 2 nt + 4 CNOTs.
Circuit multi_target_toffoli(unsigned width, Qubit c1, Qubit c2,
                             std::span<const Qubit> targets);

/// k >= 3 controls, one target, k - 2 dirty ancillas (lowest indices used).
/// Throws Infeasible when too few ancillas are supplied.
Circuit mcx_dirty(const McxRequest& req);

/**
 * k >= 3 controls, nt >= 1 targets. The ancilla chain uses relative-phase
 * Toffolis whose phases cancel between the action and reset sweeps; the two
 * gates touching the targets are exact multi-target Toffolis. CNOT count
 * 8k + 4nt - 10.
 */
Circuit mcx_multi_target(const McxRequest& req);

/// k = 0: X on each target; k = 1: one CX per target; k = 2: multi-target
/// Toffoli; k >= 3: mcx_multi_target borrowing from `free_qubits`.
Circuit mcx_auto(unsigned width, std::span<const Qubit> controls,
                 std::span<const Qubit> targets,
                 std::span<const Qubit> free_qubits);

/// Appending forms of the above, used by the larger constructions.
void append_toffoli(Circuit& c, Qubit c1, Qubit c2, Qubit t);
void append_rp_toffoli(Circuit& c, Qubit c1, Qubit c2, Qubit t);
void append_multi_target_toffoli(Circuit& c, Qubit c1, Qubit c2,
                                 std::span<const Qubit> targets);
void append_mcx(Circuit& c, std::span<const Qubit> controls,
                std::span<const Qubit> targets,
                std::span<const Qubit> free_qubits);

}  // namespace mcgate
