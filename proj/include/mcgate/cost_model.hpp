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

// Closed-form CNOT counts. n is always the number of qubits the gate acts
// on, i.e. controls + targets.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcgate/unitary.hpp"

namespace mcgate::cost {

using Count = std::int64_t;

/// 4n^2 - 12n + 10, n >= 3.
Count exact_count(Count n);

/// Recursion depth used by the approximate baseline: ceil(log2(1/eps)).
Count barenco_levels(double epsilon);
/// -16k^2 - 60k + 32nk with k = barenco_levels(eps); eps in (0, 1) and
/// n - k - 1 >= 0.
Count barenco_iten_count(Count n, double epsilon);

/// -28(nb-1)^2 + 2(nb-1)(16n-40), n >= nb >= 1.
Count thm1_bound(Count n, Count nb);
/// 4(nb-1)^2 + 32n - 112, n >= nb >= 1. The bound is attained from
/// n = nb + 6 on; below that the construction is cheaper.
Count thm3_bound(Count n, Count nb);

Count su2_single_bound(Count n);
/// 20n - 38, or 20n - 42 for even n.
Count su2_general_quoted(Count n);
Count su2_multi_bound(Count n, Count nt);
/// 2nt + 4
Count toffoli_mt(Count nt);
/// Toffoli-class gates in the dirty-ancilla chain: 2(2k + nt - 5).
Count mcx_mt_c2x(Count k, Count nt);

/// Exact CNOT counts of the constructions in this library.
namespace built {
Count mcx(Count k, Count nt);
/// Multi-controlled SU(2) on nt targets, k controls, generic gates.
Count mcsu2(Count k, Count nt);
Count exact(Count k);
Count approx_thm1(Count k, Count nb);
Count approx_thm3(Count k, Count nb);
}  // namespace built

/// Base controls for the worst-case eigenphase pi.
unsigned worst_case_base_controls(double epsilon);

struct CostRow {
  Count n = 0;
  std::optional<Count> exact;
  std::optional<Count> thm1;
  std::optional<Count> thm3;
  std::optional<Count> barenco_iten;
  Count su2_single = 0;
  Count su2_multi = 0;
  /// Filled by callers that build circuits.
  std::vector<std::optional<Count>> measured;
};

struct CostTable {
  double epsilon = 0;
  unsigned n_base = 0;
  Count barenco_levels = 0;
  Count nt = 1;
  std::vector<std::string> measured_columns;
  std::vector<CostRow> rows;

  /// Header "n,exact,thm1,thm3,barenco_iten,su2_single,su2_multi" plus any
  /// measured columns. Cells outside a formula's domain are empty.
  std::string to_csv() const;
};

CostTable compare_table(Count n_from, Count n_to, double epsilon,
                        Count nt = 1);

/// Least n with thm3_bound(n, nb) < exact_count(n), nb from epsilon.
Count crossover_vs_exact(double epsilon);

}  // namespace mcgate::cost
