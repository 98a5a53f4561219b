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

// Multi-controlled SU(2) gates built from four multi-controlled X gates.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mcgate/circuit.hpp"

namespace mcgate {

/// Singly-controlled U via U = e^{ia} A X B X C: two CNOTs, plus a phase
/// gate on the control when a != 0.
void append_controlled_u(Circuit& c, const Matrix2& u, Qubit control,
                         Qubit target);

/**
 * C^k W for W in SU(2) with real off-diagonal entries. With M = sqrt(W) and
 * X A^dag X A = M, the target sees A, X^x, A^dag, X^y, A, X^x, A^dag, X^y
 * where x and y are the ANDs of the two control halves (first ceil(k/2)
 * controls, then the rest). Each half borrows the other as dirty ancillas.
 * k = 1 uses the two-CNOT controlled form. W = I gives the empty circuit.
 */
Circuit mcsu2_real_secondary(unsigned width, const Matrix2& w,
                             std::span<const Qubit> controls, Qubit target);

/// W with real main diagonal: the above applied to H W H, between two H.
Circuit mcsu2_real_main(unsigned width, const Matrix2& w,
                        std::span<const Qubit> controls, Qubit target);

/// Any W in SU(2): W = Q D Q^dag, uncontrolled Q around C^k D.
Circuit mcsu2_general(unsigned width, const Matrix2& w,
                      std::span<const Qubit> controls, Qubit target);

struct Su2Request {
  unsigned width = 0;
  std::vector<Qubit> controls;
  /// (target, W) pairs; every W special-unitary, targets distinct.
  std::vector<std::pair<Qubit, Matrix2>> gates;
};

/**
 * Product of C^k W_i sharing one control set. The four MCX gates become
 * multi-target gates over all targets; each target gets its own A_i. Gates
 * with a real main diagonal are conjugated by H, any other by their
 * eigenbasis, all uncontrolled.
 */
Circuit mcsu2_multi_target(const Su2Request& req);

}  // namespace mcgate
