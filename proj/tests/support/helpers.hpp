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

#include <random>
#include <vector>

#include "mcgate/circuit.hpp"
#include "support/reference.hpp"

namespace mcgate::testing {

inline Matrix2 random_u2(std::mt19937_64& rng) {
  const auto p = reference::random_u2_params(rng);
  return Matrix2::u3(p[0], p[1], p[2]) * std::polar(1.0, p[3]);
}

inline Matrix2 random_su2(std::mt19937_64& rng) {
  const auto p = reference::random_u2_params(rng);
  return Matrix2::rz(p[1]) * Matrix2::ry(p[0]) * Matrix2::rz(p[2]);
}

inline std::vector<Qubit> wires(unsigned from, unsigned count) {
  std::vector<Qubit> w;
  for (unsigned i = 0; i < count; ++i) w.push_back(from + i);
  return w;
}

// Target q0, controls q[k] .. q[1].
inline std::vector<Qubit> controls_for(unsigned k) {
  std::vector<Qubit> c;
  for (unsigned i = 0; i < k; ++i) c.push_back(k - i);
  return c;
}

}  // namespace mcgate::testing
