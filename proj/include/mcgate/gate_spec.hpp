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

#include <string>

#include "mcgate/unitary.hpp"

namespace mcgate {

/// Radians: a number, "pi", or a product/quotient such as "-3*pi/4" or
/// "pi/2".
double parse_angle(const std::string& text);

/**
 * Named gate ("x", "h", "rx(pi/4)", "u3(a,b,c)", "phase(t)") or a JSON
 * matrix [[a, b], [c, d]] whose entries are numbers or [re, im] pairs.
 * The result must be unitary.
 */
Matrix2 parse_gate(const std::string& text);

}  // namespace mcgate
