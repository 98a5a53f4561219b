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

#include "mcgate/mcx.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mcgate {

namespace {

void require_distinct(unsigned width, std::initializer_list<std::span<const Qubit>> groups,
                      const char* what) {
  std::set<Qubit> seen;
  for (auto g : groups) {
    for (Qubit q : g) {
      if (q >= width) {
        throw InvalidArgument(std::string(what) + ": qubit " +
                              std::to_string(q) + " out of range");
      }
      if (!seen.insert(q).second) {
        throw InvalidArgument(std::string(what) + ": qubit " +
                              std::to_string(q) + " used twice");
      }
    }
  }
}

// Outer half of the Margolus gate: conjugating CX(middle, t) by this block
// gives the relative-phase Toffoli.
void margolus_open(Circuit& c, Qubit outer, Qubit t) {
  c.ry(t, kPi / 4);
  c.cx(outer, t);
  c.ry(t, kPi / 4);
}

void margolus_close(Circuit& c, Qubit outer, Qubit t) {
  c.ry(t, -kPi / 4);
  c.cx(outer, t);
  c.ry(t, -kPi / 4);
}

// Relative-phase Toffoli ladder on the ancillas. Each level R_j appears on
// both sides of the inner ladder; since its outer half commutes with the
// inner gates, the pair costs 4 CNOTs instead of 6.
void append_ladder(Circuit& c, std::span<const Qubit> ctl,
                   std::span<const Qubit> anc) {
  const std::size_t k = ctl.size();
  for (std::size_t j = k - 1; j >= 3; --j) {
    margolus_open(c, ctl[j - 1], anc[j - 2]);
    c.cx(anc[j - 3], anc[j - 2]);
  }
  append_rp_toffoli(c, ctl[1], ctl[0], anc[0]);
  for (std::size_t j = 3; j <= k - 1; ++j) {
    c.cx(anc[j - 3], anc[j - 2]);
    margolus_close(c, ctl[j - 1], anc[j - 2]);
  }
  c.bump(kRpToffoliCounter, 2 * (k - 3));
}

std::vector<Qubit> pick_ancillas(std::span<const Qubit> pool, std::size_t need) {
  std::vector<Qubit> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < need) {
    throw Infeasible("mcx: " + std::to_string(need) +
                     " dirty ancillas required, " +
                     std::to_string(sorted.size()) + " available");
  }
  sorted.resize(need);
  return sorted;
}

}  // namespace

void McxRequest::validate() const {
  require_distinct(width, {controls, targets, dirty_ancillas}, "mcx request");
  if (targets.empty()) throw InvalidArgument("mcx request: no target");
}

void append_toffoli(Circuit& c, Qubit c1, Qubit c2, Qubit t) {
  c.h(t);
  c.cx(c2, t);
  c.tdg(t);
  c.cx(c1, t);
  c.t(t);
  c.cx(c2, t);
  c.tdg(t);
  c.cx(c1, t);
  c.t(c2);
  c.t(t);
  c.h(t);
  c.cx(c1, c2);
  c.t(c1);
  c.tdg(c2);
  c.cx(c1, c2);
  c.bump(kToffoliCounter);
}

void append_rp_toffoli(Circuit& c, Qubit c1, Qubit c2, Qubit t) {
  margolus_open(c, c2, t);
  c.cx(c1, t);
  margolus_close(c, c2, t);
  c.bump(kRpToffoliCounter);
}

void append_multi_target_toffoli(Circuit& c, Qubit c1, Qubit c2,
                                 std::span<const Qubit> targets) {
  const std::size_t nt = targets.size();
  if (nt == 0) throw InvalidArgument("multi-target Toffoli: no target");
  for (std::size_t i = nt - 1; i >= 1; --i) c.cx(targets[i - 1], targets[i]);
  append_toffoli(c, c1, c2, targets[0]);
  for (std::size_t i = 1; i < nt; ++i) c.cx(targets[i - 1], targets[i]);
  c.bump(kToffoliCounter, nt - 1);
}

Circuit toffoli(unsigned width, Qubit c1, Qubit c2, Qubit t) {
  const Qubit q[] = {c1, c2, t};
  require_distinct(width, {q}, "toffoli");
  Circuit c(width, "toffoli");
  append_toffoli(c, c1, c2, t);
  return c;
}

Circuit rp_toffoli(unsigned width, Qubit c1, Qubit c2, Qubit t) {
  const Qubit q[] = {c1, c2, t};
  require_distinct(width, {q}, "rp_toffoli");
  Circuit c(width, "rp_toffoli");
  append_rp_toffoli(c, c1, c2, t);
  return c;
}

Circuit multi_target_toffoli(unsigned width, Qubit c1, Qubit c2,
                             std::span<const Qubit> targets) {
  const Qubit q[] = {c1, c2};
  require_distinct(width, {q, targets}, "multi_target_toffoli");
  if (targets.empty()) throw InvalidArgument("multi_target_toffoli: no target");
  Circuit c(width, "multi_target_toffoli");
  append_multi_target_toffoli(c, c1, c2, targets);
  return c;
}

Circuit mcx_multi_target(const McxRequest& req) {
  req.validate();
  const std::size_t k = req.controls.size();
  if (k < 3) {
    throw InvalidArgument("mcx_multi_target: at least 3 controls required");
  }
  const auto anc = pick_ancillas(req.dirty_ancillas, k - 2);
  Circuit c(req.width, "mcx");
  const Qubit top = req.controls[k - 1];
  const Qubit last = anc[k - 3];
  for (int round = 0; round < 2; ++round) {
    append_multi_target_toffoli(c, top, last, req.targets);
    append_ladder(c, req.controls, anc);
  }
  return c;
}

Circuit mcx_dirty(const McxRequest& req) {
  if (req.targets.size() != 1) {
    throw InvalidArgument("mcx_dirty: exactly one target required");
  }
  return mcx_multi_target(req);
}

void append_mcx(Circuit& c, std::span<const Qubit> controls,
                std::span<const Qubit> targets,
                std::span<const Qubit> free_qubits) {
  switch (controls.size()) {
    case 0:
      for (Qubit t : targets) c.x(t);
      return;
    case 1:
      for (Qubit t : targets) c.cx(controls[0], t);
      return;
    case 2:
      append_multi_target_toffoli(c, controls[0], controls[1], targets);
      return;
    default: {
      McxRequest req{c.width(),
                     {controls.begin(), controls.end()},
                     {targets.begin(), targets.end()},
                     {free_qubits.begin(), free_qubits.end()}};
      c.append(mcx_multi_target(req));
    }
  }
}

Circuit mcx_auto(unsigned width, std::span<const Qubit> controls,
                 std::span<const Qubit> targets,
                 std::span<const Qubit> free_qubits) {
  require_distinct(width, {controls, targets, free_qubits}, "mcx_auto");
  if (targets.empty()) throw InvalidArgument("mcx_auto: no target");
  Circuit c(width, "mcx");
  append_mcx(c, controls, targets, free_qubits);
  return c;
}

}  // namespace mcgate
