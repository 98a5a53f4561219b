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

#include "mcgate/mcu.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mcgate/cost_model.hpp"
#include "mcgate/mcsu2.hpp"

namespace mcgate {

namespace {

using json = nlohmann::json;

// Appends one half-triangle on positions [0, num). step +1 walks the pairs
// by decreasing control + target, step -1 by increasing.
void append_half(std::vector<LayoutGate>& out, unsigned num, bool first,
                 int step) {
  struct Pair {
    unsigned control, target;
  };
  const unsigned start = step == 1 ? 0 : 1;
  std::vector<Pair> pairs;
  for (unsigned t = 0; t < num; ++t) {
    for (unsigned c = start; c < t; ++c) pairs.push_back({c, t});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](Pair a, Pair b) {
    return step == 1 ? a.control + a.target > b.control + b.target
                     : a.control + a.target < b.control + b.target;
  });
  std::vector<LayoutGate> central;
  for (const Pair& p : pairs) {
    LayoutGate g;
    g.control = p.control;
    g.target = p.target;
    g.exponent = p.target - p.control - (p.control == 0 ? 1 : 0);
    g.sign = (p.control == 0 && !first ? -1 : 1) * step;
    g.kind = p.target == num - 1 && first ? LayoutGate::Kind::root
                                          : LayoutGate::Kind::rx;
    // Once (0, t) is reached, t is no longer used as a control in this
    // half, so the central gates can be gathered at its end.
    (g.central() ? central : out).push_back(g);
  }
  out.insert(out.end(), central.begin(), central.end());
}

void check_wires(unsigned width, std::span<const Qubit> controls, Qubit target,
                 const char* what) {
  std::set<Qubit> seen;
  auto take = [&](Qubit q) {
    if (q >= width || !seen.insert(q).second) {
      throw InvalidArgument(std::string(what) + ": bad or repeated qubit " +
                            std::to_string(q));
    }
  };
  for (Qubit q : controls) take(q);
  take(target);
}

unsigned resolve_width(unsigned width, std::span<const Qubit> controls,
                       Qubit target) {
  if (width != 0) return width;
  Qubit top = target;
  for (Qubit q : controls) top = std::max(top, q);
  return top + 1;
}

void append_layout_gate(Circuit& c, const BoundLayout& b, const LayoutGate& g) {
  append_controlled_u(c, g.matrix(b.u), b.wire(g.control), b.wire(g.target));
}

enum class CentralMode { extend, drop_single, drop_multi };

// Lowers a layout. Non-central gates are always singly controlled; the
// central gates are controlled by b1 plus `extras`.
Circuit lower(const BoundLayout& b, std::span<const Qubit> extras,
              CentralMode mode) {
  check_wires(b.width, b.base, b.target, "layout");
  {
    std::vector<Qubit> all(b.base.begin(), b.base.end());
    all.insert(all.end(), extras.begin(), extras.end());
    check_wires(b.width, all, b.target, "extend_controls");
  }
  std::vector<Qubit> ctl{b.wire(0)};
  ctl.insert(ctl.end(), extras.begin(), extras.end());

  Circuit c(b.width, "mcu");
  // Central gates of one triangle are contiguous, so a multi-target block
  // is flushed at the first non-central gate after them.
  Su2Request block{b.width, ctl, {}};
  auto flush = [&] {
    if (!block.gates.empty()) c.append(mcsu2_multi_target(block));
    block.gates.clear();
  };
  for (const auto* tri : {&b.layout.first_triangle, &b.layout.second_triangle}) {
    for (const LayoutGate& g : *tri) {
      const bool root = g.kind == LayoutGate::Kind::root;
      if (!g.central() || (extras.empty() && mode == CentralMode::extend)) {
        flush();
        append_layout_gate(c, b, g);
      } else if (root && mode != CentralMode::extend) {
        // Dropped: this is the approximation.
      } else if (root) {
        c.append(mcu_exact(g.matrix(b.u), ctl, b.wire(g.target), b.width)
                     .circuit);
      } else if (mode == CentralMode::drop_multi) {
        block.gates.push_back({b.wire(g.target), g.matrix(b.u)});
      } else {
        c.append(mcsu2_real_main(b.width, g.matrix(b.u), ctl, b.wire(g.target)));
      }
    }
    flush();
  }
  return c;
}

BoundLayout bind(const Matrix2& u, std::span<const Qubit> base, Qubit target,
                 unsigned width) {
  BoundLayout b;
  b.layout = make_layout(static_cast<unsigned>(base.size()));
  b.u = u;
  b.width = width;
  b.base.assign(base.begin(), base.end());
  b.target = target;
  return b;
}

json gate_json(const LayoutGate& g) {
  return {{"control", g.control},
          {"target", g.target},
          {"kind", g.kind == LayoutGate::Kind::root ? "root" : "rx"},
          {"sign", g.sign},
          {"exponent", g.exponent}};
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) {
    throw InvalidArgument("epsilon must lie in (0, 2)");
  }
}

DecompositionReport approximate(const Matrix2& u,
                                std::span<const Qubit> controls, Qubit target,
                                double epsilon, unsigned width,
                                CentralMode mode) {
  require_unitary(u, "mcu_approx");
  require_epsilon(epsilon);
  if (controls.empty()) throw InvalidArgument("mcu_approx: no controls");
  width = resolve_width(width, controls, target);
  check_wires(width, controls, target, "mcu_approx");

  const ApproxPlan plan = make_plan(u, epsilon);
  const std::size_t k = controls.size();
  if (k <= plan.n_base) {
    DecompositionReport r = mcu_exact(u, controls, target, width);
    r.plan = plan;
    return r;
  }
  const auto base = controls.first(plan.n_base);
  const auto extras = controls.subspan(plan.n_base);
  const BoundLayout b = bind(u, base, target, width);

  DecompositionReport r;
  r.circuit = lower(b, extras, mode);
  r.circuit.set_name(mode == CentralMode::drop_multi ? "mcu_approx_opt"
                                                     : "mcu_approx");
  r.strategy = mode == CentralMode::drop_multi ? "approx-thm3" : "approx-thm1";
  r.n = static_cast<unsigned>(k + 1);
  r.cnot_count = r.circuit.cnot_count();
  r.bound = mode == CentralMode::drop_multi
                ? cost::thm3_bound(r.n, plan.n_base)
                : cost::thm1_bound(r.n, plan.n_base);
  r.bound_satisfied = static_cast<std::int64_t>(r.cnot_count) <= *r.bound;
  r.plan = plan;
  r.layout = b.layout;
  r.b1 = base[0];
  r.extras.assign(extras.begin(), extras.end());
  return r;
}

}  // namespace

Matrix2 LayoutGate::matrix(const Matrix2& u) const {
  if (kind == Kind::rx) {
    return Matrix2::rx(sign * kPi / std::ldexp(1.0, static_cast<int>(exponent)));
  }
  const Matrix2 r = root_pow2(u, exponent);
  return sign > 0 ? r : r.adjoint();
}

std::vector<LayoutGate> TriangleLayout::central_column() const {
  std::vector<LayoutGate> out;
  for (const auto* tri : {&first_triangle, &second_triangle}) {
    for (const LayoutGate& g : *tri) {
      if (g.central()) out.push_back(g);
    }
  }
  return out;
}

std::string TriangleLayout::str() const {
  std::ostringstream out;
  out << "n_base " << n_base << '\n';
  int tri = 1;
  for (const auto* gates : {&first_triangle, &second_triangle}) {
    for (const LayoutGate& g : *gates) {
      out << tri << ' ' << (g.kind == LayoutGate::Kind::root ? "root" : "rx")
          << ' ' << g.control << ' ' << g.target << ' '
          << (g.sign > 0 ? '+' : '-') << ' ' << g.exponent
          << (g.central() ? " central" : "") << '\n';
    }
    ++tri;
  }
  return out.str();
}

TriangleLayout make_layout(unsigned n_base) {
  if (n_base == 0) throw InvalidArgument("make_layout: n_base must be >= 1");
  TriangleLayout l;
  l.n_base = n_base;
  const unsigned n = n_base + 1;
  append_half(l.first_triangle, n, true, 1);
  append_half(l.first_triangle, n, true, -1);
  append_half(l.second_triangle, n - 1, false, 1);
  append_half(l.second_triangle, n - 1, false, -1);
  return l;
}

Qubit BoundLayout::wire(unsigned position) const {
  if (position < base.size()) return base[position];
  if (position == base.size()) return target;
  throw InvalidArgument("layout position out of range");
}

Circuit extend_controls(const BoundLayout& layout,
                        std::span<const Qubit> extra_controls) {
  return lower(layout, extra_controls, CentralMode::extend);
}

std::string DecompositionReport::to_json(int indent) const {
  json j;
  j["strategy"] = strategy;
  j["n"] = n;
  j["cnot_count"] = cnot_count;
  j["bound"] = bound ? json(*bound) : json(nullptr);
  j["bound_satisfied"] = bound_satisfied;
  j["oracle_error"] = oracle_error ? json(*oracle_error) : json(nullptr);
  if (plan) {
    j["plan"] = {{"theta", plan->theta},
                 {"epsilon", plan->epsilon},
                 {"n_base", plan->n_base},
                 {"N", plan->big_n},
                 {"predicted_error", plan->predicted_error}};
  } else {
    j["plan"] = nullptr;
  }
  json lay;
  lay["n_base"] = layout.n_base;
  lay["first_triangle"] = json::array();
  lay["second_triangle"] = json::array();
  for (const auto& g : layout.first_triangle) {
    lay["first_triangle"].push_back(gate_json(g));
  }
  for (const auto& g : layout.second_triangle) {
    lay["second_triangle"].push_back(gate_json(g));
  }
  j["layout"] = lay;
  j["circuit"] = json::parse(mcgate::to_json(circuit));
  return j.dump(indent);
}

DecompositionReport mcu_exact(const Matrix2& u, std::span<const Qubit> controls,
                              Qubit target, unsigned width) {
  require_unitary(u, "mcu_exact");
  if (controls.empty()) throw InvalidArgument("mcu_exact: no controls");
  width = resolve_width(width, controls, target);
  check_wires(width, controls, target, "mcu_exact");
  const BoundLayout b = bind(u, controls, target, width);

  DecompositionReport r;
  r.circuit = lower(b, {}, CentralMode::extend);
  r.circuit.set_name("mcu_exact");
  r.strategy = "exact";
  r.n = static_cast<unsigned>(controls.size() + 1);
  r.cnot_count = r.circuit.cnot_count();
  if (r.n >= 3) {
    r.bound = cost::exact_count(r.n);
    r.bound_satisfied = static_cast<std::int64_t>(r.cnot_count) <= *r.bound;
  }
  r.layout = b.layout;
  return r;
}

DecompositionReport mcu_approx(const Matrix2& u,
                               std::span<const Qubit> controls, Qubit target,
                               double epsilon, unsigned width) {
  return approximate(u, controls, target, epsilon, width,
                     CentralMode::drop_single);
}

DecompositionReport mcu_approx_opt(const Matrix2& u,
                                   std::span<const Qubit> controls,
                                   Qubit target, double epsilon,
                                   unsigned width) {
  return approximate(u, controls, target, epsilon, width,
                     CentralMode::drop_multi);
}

DecompositionReport mcu_auto(const Matrix2& u, std::span<const Qubit> controls,
                             Qubit target, std::optional<double> epsilon,
                             unsigned width) {
  if (!epsilon) return mcu_exact(u, controls, target, width);
  require_unitary(u, "mcu_auto");
  require_epsilon(*epsilon);
  const ApproxPlan plan = make_plan(u, *epsilon);
  const auto k = static_cast<cost::Count>(controls.size());
  const cost::Count nb = plan.n_base;
  if (k <= nb) {
    DecompositionReport r = mcu_exact(u, controls, target, width);
    r.plan = plan;
    return r;
  }
  const cost::Count exact = cost::built::exact(k);
  const cost::Count thm3 = cost::built::approx_thm3(k, nb);
  const cost::Count thm1 = cost::built::approx_thm1(k, nb);
  if (exact <= thm3 && exact <= thm1) {
    DecompositionReport r = mcu_exact(u, controls, target, width);
    r.plan = plan;
    return r;
  }
  if (thm3 <= thm1) return mcu_approx_opt(u, controls, target, *epsilon, width);
  return mcu_approx(u, controls, target, *epsilon, width);
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::exact:
      return "exact";
    case Strategy::approx_thm1:
      return "approx-thm1";
    case Strategy::approx_thm3:
      return "approx-thm3";
    case Strategy::automatic:
      return "auto";
  }
  return "auto";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "exact") return Strategy::exact;
  if (name == "approx-thm1") return Strategy::approx_thm1;
  if (name == "approx-thm3") return Strategy::approx_thm3;
  if (name == "auto") return Strategy::automatic;
  throw InvalidArgument("unknown strategy '" + name + "'");
}

DecompositionReport decompose(Strategy s, const Matrix2& u,
                              std::span<const Qubit> controls, Qubit target,
                              std::optional<double> epsilon, unsigned width) {
  switch (s) {
    case Strategy::exact:
      return mcu_exact(u, controls, target, width);
    case Strategy::approx_thm1:
    case Strategy::approx_thm3:
      if (!epsilon) {
        throw InvalidArgument(strategy_name(s) + " requires an epsilon");
      }
      return s == Strategy::approx_thm1
                 ? mcu_approx(u, controls, target, *epsilon, width)
                 : mcu_approx_opt(u, controls, target, *epsilon, width);
    case Strategy::automatic:
      return mcu_auto(u, controls, target, epsilon, width);
  }
  throw InvalidArgument("unknown strategy");
}

}  // namespace mcgate
