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

#include "mcgate/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace mcgate {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first != last && *first == ' ') ++first;
  if (first != last && *first == '+') ++first;
  auto res = std::from_chars(first, last, v);
  while (res.ptr != last && *res.ptr == ' ') ++res.ptr;
  if (res.ec != std::errc{} || res.ptr != last) {
    throw InvalidArgument("cannot parse number '" + s + "'");
  }
  return v;
}

// Labels whose adjoint is another label.
GateLabel adjoint_label(const GateLabel& l) {
  static const std::map<std::string, std::string> swap = {
      {"h", "h"}, {"x", "x"},     {"y", "y"},   {"z", "z"},
      {"id", "id"}, {"s", "sdg"}, {"sdg", "s"}, {"t", "tdg"},
      {"tdg", "t"}};
  if (auto it = swap.find(l.name); it != swap.end() && l.params.empty()) {
    return {it->second, {}};
  }
  if ((l.name == "rx" || l.name == "ry" || l.name == "rz" || l.name == "u1" ||
       l.name == "p") &&
      l.params.size() == 1) {
    return {l.name, {-l.params[0]}};
  }
  if (l.name == "u3" && l.params.size() == 3) {
    return {l.name, {-l.params[0], -l.params[2], -l.params[1]}};
  }
  return {};
}

json matrix_to_json(const Matrix2& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(row);
  }
  return rows;
}

Matrix2 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidArgument("matrix must be a 2x2 array of [re, im] pairs");
  }
  Matrix2 m;
  for (int r = 0; r < 2; ++r) {
    const json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || row.size() != 2) {
      throw InvalidArgument("matrix must be a 2x2 array of [re, im] pairs");
    }
    for (int c = 0; c < 2; ++c) {
      const json& e = row.at(static_cast<std::size_t>(c));
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
          !e[1].is_number()) {
        throw InvalidArgument("matrix entry must be [re, im]");
      }
      m(r, c) = Complex{e[0].get<double>(), e[1].get<double>()};
    }
  }
  return m;
}

// Phase psi with m = e^{i psi} q, if the two agree up to phase.
std::optional<double> relative_phase(const Matrix2& m, const Matrix2& q) {
  int br = 0, bc = 0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (std::abs(q(r, c)) > std::abs(q(br, bc))) {
        br = r;
        bc = c;
      }
    }
  }
  const double psi = std::arg(m(br, bc) / q(br, bc));
  if (max_abs_diff(m, q * std::polar(1.0, psi)) > 1e-9) return std::nullopt;
  return psi;
}

}  // namespace

std::string GateLabel::str() const {
  std::string s = name;
  if (!params.empty()) {
    s += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += format_double(params[i]);
    }
    s += ')';
  }
  return s;
}

GateLabel GateLabel::parse(const std::string& text) {
  GateLabel l;
  const auto open = text.find('(');
  if (open == std::string::npos) {
    l.name = text;
    return l;
  }
  if (text.back() != ')') throw InvalidArgument("bad gate label '" + text + "'");
  l.name = text.substr(0, open);
  std::stringstream ss(text.substr(open + 1, text.size() - open - 2));
  std::string item;
  while (std::getline(ss, item, ',')) l.params.push_back(parse_double(item));
  return l;
}

std::optional<Matrix2> qelib_matrix(const GateLabel& l) {
  const auto& p = l.params;
  auto arity = [&](std::size_t n) { return p.size() == n; };
  if (l.name == "id" && arity(0)) return Matrix2::identity();
  if (l.name == "x" && arity(0)) return Matrix2::x();
  if (l.name == "y" && arity(0)) return Matrix2::y();
  if (l.name == "z" && arity(0)) return Matrix2::z();
  if (l.name == "h" && arity(0)) return Matrix2::h();
  if (l.name == "s" && arity(0)) return Matrix2::s();
  if (l.name == "sdg" && arity(0)) return Matrix2::s().adjoint();
  if (l.name == "t" && arity(0)) return Matrix2::t();
  if (l.name == "tdg" && arity(0)) return Matrix2::t().adjoint();
  if (l.name == "rx" && arity(1)) return Matrix2::rx(p[0]);
  if (l.name == "ry" && arity(1)) return Matrix2::ry(p[0]);
  // qelib1 defines rz(phi) as u1(phi).
  if ((l.name == "rz" || l.name == "u1") && arity(1)) {
    return Matrix2::phase(p[0]);
  }
  if (l.name == "u2" && arity(2)) return Matrix2::u3(kPi / 2, p[0], p[1]);
  if (l.name == "u3" && arity(3)) return Matrix2::u3(p[0], p[1], p[2]);
  return std::nullopt;
}

Circuit::Circuit(unsigned width, std::string name)
    : width_(width), name_(std::move(name)) {
  if (width == 0) throw InvalidArgument("circuit width must be positive");
}

std::uint64_t Circuit::counter(const std::string& key) const {
  auto it = counters_.find(key);
  return it == counters_.end() ? 0 : it->second;
}

void Circuit::bump(const std::string& key, std::uint64_t by) {
  counters_[key] += by;
}

void Circuit::check_qubit(Qubit q) const {
  if (q >= width_) {
    throw InvalidArgument("qubit " + std::to_string(q) +
                          " out of range for width " + std::to_string(width_));
  }
}

Circuit& Circuit::add(Gate g) {
  if (auto* one = std::get_if<OneQubitGate>(&g)) {
    check_qubit(one->target);
    require_unitary(one->matrix, "one-qubit gate");
  } else {
    const auto& cx = std::get<CnotGate>(g);
    check_qubit(cx.control);
    check_qubit(cx.target);
    if (cx.control == cx.target) {
      throw InvalidArgument("cx control and target must differ");
    }
  }
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::add_1q(Qubit q, const Matrix2& m, GateLabel label) {
  return add(OneQubitGate{q, m, std::move(label)});
}

Circuit& Circuit::cx(Qubit control, Qubit target) {
  return add(CnotGate{control, target});
}

Circuit& Circuit::h(Qubit q) { return add_1q(q, Matrix2::h(), {"h", {}}); }
Circuit& Circuit::x(Qubit q) { return add_1q(q, Matrix2::x(), {"x", {}}); }
Circuit& Circuit::t(Qubit q) { return add_1q(q, Matrix2::t(), {"t", {}}); }
Circuit& Circuit::tdg(Qubit q) {
  return add_1q(q, Matrix2::t().adjoint(), {"tdg", {}});
}
Circuit& Circuit::rx(Qubit q, double theta) {
  return add_1q(q, Matrix2::rx(theta), {"rx", {theta}});
}
Circuit& Circuit::ry(Qubit q, double theta) {
  return add_1q(q, Matrix2::ry(theta), {"ry", {theta}});
}
Circuit& Circuit::rz(Qubit q, double theta) {
  // Our Rz is traceless; qelib1's rz differs by a phase, which to_qasm
  // accounts for.
  return add_1q(q, Matrix2::rz(theta), {"rz", {theta}});
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ != width_) {
    throw InvalidArgument("append: width mismatch");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  for (const auto& [k, v] : other.counters_) counters_[k] += v;
  return *this;
}

Circuit& Circuit::append_on(const Circuit& other, std::span<const Qubit> wires) {
  if (wires.size() != other.width_) {
    throw InvalidArgument("append_on: wire list does not match circuit width");
  }
  for (Qubit w : wires) check_qubit(w);
  for (const Gate& g : other.gates_) {
    if (const auto* one = std::get_if<OneQubitGate>(&g)) {
      OneQubitGate copy = *one;
      copy.target = wires[one->target];
      gates_.push_back(std::move(copy));
    } else {
      const auto& c = std::get<CnotGate>(g);
      gates_.push_back(CnotGate{wires[c.control], wires[c.target]});
    }
  }
  for (const auto& [k, v] : other.counters_) counters_[k] += v;
  return *this;
}

std::size_t Circuit::cnot_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(),
      [](const Gate& g) { return std::holds_alternative<CnotGate>(g); }));
}

std::size_t Circuit::one_qubit_count() const {
  return gates_.size() - cnot_count();
}

std::size_t Circuit::depth() const {
  std::vector<std::size_t> level(width_, 0);
  std::size_t best = 0;
  for (const Gate& g : gates_) {
    if (const auto* one = std::get_if<OneQubitGate>(&g)) {
      best = std::max(best, ++level[one->target]);
    } else {
      const auto& c = std::get<CnotGate>(g);
      const std::size_t d = std::max(level[c.control], level[c.target]) + 1;
      level[c.control] = level[c.target] = d;
      best = std::max(best, d);
    }
  }
  return best;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

Circuit adjoint(const Circuit& c) {
  Circuit out(c.width(), c.name());
  const auto& gs = c.gates();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
    if (const auto* one = std::get_if<OneQubitGate>(&*it)) {
      out.add(OneQubitGate{one->target, one->matrix.adjoint(),
                           adjoint_label(one->label)});
    } else {
      out.add(*it);
    }
  }
  for (const auto& [k, v] : c.counters()) out.bump(k, v);
  return out;
}

Circuit map_qubits(const Circuit& c, std::span<const Qubit> permutation) {
  if (permutation.size() != c.width()) {
    throw InvalidArgument("map_qubits: permutation size must equal width");
  }
  std::vector<bool> seen(c.width(), false);
  for (Qubit q : permutation) {
    if (q >= c.width() || seen[q]) {
      throw InvalidArgument("map_qubits: not a bijection on [0, width)");
    }
    seen[q] = true;
  }
  Circuit out(c.width(), c.name());
  out.append_on(c, permutation);
  return out;
}

std::string to_json(const Circuit& c, int indent) {
  json gates = json::array();
  for (const Gate& g : c.gates()) {
    if (const auto* one = std::get_if<OneQubitGate>(&g)) {
      json j = {{"kind", "u1q"},
                {"target", one->target},
                {"matrix", matrix_to_json(one->matrix)}};
      if (!one->label.empty()) j["label"] = one->label.str();
      gates.push_back(std::move(j));
    } else {
      const auto& x = std::get<CnotGate>(g);
      gates.push_back({{"kind", "cx"}, {"control", x.control}, {"target", x.target}});
    }
  }
  json doc = {{"format", "mcgate-circuit/1"},
              {"width", c.width()},
              {"gates", std::move(gates)}};
  if (!c.name().empty()) doc["name"] = c.name();
  if (!c.counters().empty()) doc["counters"] = c.counters();
  return doc.dump(indent);
}

Circuit from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed circuit JSON: ") + e.what());
  }
  try {
    if (doc.value("format", std::string{}) != "mcgate-circuit/1") {
      throw InvalidArgument("circuit JSON: missing or unknown format tag");
    }
    const auto width = doc.at("width").get<unsigned>();
    Circuit c(width, doc.value("name", std::string{}));
    for (const json& g : doc.at("gates")) {
      const auto kind = g.at("kind").get<std::string>();
      if (kind == "cx") {
        c.cx(g.at("control").get<Qubit>(), g.at("target").get<Qubit>());
      } else if (kind == "u1q") {
        GateLabel label;
        if (g.contains("label")) {
          label = GateLabel::parse(g.at("label").get<std::string>());
        }
        c.add_1q(g.at("target").get<Qubit>(), matrix_from_json(g.at("matrix")),
                 std::move(label));
      } else {
        throw InvalidArgument("circuit JSON: unknown gate kind '" + kind + "'");
      }
    }
    if (doc.contains("counters")) {
      for (const auto& [k, v] : doc.at("counters").items()) {
        c.bump(k, v.get<std::uint64_t>());
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed circuit JSON: ") + e.what());
  }
}

std::string to_qasm(const Circuit& c) {
  std::ostringstream body;
  double global_phase = 0.0;
  for (const Gate& g : c.gates()) {
    if (const auto* one = std::get_if<OneQubitGate>(&g)) {
      GateLabel emit = one->label;
      std::optional<double> psi;
      if (auto q = qelib_matrix(emit)) psi = relative_phase(one->matrix, *q);
      if (!psi) {
        const ZyzAngles z = zyz_decompose(one->matrix);
        emit = {"u3", {z.gamma, z.beta, z.delta}};
        psi = relative_phase(one->matrix, *qelib_matrix(emit));
      }
      global_phase += *psi;
      body << emit.str() << " q[" << one->target << "];\n";
    } else {
      const auto& x = std::get<CnotGate>(g);
      body << "cx q[" << x.control << "],q[" << x.target << "];\n";
    }
  }
  global_phase = std::remainder(global_phase, 2 * kPi);
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (!c.name().empty()) os << "// " << c.name() << "\n";
  os << "// global phase: " << format_double(global_phase) << "\n";
  os << "qreg q[" << c.width() << "];\n" << body.str();
  return os.str();
}

Circuit from_qasm(const std::string& text) {
  static const std::regex qreg_re(R"(^qreg\s+q\s*\[\s*(\d+)\s*\]\s*;$)");
  static const std::regex cx_re(
      R"(^cx\s+q\s*\[\s*(\d+)\s*\]\s*,\s*q\s*\[\s*(\d+)\s*\]\s*;$)");
  static const std::regex one_re(
      R"(^([a-z][a-z0-9]*)\s*(\(([^)]*)\))?\s+q\s*\[\s*(\d+)\s*\]\s*;$)");
  static const std::string phase_tag = "// global phase:";

  std::optional<Circuit> circ;
  double global_phase = 0.0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line.rfind(phase_tag, 0) == 0) {
      global_phase = parse_double(line.substr(phase_tag.size()));
      continue;
    }
    if (line.rfind("//", 0) == 0 || line.rfind("OPENQASM", 0) == 0 ||
        line.rfind("include", 0) == 0) {
      continue;
    }
    std::smatch m;
    auto fail = [&](const std::string& why) {
      throw InvalidArgument("QASM line " + std::to_string(lineno) + ": " + why);
    };
    if (std::regex_match(line, m, qreg_re)) {
      if (circ) fail("only one quantum register is supported");
      circ.emplace(static_cast<unsigned>(std::stoul(m[1])));
      continue;
    }
    if (!circ) fail("gate before qreg declaration");
    if (std::regex_match(line, m, cx_re)) {
      circ->cx(static_cast<Qubit>(std::stoul(m[1])),
               static_cast<Qubit>(std::stoul(m[2])));
    } else if (std::regex_match(line, m, one_re)) {
      GateLabel label{m[1], {}};
      if (m[2].matched) {
        std::stringstream ss(m[3]);
        std::string item;
        while (std::getline(ss, item, ',')) label.params.push_back(parse_double(item));
      }
      auto mat = qelib_matrix(label);
      if (!mat) fail("unsupported gate '" + label.str() + "'");
      circ->add_1q(static_cast<Qubit>(std::stoul(m[4])), *mat, std::move(label));
    } else {
      fail("unsupported statement '" + line + "'");
    }
  }
  if (!circ) throw InvalidArgument("QASM: no qreg declaration");
  if (global_phase != 0.0) {
    Circuit out(circ->width(), circ->name());
    out.add_1q(0, Matrix2::identity() * std::polar(1.0, global_phase));
    out.append(*circ);
    return out;
  }
  return *circ;
}

}  // namespace mcgate
