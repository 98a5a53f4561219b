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

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcgate/cost_model.hpp"
#include "mcgate/gate_spec.hpp"
#include "mcgate/mcu.hpp"
#include "mcgate/oracle.hpp"

namespace mcgate::cli {

namespace {

constexpr double kExactVerifyTol = 1e-9;

struct VerifyMode {
  bool off = false;
  DistanceMode mode;
  std::string text;
};

VerifyMode parse_verify(const std::string& text) {
  VerifyMode v;
  v.text = text;
  if (text == "off") {
    v.off = true;
  } else if (text == "full") {
    v.mode = DistanceMode::full();
  } else if (text == "patterns") {
    v.mode = DistanceMode::patterns();
  } else if (text.rfind("sampled", 0) == 0) {
    // sampled[:N[:seed]]
    std::size_t columns = 64;
    std::uint64_t seed = DistanceMode{}.seed;
    std::stringstream ss(text.substr(7));
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    try {
      if (parts.size() > 3 || (!parts.empty() && !parts[0].empty())) {
        throw InvalidArgument("");
      }
      if (parts.size() >= 2) columns = std::stoull(parts[1]);
      if (parts.size() == 3) seed = std::stoull(parts[2]);
    } catch (const std::exception&) {
      throw InvalidArgument("bad verify mode '" + text +
                            "', want sampled:N:seed");
    }
    if (columns == 0) throw InvalidArgument("sampled mode needs N >= 1");
    v.mode = DistanceMode::sampled(columns, seed);
  } else {
    throw InvalidArgument("bad verify mode '" + text + "'");
  }
  return v;
}

// Target on q0; controls q[k], ..., q[1], so b1 is the highest wire.
std::vector<Qubit> control_wires(unsigned k) {
  std::vector<Qubit> c;
  for (unsigned i = 0; i < k; ++i) c.push_back(k - i);
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

Circuit load_circuit(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return from_qasm(text);
}

void check_epsilon(const std::optional<double>& eps) {
  if (eps && !(*eps > 0.0 && *eps < 2.0)) {
    throw InvalidArgument("--epsilon must lie in (0, 2)");
  }
}

// Model of the dropped root for pattern reports, when one applies.
std::optional<DroppedRootModel> dropped_root(const Matrix2& u, unsigned k,
                                             double epsilon) {
  const ApproxPlan plan = make_plan(u, epsilon);
  if (k <= plan.n_base) return std::nullopt;
  const auto ctl = control_wires(k);
  DroppedRootModel m;
  m.u = u;
  m.n_base = plan.n_base;
  m.b1 = ctl[0];
  m.extras.assign(ctl.begin() + plan.n_base, ctl.end());
  return m;
}

double measure(const Circuit& c, const ControlSpec& ideal, const VerifyMode& v,
               const std::optional<DroppedRootModel>& model,
               std::ostream* pattern_out) {
  if (v.mode.kind != DistanceMode::Kind::control_patterns) {
    return distance(c, ideal, v.mode);
  }
  double worst = 0.0;
  for (const auto& p : control_patterns(c, ideal, model)) {
    worst = std::max(worst, p.error_vs_ideal);
    if (pattern_out) {
      *pattern_out << "pattern=" << p.name
                   << " error=" << format_double(p.error_vs_ideal);
      if (p.error_vs_expected) {
        *pattern_out << " vs_expected=" << format_double(*p.error_vs_expected);
      }
      *pattern_out << '\n';
    }
  }
  return worst;
}

struct DecomposeOpts {
  std::string gate;
  unsigned controls = 0;
  std::optional<double> epsilon;
  std::string strategy = "auto";
  std::string format = "qasm";
  std::string verify = "off";
  std::string output;
  std::string report;
};

int cmd_decompose(const DecomposeOpts& o, std::ostream& out,
                  std::ostream& err) {
  // Everything is validated before any construction starts.
  const Strategy strategy = parse_strategy(o.strategy);
  if ((strategy == Strategy::approx_thm1 || strategy == Strategy::approx_thm3) &&
      !o.epsilon) {
    throw InvalidArgument("--strategy " + o.strategy + " requires --epsilon");
  }
  check_epsilon(o.epsilon);
  if (o.controls == 0) throw InvalidArgument("--controls must be >= 1");
  if (o.format != "qasm" && o.format != "json") {
    throw InvalidArgument("--format must be qasm or json");
  }
  const VerifyMode verify = parse_verify(o.verify);
  const Matrix2 u = parse_gate(o.gate);

  const auto ctl = control_wires(o.controls);
  DecompositionReport r = decompose(strategy, u, ctl, 0, o.epsilon);

  bool failed = false;
  if (!verify.off) {
    std::optional<DroppedRootModel> model;
    if (r.b1) model = dropped_root(u, o.controls, *o.epsilon);
    r.oracle_error = measure(r.circuit, ideal_mcu(u, ctl, 0), verify, model,
                             nullptr);
    const double tol = r.strategy == "exact" ? kExactVerifyTol : *o.epsilon;
    failed = !(*r.oracle_error <= tol);
  }

  const std::string body =
      o.format == "qasm" ? to_qasm(r.circuit) : to_json(r.circuit, 2) + "\n";
  std::ostream* summary = &out;
  if (o.output.empty()) {
    out << body;
    summary = &err;
  } else {
    write_file(o.output, body);
  }
  if (!o.report.empty()) write_file(o.report, r.to_json(2) + "\n");

  *summary << "strategy=" << r.strategy << " n=" << r.n
           << " cnots=" << r.cnot_count << " bound="
           << (r.bound ? std::to_string(*r.bound) : std::string("n/a"))
           << " error="
           << (r.oracle_error ? format_double(*r.oracle_error)
                              : std::string("n/a"))
           << '\n';
  return failed ? kVerifyFailed : kOk;
}

struct BaseOpts {
  std::optional<std::string> theta;
  std::optional<std::string> gate;
  double epsilon = 0.0;
};

int cmd_basecontrols(const BaseOpts& o, std::ostream& out) {
  if (o.theta.has_value() == o.gate.has_value()) {
    throw InvalidArgument("give exactly one of --theta and --gate");
  }
  if (!(o.epsilon > 0.0 && o.epsilon <= 2.0)) {
    throw InvalidArgument("--epsilon must lie in (0, 2]");
  }
  ApproxPlan plan;
  if (o.gate) {
    plan = make_plan(parse_gate(*o.gate), o.epsilon);
  } else {
    // An eigenphase; only its magnitude in (-pi, pi] matters.
    const double t = parse_angle(*o.theta);
    plan = make_plan(Matrix2::phase(t), o.epsilon);
  }
  out << "nb=" << plan.n_base << " N=" << plan.big_n
      << " predicted_error=" << format_double(plan.predicted_error) << '\n';
  return kOk;
}

struct VerifyOpts {
  std::string file;
  std::string gate;
  unsigned controls = 0;
  std::string mode = "full";
  std::optional<double> epsilon;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.controls == 0) throw InvalidArgument("--controls must be >= 1");
  check_epsilon(o.epsilon);
  const VerifyMode v = parse_verify(o.mode);
  if (v.off) throw InvalidArgument("--mode off has nothing to verify");
  const Matrix2 u = parse_gate(o.gate);
  const Circuit c = load_circuit(o.file);
  const auto ctl = control_wires(o.controls);

  std::optional<DroppedRootModel> model;
  if (o.epsilon) model = dropped_root(u, o.controls, *o.epsilon);
  const double d = measure(c, ideal_mcu(u, ctl, 0), v, model, &out);
  const double tol = o.epsilon ? *o.epsilon : kExactVerifyTol;
  const bool ok = d <= tol;
  out << "mode=" << v.text << " distance=" << format_double(d)
      << " tolerance=" << format_double(tol) << (ok ? " ok" : " FAIL") << '\n';
  return ok ? kOk : kVerifyFailed;
}

struct CompareOpts {
  double epsilon = 0.0;
  long long n_from = 0;
  long long n_to = 0;
  long long nt = 2;
  bool measured = false;
  std::string output;
};

constexpr long long kMeasuredMaxN = 20;

int cmd_compare(const CompareOpts& o, std::ostream& out) {
  if (!(o.epsilon > 0.0 && o.epsilon < 1.0)) {
    throw InvalidArgument("--epsilon must lie in (0, 1)");
  }
  cost::CostTable t = cost::compare_table(o.n_from, o.n_to, o.epsilon, o.nt);
  if (o.measured) {
    t.measured_columns = {"measured_exact", "measured_thm1", "measured_thm3"};
    for (auto& row : t.rows) {
      if (row.n < 2 || row.n > kMeasuredMaxN) continue;
      const auto ctl = control_wires(static_cast<unsigned>(row.n - 1));
      const Matrix2 x = Matrix2::x();
      row.measured.push_back(mcu_exact(x, ctl, 0).cnot_count);
      // Approximate columns stay empty where the strategy falls back to
      // the exact construction.
      for (const auto& r : {mcu_approx(x, ctl, 0, o.epsilon),
                            mcu_approx_opt(x, ctl, 0, o.epsilon)}) {
        row.measured.push_back(
            r.strategy == "exact"
                ? std::nullopt
                : std::optional<cost::Count>(r.cnot_count));
      }
    }
  }
  const std::string csv = t.to_csv();
  if (o.output.empty()) {
    out << csv;
  } else {
    write_file(o.output, csv);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multi-controlled gate synthesis", "mcgate"};
  app.require_subcommand(1);

  DecomposeOpts dec;
  auto* d = app.add_subcommand("decompose", "Decompose C^k U into CNOTs and one-qubit gates");
  d->add_option("--gate", dec.gate, "Named gate or JSON 2x2 matrix")->required();
  d->add_option("--controls", dec.controls, "Number of controls k")->required();
  d->add_option("--epsilon", dec.epsilon, "Approximation tolerance");
  d->add_option("--strategy", dec.strategy, "exact | approx-thm1 | approx-thm3 | auto")
      ->capture_default_str();
  d->add_option("--format", dec.format, "qasm | json")->capture_default_str();
  d->add_option("--verify", dec.verify, "full | sampled:N:seed | patterns | off")
      ->capture_default_str();
  d->add_option("--output,-o", dec.output, "Circuit file (default stdout)");
  d->add_option("--report", dec.report, "Decomposition report JSON file");

  BaseOpts base;
  auto* b = app.add_subcommand("basecontrols", "Base controls needed for a tolerance");
  b->add_option("--theta", base.theta, "Eigenphase in radians, e.g. pi/2");
  b->add_option("--gate", base.gate, "Gate whose largest eigenphase is used");
  b->add_option("--epsilon", base.epsilon, "Tolerance")->required();

  VerifyOpts ver;
  auto* v = app.add_subcommand("verify", "Check a circuit file against C^k U");
  v->add_option("file", ver.file, "QASM or circuit JSON")->required();
  v->add_option("--gate", ver.gate, "Named gate or JSON 2x2 matrix")->required();
  v->add_option("--controls", ver.controls, "Number of controls k")->required();
  v->add_option("--mode", ver.mode, "full | sampled:N:seed | patterns")
      ->capture_default_str();
  v->add_option("--epsilon", ver.epsilon,
                "Accept distances up to epsilon (default 1e-9)");

  CompareOpts cmp;
  auto* c = app.add_subcommand("compare", "CNOT-count comparison table as CSV");
  c->add_option("--epsilon", cmp.epsilon, "Tolerance")->required();
  c->add_option("--n-from", cmp.n_from, "First n")->required();
  c->add_option("--n-to", cmp.n_to, "Last n")->required();
  c->add_option("--nt", cmp.nt, "Targets for the su2_multi column")
      ->capture_default_str();
  c->add_flag("--measured", cmp.measured, "Append constructed counts for n <= 20");
  c->add_option("--output,-o", cmp.output, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*d) return cmd_decompose(dec, out, err);
    if (*b) return cmd_basecontrols(base, out);
    if (*v) return cmd_verify(ver, out);
    return cmd_compare(cmp, out);
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace mcgate::cli
