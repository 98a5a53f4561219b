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

#include "mcgate/cost_model.hpp"

#include <cmath>
#include <sstream>

#include "mcgate/unitary.hpp"

namespace mcgate::cost {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidArgument(msg);
}

}  // namespace

Count exact_count(Count n) {
  require(n >= 3, "exact_count: n must be at least 3");
  return 4 * n * n - 12 * n + 10;
}

Count barenco_levels(double epsilon) {
  require(epsilon > 0 && epsilon < 1, "barenco: epsilon must be in (0, 1)");
  Count k = static_cast<Count>(std::ceil(std::log2(1.0 / epsilon)));
  // log2 of an exact power of two can land one ulp above the integer.
  if (k > 1 && std::ldexp(1.0, static_cast<int>(k - 1)) >= 1.0 / epsilon) --k;
  return std::max<Count>(k, 1);
}

Count barenco_iten_count(Count n, double epsilon) {
  const Count k = barenco_levels(epsilon);
  require(n - k - 1 >= 0, "barenco_iten_count: n too small for epsilon");
  return -16 * k * k - 60 * k + 32 * n * k;
}

Count thm1_bound(Count n, Count nb) {
  require(nb >= 1 && n >= nb, "thm1_bound: need n >= nb >= 1");
  return -28 * (nb - 1) * (nb - 1) + 2 * (nb - 1) * (16 * n - 40);
}

Count thm3_bound(Count n, Count nb) {
  require(nb >= 1 && n >= nb, "thm3_bound: need n >= nb >= 1");
  return 4 * (nb - 1) * (nb - 1) + 32 * n - 112;
}

Count su2_single_bound(Count n) { return 16 * n - 40; }

Count su2_general_quoted(Count n) {
  return n % 2 == 0 ? 20 * n - 42 : 20 * n - 38;
}

Count su2_multi_bound(Count n, Count nt) {
  require(nt >= 1, "su2_multi_bound: nt must be positive");
  return 16 * n + 16 * (nt - 1) - 40;
}

Count toffoli_mt(Count nt) {
  require(nt >= 1, "toffoli_mt: nt must be positive");
  return 2 * nt + 4;
}

Count mcx_mt_c2x(Count k, Count nt) {
  require(k >= 3 && nt >= 1, "mcx_mt_c2x: need k >= 3, nt >= 1");
  return 2 * (2 * k + nt - 5);
}

namespace built {

Count mcx(Count k, Count nt) {
  if (k == 0) return 0;
  if (k == 1) return nt;
  if (k == 2) return 2 * nt + 4;
  return 8 * k + 4 * nt - 10;
}

Count mcsu2(Count k, Count nt) {
  if (k == 0) return 0;
  if (k == 1) return 2 * nt;
  const Count k1 = (k + 1) / 2;
  return 2 * mcx(k1, nt) + 2 * mcx(k - k1, nt);
}

Count exact(Count k) {
  if (k == 0) return 0;
  const Count n = k + 1;
  return 4 * n * n - 12 * n + 10;
}

Count approx_thm1(Count k, Count nb) {
  if (k <= nb) return exact(k);
  const Count ne = k - nb;
  return 4 * (nb - 1) * (nb - 1) + 2 * (nb - 1) * mcsu2(ne + 1, 1);
}

Count approx_thm3(Count k, Count nb) {
  if (k <= nb) return exact(k);
  const Count ne = k - nb;
  if (nb == 1) return 0;
  return 4 * (nb - 1) * (nb - 1) + 2 * mcsu2(ne + 1, nb - 1);
}

}  // namespace built

unsigned worst_case_base_controls(double epsilon) {
  return min_base_controls(kPi, epsilon);
}

CostTable compare_table(Count n_from, Count n_to, double epsilon, Count nt) {
  require(n_from >= 1 && n_to >= n_from, "compare_table: bad n range");
  require(nt >= 1, "compare_table: nt must be positive");
  CostTable t;
  t.epsilon = epsilon;
  t.n_base = worst_case_base_controls(epsilon);
  t.nt = nt;
  const bool barenco_ok = epsilon > 0 && epsilon < 1;
  if (barenco_ok) t.barenco_levels = barenco_levels(epsilon);
  const Count nb = t.n_base;
  for (Count n = n_from; n <= n_to; ++n) {
    CostRow r;
    r.n = n;
    if (n >= 3) r.exact = exact_count(n);
    if (n >= nb) {
      r.thm1 = thm1_bound(n, nb);
      r.thm3 = thm3_bound(n, nb);
    }
    if (barenco_ok && n - t.barenco_levels - 1 >= 1) {
      r.barenco_iten = barenco_iten_count(n, epsilon);
    }
    r.su2_single = su2_single_bound(n);
    r.su2_multi = su2_multi_bound(n, nt);
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::string CostTable::to_csv() const {
  std::ostringstream out;
  out << "n,exact,thm1,thm3,barenco_iten,su2_single,su2_multi";
  for (const auto& m : measured_columns) out << ',' << m;
  out << '\n';
  auto cell = [&](const std::optional<Count>& v) {
    out << ',';
    if (v) out << *v;
  };
  for (const auto& r : rows) {
    out << r.n;
    cell(r.exact);
    cell(r.thm1);
    cell(r.thm3);
    cell(r.barenco_iten);
    out << ',' << r.su2_single << ',' << r.su2_multi;
    for (std::size_t i = 0; i < measured_columns.size(); ++i) {
      cell(i < r.measured.size() ? r.measured[i] : std::nullopt);
    }
    out << '\n';
  }
  return out.str();
}

Count crossover_vs_exact(double epsilon) {
  const Count nb = worst_case_base_controls(epsilon);
  for (Count n = std::max<Count>(3, nb);; ++n) {
    if (thm3_bound(n, nb) < exact_count(n)) return n;
  }
}

}  // namespace mcgate::cost
