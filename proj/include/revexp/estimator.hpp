// Copyright 2026 The revexp Authors
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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revexp/fixed_point.hpp"
#include "revexp/numerics.hpp"

namespace revexp {

/// Register-pool arithmetic of the space-saving run for m multiplications.
struct ScheduleArithmetic {
  int m = 0;
  int r = 0;
  int l = 0;
  int m_un = 0;
  int m_ss = 0;
  /// l(l+1)/2 == r(r+1)/2 - m: the run ends on a full pool.
  bool full_pool = false;
};

ScheduleArithmetic schedule_arithmetic(int m);

/// Average addition cost of one multiplication, (3/4)n^2 + (3/4)n - 9/2.
double multiplication_base(int n);

/// Late-multiplication discount in multiplication units:
/// 2 * 2^-dm - 2^-2dm / 3.
double uncompute_savings(int delta_m);

/// Sum over s = 2..n-1 of the adder cost 3s+3.
std::int64_t full_addition_sum(int n);

struct FormulaEstimate {
  std::int64_t toffoli = 0;
  int qubits = 0;
  /// Unrounded Toffoli value; equals the sum of `terms`.
  double toffoli_exact = 0;
  std::vector<std::pair<std::string, double>> terms;
};

FormulaEstimate estimate_gate_saving(int n, int d_eff, int m);
/// Throws UnsupportedParameterError for m <= 3.
FormulaEstimate estimate_space_saving(int n, int d_eff, int m);
FormulaEstimate estimate(int n, int d_eff, int m, Mode mode);

std::int64_t toffoli_gate_saving(int n, int d_eff, int m);
std::int64_t toffoli_space_saving(int n, int d_eff, int m);
int qubits_gate_saving(int n, int d_eff, int m);
int qubits_space_saving(int n, int d_eff, int m);

/// Exact Toffoli cost of build_constant_multiplier for this constant.
std::int64_t multiplier_toffoli(const FixedPointValue& a);

struct AnalyticCount {
  std::int64_t multipliers = 0;
  std::int64_t tail = 0;
  std::int64_t squarer = 0;

  std::int64_t core() const { return multipliers + tail; }
  std::int64_t total() const { return core() + squarer; }
};

/// Toffoli count predicted from the constants' bit patterns and the exact
/// schedule, without building any gates.
AnalyticCount analytic_circuit_count(const Plan& plan, Mode mode);

/// Qubits the gaussian front end adds on top of the exponentiation core.
int squarer_overhead_qubits(const ProblemSpec& spec);
std::int64_t squarer_overhead_toffoli(const ProblemSpec& spec);

// Published reference data.

struct Table1Row {
  int m = 0;
  int r = 0;
  int m_un = 0;
  int m_ss_minus_2 = 0;
};

struct Table2Row {
  FunctionKind kind = FunctionKind::exponential;
  Mode mode = Mode::gate_saving;
  std::string accuracy;
  double x_max = 0;
  int n = 0;
  int d = 0;
  int m = 0;
  std::int64_t toffoli = 0;
  int qubits = 0;
};

struct HanerRow {
  FunctionKind kind = FunctionKind::exponential;
  std::string accuracy;
  int variant = 0;
  std::int64_t toffoli = 0;
  int qubits = 0;
};

struct ReferenceTables {
  int version = 0;
  std::vector<Table1Row> table1;
  std::vector<Table2Row> table2;
  std::vector<HanerRow> haner;
  std::int64_t inverse_sqrt_toffoli = 0;
};

ReferenceTables parse_reference_tables(std::string_view json_text);
/// The checked-in tables compiled into the library.
const ReferenceTables& reference_tables();

enum class CellStatus { pass, fail, flagged };
std::string_view to_string(CellStatus status);

struct CellCheck {
  std::string table;
  std::string label;
  std::string quantity;
  std::int64_t published = 0;
  std::int64_t computed = 0;
  CellStatus status = CellStatus::pass;
  std::string note;
};

struct PlannerCheck {
  std::string label;
  int published_m = 0;
  int computed_m = 0;
  bool overridden = false;
  bool pass = false;
};

struct RatioCheck {
  std::string label;
  std::int64_t reference_toffoli = 0;
  std::int64_t own_toffoli = 0;
  double ratio = 0;
};

struct TablesReport {
  std::vector<CellCheck> cells;
  std::vector<PlannerCheck> planner;
  std::vector<RatioCheck> ratios;

  int count(std::string_view table, std::string_view quantity, CellStatus status) const;
  /// True when every cell passes or is flagged and every planner check passes.
  bool ok() const;
};

/// Recomputes the schedule table from pool arithmetic and every own-method resource
/// cell from the closed forms, plus planner m values and headline ratios.
TablesReport reproduce_tables(const ReferenceTables& tables = reference_tables());

/// The one qubit cell where the closed form and the published table disagree.
bool is_flagged_qubit_cell(const Table2Row& row);

}  // namespace revexp
