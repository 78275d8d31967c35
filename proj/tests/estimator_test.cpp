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


#include "revexp/estimator.hpp"

#include <gtest/gtest.h>

#include <random>

#include "revexp/errors.hpp"
#include "revexp/exp_builder.hpp"
#include "revexp/workflow.hpp"

namespace revexp {
namespace {

TEST(Formulas, PublishedExamples) {
  EXPECT_EQ(toffoli_gate_saving(21, 7, 5), 912);
  EXPECT_EQ(toffoli_gate_saving(21, 7, 7), 1620);
  EXPECT_EQ(toffoli_space_saving(21, 7, 5), 1409);
  EXPECT_EQ(toffoli_space_saving(21, 7, 7), 2308);
  EXPECT_EQ(qubits_gate_saving(21, 7, 5), 134);
  EXPECT_EQ(qubits_gate_saving(21, 7, 7), 154);
  EXPECT_EQ(qubits_space_saving(21, 7, 5), 71);
  EXPECT_EQ(qubits_space_saving(21, 7, 7), 91);
  EXPECT_EQ(multiplication_base(21), 342.0);
}

TEST(Formulas, TermsSumToTotal) {
  for (int n : {8, 21, 32}) {
    for (int d = 4; d <= 15; ++d) {
      for (int m = 4; m <= d; ++m) {
        for (Mode mode : {Mode::gate_saving, Mode::space_saving}) {
          const FormulaEstimate e = estimate(n, d, m, mode);
          double sum = 0;
          for (const auto& [name, value] : e.terms) sum += value;
          EXPECT_DOUBLE_EQ(sum, e.toffoli_exact);
          EXPECT_EQ(e.toffoli, std::llround(e.toffoli_exact));
          const bool has_tail = std::any_of(e.terms.begin(), e.terms.end(),
                                            [](const auto& t) { return t.first == "tail_swap"; });
          EXPECT_EQ(has_tail, m < d);
        }
      }
    }
  }
}

TEST(Formulas, AverageAdditionIdentity) {
  // A random constant sets half its bits, so the average multiplication
  // costs half the sum over every addition width.
  for (int n = 3; n <= 62; ++n) EXPECT_DOUBLE_EQ(2 * multiplication_base(n), static_cast<double>(full_addition_sum(n)));
}

TEST(Formulas, UncomputeSavings) {
  EXPECT_DOUBLE_EQ(uncompute_savings(0), 2.0 - 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(uncompute_savings(2), 0.5 - 1.0 / 48.0);
}

TEST(Formulas, Errors) {
  EXPECT_THROW(estimate_space_saving(21, 7, 3), UnsupportedParameterError);
  EXPECT_THROW(estimate_gate_saving(21, 7, 8), DomainError);
  EXPECT_THROW(estimate_gate_saving(1, 7, 3), DomainError);
  EXPECT_THROW(qubits_space_saving(21, 7, 2), UnsupportedParameterError);
}

TEST(Formulas, SpaceSavingQubitCases) {
  // m = d: pool plus exponent register.
  EXPECT_EQ(qubits_space_saving(32, 8, 8), 4 * 32 + 8);
  // Full pool short of d: the tail needs a fresh zero register.
  EXPECT_EQ(qubits_space_saving(32, 8, 6), 4 * 32 + 16 - 6 - 1);
  EXPECT_EQ(qubits_space_saving(21, 7, 5), 3 * 21 + 14 - 5 - 1);
}

TEST(ScheduleArithmetic, PublishedTable) {
  for (const Table1Row& row : reference_tables().table1) {
    const ScheduleArithmetic a = schedule_arithmetic(row.m);
    EXPECT_EQ(a.r, row.r);
    EXPECT_EQ(a.m_un, row.m_un);
    EXPECT_EQ(a.m_ss - 2, row.m_ss_minus_2);
  }
  EXPECT_EQ(reference_tables().table1.size(), 33u);
}

TEST(MultiplierCost, PublishedConstant) {
  EXPECT_EQ(multiplier_toffoli(FixedPointValue::from_bit_string("011000111001010110000")), 340);
  EXPECT_EQ(multiplier_toffoli(FixedPointValue(21, 1)), 21);
  EXPECT_THROW(multiplier_toffoli(FixedPointValue(21, 0)), DomainError);
}

TEST(MultiplierCost, RandomConstantsAverageNearFormula) {
  std::mt19937_64 rng(21);
  const int n = 21;
  double total = 0;
  const int samples = 2000;
  for (int k = 0; k < samples; ++k) {
    total += static_cast<double>(multiplier_toffoli(FixedPointValue(n, 1 + rng() % ((1u << n) - 1))));
  }
  const double per_multiplier = multiplication_base(n) + n + 2;
  EXPECT_LT(std::abs(total / samples - per_multiplier) / per_multiplier, 0.2);
}

TEST(AnalyticCount, SingleMultiplicationIsFree) {
  ProblemSpec s;
  s.x_max = 1;
  s.d = 1;
  s.n = 21;
  const Plan plan = make_plan(s, Mode::gate_saving);
  ASSERT_EQ(plan.m, 1);
  const AnalyticCount c = analytic_circuit_count(plan, Mode::gate_saving);
  EXPECT_EQ(c.multipliers, 0);
  EXPECT_EQ(c.total(), 0);
}

TEST(AnalyticCount, MatchesBuiltCircuits) {
  std::vector<ProblemSpec> specs;
  for (const char* x_max : {"10", "100"}) {
    ProblemSpec e;
    e.x_max = parse_real(x_max);
    e.d = 7;
    e.n = 21;
    specs.push_back(e);
    e.d = 8;
    e.n = 32;
    specs.push_back(e);
    ProblemSpec g = e;
    g.kind = FunctionKind::gaussian;
    g.symmetric = true;
    g.d = 7;
    g.n = 24;
    specs.push_back(g);
  }
  for (const ProblemSpec& s : specs) {
    for (Mode mode : {Mode::gate_saving, Mode::space_saving}) {
      const Plan plan = make_plan(s, mode);
      const CountBridge b = bridge_counts(build(plan));
      EXPECT_TRUE(b.ok()) << plan.n() << "/" << plan.d_eff << "/" << plan.m << " " << to_string(mode);
      EXPECT_EQ(b.counted_core_toffoli, b.analytic.core());
    }
  }
}

TEST(SquarerOverhead, Counts) {
  ProblemSpec s;
  s.kind = FunctionKind::gaussian;
  s.d = 7;
  EXPECT_EQ(squarer_overhead_qubits(s), 8);
  EXPECT_EQ(squarer_overhead_toffoli(s), 7 * 24);
  s.symmetric = true;
  EXPECT_EQ(squarer_overhead_qubits(s), 20);
  EXPECT_EQ(squarer_overhead_toffoli(s), 21 + 6 * 21);
  s.kind = FunctionKind::exponential;
  s.symmetric = false;
  EXPECT_EQ(squarer_overhead_qubits(s), 0);
  EXPECT_EQ(squarer_overhead_toffoli(s), 0);
}

TEST(ReferenceTables, Reproduced) {
  const TablesReport r = reproduce_tables();
  EXPECT_EQ(r.count("table1", "", CellStatus::pass), 99);
  EXPECT_EQ(r.count("table2", "toffoli", CellStatus::pass), 16);
  EXPECT_EQ(r.count("table2", "qubits", CellStatus::pass), 15);
  EXPECT_EQ(r.count("table2", "qubits", CellStatus::flagged), 1);
  EXPECT_EQ(r.count("table2", "", CellStatus::fail), 0);
  EXPECT_EQ(r.planner.size(), 8u);
  for (const PlannerCheck& p : r.planner) EXPECT_TRUE(p.pass) << p.label;
  EXPECT_TRUE(r.ok());
}

TEST(ReferenceTables, FlaggedCell) {
  const auto& rows = reference_tables().table2;
  int flagged = 0;
  for (const Table2Row& row : rows) {
    if (!is_flagged_qubit_cell(row)) continue;
    ++flagged;
    EXPECT_EQ(row.qubits, 105);
    EXPECT_EQ(qubits_space_saving(row.n, row.d, row.m), 137);
  }
  EXPECT_EQ(flagged, 1);
}

TEST(ReferenceTables, Ratios) {
  const TablesReport r = reproduce_tables();
  ASSERT_EQ(r.ratios.size(), 2u);
  EXPECT_EQ(r.ratios[0].reference_toffoli, 15690);
  EXPECT_EQ(r.ratios[0].own_toffoli, 912);
  EXPECT_GT(r.ratios[0].ratio, 17.0);
  EXPECT_EQ(r.ratios[1].reference_toffoli, 19090);
  EXPECT_EQ(r.ratios[1].own_toffoli, 704);
  EXPECT_GT(r.ratios[1].ratio, 27.0);
}

TEST(ReferenceTables, AlteredCellFails) {
  ReferenceTables t = reference_tables();
  t.table2[0].toffoli += 1;
  const TablesReport r = reproduce_tables(t);
  EXPECT_EQ(r.count("table2", "toffoli", CellStatus::fail), 1);
  EXPECT_FALSE(r.ok());
}

TEST(ReferenceTables, ParseErrors) {
  EXPECT_THROW(parse_reference_tables("{"), InvalidSpecError);
  EXPECT_THROW(parse_reference_tables(R"({"version": 1})"), InvalidSpecError);
  EXPECT_THROW(parse_reference_tables(
                   R"({"version":1,"table1":[],"table2":[{"function":"sine"}],"haner":[],"inverse_sqrt_toffoli":1})"),
               InvalidSpecError);
  EXPECT_EQ(reference_tables().version, 1);
  EXPECT_EQ(reference_tables().inverse_sqrt_toffoli, 134302);
}

}  // namespace
}  // namespace revexp
