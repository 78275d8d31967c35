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

#include "revexp/workflow.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "revexp/simulator.hpp"

namespace revexp {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxListedMismatches = 16;

}  // namespace

SweepResult sweep_artifact(const BuiltArtifact& artifact, const std::vector<std::uint64_t>& inputs) {
  const Simulator sim(artifact.circuit);
  const Plan& plan = artifact.plan;
  const int output = artifact.circuit.output();
  std::vector<std::uint64_t> xs = inputs;
  if (xs.empty()) {
    xs.resize(std::uint64_t{1} << plan.spec.d);
    for (std::uint64_t x = 0; x < xs.size(); ++x) xs[x] = x;
  }

  std::atomic<std::uint64_t> matches{0}, mismatch_count{0}, zeroing_checked{0}, zeroing_violations{0},
      clean_violations{0}, domain_violations{0};
  std::mutex mu;
  std::vector<std::uint64_t> mismatches;
  parallel_for_inputs(xs.size(), [&](std::uint64_t idx) {
    const std::uint64_t x = xs[idx];
    const RegisterState state = sim.run(x);
    const PipelineTrace trace = pipeline_reference(plan, x);
    if (state[output] == trace.final) {
      ++matches;
    } else {
      ++mismatch_count;
      std::lock_guard lock(mu);
      if (mismatches.size() < kMaxListedMismatches) mismatches.push_back(x);
    }
    if (trace.tail_zeroed) {
      ++zeroing_checked;
      if (state[output] != 0) ++zeroing_violations;
    }
    if (std::any_of(artifact.clean_registers.begin(), artifact.clean_registers.end(),
                    [&](int r) { return state[r] != 0; })) {
      ++clean_violations;
    }
    if (state[artifact.domain_register] != x) ++domain_violations;
  });

  SweepResult r;
  r.inputs = xs.size();
  r.matches = matches;
  r.mismatch_count = mismatch_count;
  std::sort(mismatches.begin(), mismatches.end());
  r.mismatches = std::move(mismatches);
  r.zeroing_checked = zeroing_checked;
  r.zeroing_violations = zeroing_violations;
  r.clean_violations = clean_violations;
  r.domain_violations = domain_violations;
  return r;
}

CountBridge bridge_counts(const BuiltArtifact& artifact) {
  CountBridge b;
  const ResourceCount rc = count_resources(artifact.circuit);
  b.counted_toffoli = rc.toffoli;
  b.counted_core_toffoli = rc.toffoli - artifact.squarer_toffoli;
  b.analytic = analytic_circuit_count(artifact.plan, artifact.plan.mode);
  b.formula = estimate(artifact.plan.n(), artifact.plan.d_eff, artifact.plan.m, artifact.plan.mode);
  b.counted_qubits = rc.qubits;
  b.predicted_qubits = artifact.predicted_qubits;
  return b;
}

std::string format_real(const Real& v, int digits) { return v.str(digits, std::ios_base::fmtflags(0)); }

json spec_to_json(const ProblemSpec& spec) {
  return {{"function", to_string(spec.kind)},
          {"alpha", format_real(spec.alpha, 20)},
          {"x_min", format_real(spec.x_min, 20)},
          {"x_max", format_real(spec.x_max, 20)},
          {"d", spec.d},
          {"n", spec.n},
          {"symmetric", spec.symmetric}};
}

json plan_to_json(const Plan& plan) {
  const PlanConstants& k = plan.constants;
  json a_i = json::array();
  for (std::size_t i = 0; i < k.a_i.size(); ++i) {
    a_i.push_back({{"i", i}, {"bits", k.a_i[i].bit_string()}, {"mantissa", k.a_i[i].mantissa()}});
  }
  return {{"spec", spec_to_json(plan.spec)},
          {"mode", to_string(plan.mode)},
          {"d_eff", plan.d_eff},
          {"m", plan.m},
          {"m_overridden", plan.m_overridden},
          {"delta", format_real(k.delta, 20)},
          {"A", format_real(k.a_real, 20)},
          {"C", format_real(k.c_real, 20)},
          {"A_max", format_real(plan.a_max, 20)},
          {"c_fp", k.c_fp.bit_string()},
          {"c1_fp", k.c1_fp.bit_string()},
          {"a_i", a_i}};
}

json schedule_to_json(const SpaceSavingSchedule& s) {
  json ops = json::array();
  for (const ScheduleOp& op : s.ops) {
    ops.push_back({{"kind", to_string(op.kind)},
                   {"index", op.index},
                   {"src_slot", op.src_slot},
                   {"dst_slot", op.dst_slot},
                   {"wave", op.wave}});
  }
  return {{"m", s.m},
          {"r", s.r},
          {"l", s.l},
          {"m_un", s.m_un},
          {"m_ss", s.m_ss},
          {"output_slot", s.output_slot},
          {"tail_zero", to_string(s.tail_zero)},
          {"tail_zero_slot", s.tail_zero_slot},
          {"free_slots", s.free_slots},
          {"ops", ops}};
}

json estimate_to_json(const FormulaEstimate& e) {
  json terms = json::object();
  for (const auto& [name, value] : e.terms) terms[name] = value;
  return {{"toffoli", e.toffoli}, {"toffoli_exact", e.toffoli_exact}, {"qubits", e.qubits}, {"terms", terms}};
}

json bridge_to_json(const CountBridge& b) {
  return {{"counted_toffoli", b.counted_toffoli},
          {"counted_core_toffoli", b.counted_core_toffoli},
          {"analytic_toffoli", b.analytic.total()},
          {"analytic_multipliers", b.analytic.multipliers},
          {"analytic_tail", b.analytic.tail},
          {"squarer_toffoli", b.analytic.squarer},
          {"formula", estimate_to_json(b.formula)},
          {"counted_qubits", b.counted_qubits},
          {"predicted_qubits", b.predicted_qubits},
          {"toffoli_match", b.toffoli_match()},
          {"qubit_match", b.qubit_match()},
          {"status", b.ok() ? "ok" : "mismatch"}};
}

json sweep_to_json(const SweepResult& s) {
  return {{"inputs", s.inputs},
          {"matches", s.matches},
          {"mismatch_count", s.mismatch_count},
          {"mismatches", s.mismatches},
          {"zeroing_checked", s.zeroing_checked},
          {"zeroing_violations", s.zeroing_violations},
          {"clean_violations", s.clean_violations},
          {"domain_violations", s.domain_violations},
          {"status", s.ok() ? "ok" : "mismatch"}};
}

json error_report_to_json(const ErrorReport& r, const Plan& plan) {
  return {{"config",
           {{"function", to_string(plan.spec.kind)}, {"n", plan.n()}, {"d_eff", plan.d_eff}, {"m", plan.m}}},
          {"max_abs_error", r.max_abs_error},
          {"mean_abs_error", r.mean_abs_error},
          {"worst_x", r.worst_x},
          {"inputs", r.inputs},
          {"envelope", r.envelope},
          {"within_envelope", r.within_envelope}};
}

json tables_report_to_json(const TablesReport& report) {
  json cells = json::array();
  for (const CellCheck& c : report.cells) {
    json j = {{"table", c.table},         {"label", c.label},       {"quantity", c.quantity},
              {"published", c.published}, {"computed", c.computed}, {"status", to_string(c.status)}};
    if (!c.note.empty()) j["note"] = c.note;
    cells.push_back(j);
  }
  json planner = json::array();
  for (const PlannerCheck& p : report.planner) {
    planner.push_back({{"label", p.label},
                       {"published_m", p.published_m},
                       {"computed_m", p.computed_m},
                       {"overridden", p.overridden},
                       {"status", p.pass ? "pass" : "fail"}});
  }
  json ratios = json::array();
  for (const RatioCheck& r : report.ratios) {
    ratios.push_back({{"label", r.label},
                      {"reference_toffoli", r.reference_toffoli},
                      {"own_toffoli", r.own_toffoli},
                      {"ratio", r.ratio}});
  }
  json summary = json::object();
  for (const char* table : {"table1", "table2"}) {
    for (const char* q : {"", "toffoli", "qubits"}) {
      if (std::string_view(table) == "table1" && *q != '\0') continue;
      const std::string key = std::string(table) + (*q ? std::string("_") + q : "");
      summary[key] = {{"pass", report.count(table, q, CellStatus::pass)},
                      {"fail", report.count(table, q, CellStatus::fail)},
                      {"flagged", report.count(table, q, CellStatus::flagged)}};
    }
  }
  return {{"cells", cells},
          {"planner", planner},
          {"ratios", ratios},
          {"summary", summary},
          {"status", report.ok() ? "ok" : "mismatch"}};
}

}  // namespace revexp
