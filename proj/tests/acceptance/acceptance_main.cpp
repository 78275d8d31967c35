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


// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "revexp/estimator.hpp"
#include "revexp/exp_builder.hpp"
#include "revexp/oracle.hpp"
#include "revexp/qarith.hpp"
#include "revexp/simulator.hpp"
#include "revexp/workflow.hpp"

namespace revexp {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (failures_.tellp() > 0) failures_ << "; ";
      failures_ << what;
    }
  }
  Outcome done(const std::string& summary) const {
    return {pass_, pass_ ? summary : failures_.str()};
  }

 private:
  bool pass_ = true;
  std::ostringstream failures_;
};

// Published resource-table configuration: alpha = 1 on [0, x_max), gaussian rows in symmetric mode.
struct Config {
  FunctionKind kind;
  const char* x_max;
  int n;
  int d_eff;
  int published_m;
  bool override_m;
};

const std::vector<Config>& table2_configs() {
  static const std::vector<Config> configs = {
      {FunctionKind::exponential, "10", 21, 7, 7, false},  {FunctionKind::exponential, "100", 21, 7, 5, false},
      {FunctionKind::exponential, "10", 32, 8, 8, false},  {FunctionKind::exponential, "100", 32, 8, 6, false},
      {FunctionKind::gaussian, "10", 24, 13, 12, false},   {FunctionKind::gaussian, "100", 24, 13, 4, true},
      {FunctionKind::gaussian, "10", 30, 15, 14, false},   {FunctionKind::gaussian, "100", 30, 15, 7, true},
  };
  return configs;
}

ProblemSpec spec_of(const Config& c) {
  ProblemSpec s;
  s.kind = c.kind;
  s.x_max = parse_real(c.x_max);
  s.n = c.n;
  if (c.kind == FunctionKind::gaussian) {
    s.symmetric = true;
    s.d = (c.d_eff + 1) / 2;
  } else {
    s.d = c.d_eff;
  }
  return s;
}

Plan plan_of(const Config& c, Mode mode) {
  return c.override_m ? make_plan(spec_of(c), mode, c.published_m) : make_plan(spec_of(c), mode);
}

std::string label(const Config& c, Mode mode) {
  return std::string(to_string(c.kind)) + " " + std::string(to_string(mode)) + " (" + std::to_string(c.n) + "," +
         std::to_string(c.d_eff) + "," + std::to_string(c.published_m) + ") x_max=" + c.x_max;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Published decimal agrees with `value` once rounded to the published digits.
bool matches_published(const Real& value, const char* published, int sig_figs) {
  const Real p = parse_real(published);
  const Real ulp = pow(Real(10), Real(floor(log10(p))) - (sig_figs - 1));
  return abs(value - p) <= ulp / 2;
}

Outcome criterion_table1() {
  const auto t0 = std::chrono::steady_clock::now();
  const TablesReport r = reproduce_tables();
  Check c;
  const int pass = r.count("table1", "", CellStatus::pass);
  c.expect(reference_tables().table1.size() == 33, "expected 33 rows");
  c.expect(pass == 99, std::to_string(pass) + "/99 cells match");
  for (const Table1Row& row : reference_tables().table1) {
    const SpaceSavingSchedule s = schedule_space_saving(row.m, row.m);
    c.expect(s.r == row.r && s.m_un == row.m_un && s.m_ss - 2 == row.m_ss_minus_2,
             "schedule disagrees at m=" + std::to_string(row.m));
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return c.done("33 rows (m, r, m_un, m_ss-2) exact");
}

Outcome criterion_table2_toffoli() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::int64_t> gs = {1620, 912, 4438, 2828, 4468, 704, 8300, 3232};
  const std::vector<std::int64_t> ss = {2308, 1409, 7531, 4278, 7546, 962, 14479, 5018};
  Check c;
  const auto& configs = table2_configs();
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const Config& k = configs[i];
    const std::int64_t g = toffoli_gate_saving(k.n, k.d_eff, k.published_m);
    const std::int64_t s = toffoli_space_saving(k.n, k.d_eff, k.published_m);
    c.expect(g == gs[i], label(k, Mode::gate_saving) + ": " + std::to_string(g) + " != " + std::to_string(gs[i]));
    c.expect(s == ss[i], label(k, Mode::space_saving) + ": " + std::to_string(s) + " != " + std::to_string(ss[i]));
  }
  const TablesReport r = reproduce_tables();
  c.expect(r.count("table2", "toffoli", CellStatus::pass) == 16, "reference data cells disagree");
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return c.done("16/16 Toffoli cells exact");
}

Outcome criterion_table2_qubits() {
  const std::vector<int> gs = {154, 134, 264, 233, 325, 141, 465, 262};
  const std::vector<int> ss = {91, 71, 136, -1, 133, 93, 165, 142};
  Check c;
  const auto& configs = table2_configs();
  int exact = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const Config& k = configs[i];
    const int g = qubits_gate_saving(k.n, k.d_eff, k.published_m);
    const int s = qubits_space_saving(k.n, k.d_eff, k.published_m);
    c.expect(g == gs[i], label(k, Mode::gate_saving) + ": " + std::to_string(g));
    exact += g == gs[i];
    if (ss[i] < 0) {
      c.expect(s == 137, "flagged (32,8,6) cell gives " + std::to_string(s) + ", expected 137");
    } else {
      c.expect(s == ss[i], label(k, Mode::space_saving) + ": " + std::to_string(s));
      exact += s == ss[i];
    }
  }
  const TablesReport r = reproduce_tables();
  c.expect(r.count("table2", "qubits", CellStatus::flagged) == 1, "expected exactly one flagged qubit cell");
  c.expect(r.count("table2", "qubits", CellStatus::fail) == 0, "unflagged qubit cell disagrees");
  return c.done(std::to_string(exact) + "/15 exact; (32,8,6) space-saving = 137, flagged against published 105");
}

Outcome criterion_planner() {
  Check c;
  for (const Config& k : table2_configs()) {
    if (k.override_m) {
      const Plan p = plan_of(k, Mode::gate_saving);
      c.expect(p.m == k.published_m && p.m_overridden, label(k, Mode::gate_saving) + " override");
      continue;
    }
    const Plan p = make_plan(spec_of(k), Mode::gate_saving);
    c.expect(p.m == k.published_m && p.d_eff == k.d_eff,
             label(k, Mode::gate_saving) + ": planner gives m=" + std::to_string(p.m));
  }
  const Real a = parse_real("0.389");
  c.expect(matches_published(pow(a, 8), "0.00052432", 5), "A_3 differs");
  c.expect(matches_published(pow(a, 16), "2.749e-7", 4), "A_4 differs");
  c.expect(matches_published(compute_a_max(21, 7), "0.796571", 6), "A_max(21,7) differs");
  c.expect(matches_published(compute_a_max(21, 14), "0.998225", 6), "A_max(21,14) differs");
  return c.done("m = 7,5,8,6 (exponential), 12,14 (gaussian), 4,7 by override; A_3, A_4, A_max reproduced");
}

struct SweepRecord {
  std::string label;
  Plan plan;
  SweepResult sweep;
  double seconds;
};

std::vector<SweepRecord>& sweeps() {
  static std::vector<SweepRecord> records = [] {
    std::vector<SweepRecord> out;
    for (const Config& k : table2_configs()) {
      if (k.d_eff != 7 && k.d_eff != 13) continue;
      for (Mode mode : {Mode::gate_saving, Mode::space_saving}) {
        const auto t0 = std::chrono::steady_clock::now();
        const Plan plan = plan_of(k, mode);
        const BuiltArtifact art = build(plan);
        const SweepResult s = sweep_artifact(art);
        out.push_back({label(k, mode), plan, s, seconds_since(t0)});
      }
    }
    return out;
  }();
  return records;
}

Outcome criterion_functional() {
  Check c;
  std::uint64_t inputs = 0;
  for (const SweepRecord& r : sweeps()) {
    inputs += r.sweep.inputs;
    c.expect(r.sweep.inputs == (std::uint64_t{1} << r.plan.spec.d), r.label + ": incomplete sweep");
    c.expect(r.sweep.mismatch_count == 0, r.label + ": " + std::to_string(r.sweep.mismatch_count) + " mismatches");
    c.expect(r.sweep.clean_violations == 0 && r.sweep.domain_violations == 0, r.label + ": ancilla not restored");
    c.expect(r.seconds < 10.0, r.label + ": " + std::to_string(r.seconds) + " s");
  }
  return c.done(std::to_string(sweeps().size()) + " circuits, " + std::to_string(inputs) +
                " basis inputs, all match the oracle");
}

Outcome criterion_primitives() {
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  for (int s = 1; s <= 6; ++s) {
    Circuit circ;
    const Register ctl = circ.reg(circ.add_register(1, RegisterRole::workspace));
    const Register a = circ.reg(circ.add_register(s, RegisterRole::workspace));
    const Register b = circ.reg(circ.add_register(s + 1, RegisterRole::workspace));
    const Register borrow = circ.reg(circ.add_register(1, RegisterRole::workspace));
    circ.set_output(b.id);
    AdderLayout layout{ctl[0], {}, {}, std::nullopt};
    for (int k = 0; k < s; ++k) layout.addend.push_back(a[k]);
    for (int k = 0; k <= s; ++k) layout.target.push_back(b[k]);
    if (s == 1) layout.borrow = borrow[0];
    circ.append(build_controlled_adder(layout));
    if (s >= 2) c.expect(count_toffoli(circ.gates()) == 3 * s + 3, "adder s=" + std::to_string(s) + " cost");
    const Simulator sim(circ);
    bool ok = true;
    for (std::uint64_t cv = 0; cv < 2; ++cv) {
      for (std::uint64_t av = 0; av < (1u << s); ++av) {
        for (std::uint64_t bv = 0; bv < (2u << s); ++bv) {
          RegisterState st{cv, av, bv, 0};
          sim.apply(st);
          ok = ok && st[2] == (cv ? (av + bv) & ((2u << s) - 1) : bv) && st[1] == av;
        }
      }
    }
    c.expect(ok, "adder s=" + std::to_string(s) + " wrong");
  }

  std::mt19937_64 rng(2026);
  int constants = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int t = 0; t < 8; ++t, ++constants) {
      const FixedPointValue a(n, 1 + rng() % ((1u << n) - 1));
      Circuit circ;
      const Register ctl = circ.reg(circ.add_register(1, RegisterRole::workspace));
      const Register y = circ.reg(circ.add_register(n, RegisterRole::workspace));
      const Register z = circ.reg(circ.add_register(n, RegisterRole::workspace));
      circ.set_output(z.id);
      circ.append(build_constant_multiplier(a, ctl[0], y, z));
      const Simulator sim(circ);
      bool ok = count_toffoli(circ.gates()) == multiplier_toffoli(a);
      for (std::uint64_t cv = 0; cv < 2; ++cv) {
        for (std::uint64_t yv = 0; yv < (1u << n); ++yv) {
          RegisterState st{cv, yv, 0};
          sim.apply(st);
          ok = ok && st[2] == (cv ? mult_truncated(yv, a) : yv);
        }
      }
      c.expect(ok, "multiplier by ." + a.bit_string() + " wrong");
    }
  }
  c.expect(constants >= 50, "too few random constants");

  for (int w = 1; w <= 6; ++w) {
    Circuit circ;
    const Register x = circ.reg(circ.add_register(w, RegisterRole::domain));
    const Register out = circ.reg(circ.add_register(2 * w, RegisterRole::exponent));
    const Register one = circ.reg(circ.add_register(1, RegisterRole::workspace, 1));
    circ.set_output(out.id);
    circ.append(build_squarer(x, out, one[0]));
    const Simulator sim(circ);
    bool ok = true;
    for (std::uint64_t v = 0; v < (1u << w); ++v) ok = ok && sim.run(v)[out.id] == v * v;
    c.expect(ok, "squarer d=" + std::to_string(w) + " wrong");
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  return c.done("adder s<=6, multiplier n<=8 over " + std::to_string(constants) + " constants, squarer d<=6");
}

Outcome criterion_count_bridge() {
  Check c;
  int built = 0;
  for (const Config& k : table2_configs()) {
    for (Mode mode : {Mode::gate_saving, Mode::space_saving}) {
      const BuiltArtifact art = build(plan_of(k, mode));
      const CountBridge b = bridge_counts(art);
      ++built;
      c.expect(b.toffoli_match(), label(k, mode) + ": counted " + std::to_string(b.counted_toffoli) +
                                      " vs analytic " + std::to_string(b.analytic.total()));
      c.expect(b.qubit_match(), label(k, mode) + ": qubits " + std::to_string(b.counted_qubits) + " vs " +
                                    std::to_string(b.predicted_qubits));
      const int core_qubits = b.counted_qubits - art.squarer_qubits;
      c.expect(core_qubits == b.formula.qubits, label(k, mode) + ": core qubits " + std::to_string(core_qubits) +
                                                    " vs closed form " + std::to_string(b.formula.qubits));
    }
  }
  return c.done(std::to_string(built) + " circuits: counted Toffolis = analytic, qubits = closed form");
}

Outcome criterion_zeroing() {
  Check c;
  std::uint64_t checked = 0;
  int configs = 0;
  for (const SweepRecord& r : sweeps()) {
    if (r.plan.m >= r.plan.d_eff) continue;
    ++configs;
    checked += r.sweep.zeroing_checked;
    c.expect(r.sweep.zeroing_checked > 0, r.label + ": no input reached the tail");
    c.expect(r.sweep.zeroing_violations == 0,
             r.label + ": " + std::to_string(r.sweep.zeroing_violations) + " non-zero outputs");
  }
  c.expect(configs > 0, "no m < d_eff configuration exercised");
  return c.done(std::to_string(configs) + " configurations, " + std::to_string(checked) +
                " inputs with exponent >= 2^m give zero");
}

Outcome criterion_ratios() {
  Check c;
  const TablesReport r = reproduce_tables();
  c.expect(r.ratios.size() == 2, "expected two ratios");
  if (r.ratios.size() != 2) return c.done("");
  c.expect(r.ratios[0].reference_toffoli == 15690 && r.ratios[0].own_toffoli == 912, "exponential ratio inputs");
  c.expect(r.ratios[1].reference_toffoli == 19090 && r.ratios[1].own_toffoli == 704, "gaussian ratio inputs");
  c.expect(r.ratios[1].own_toffoli == toffoli_gate_saving(24, 13, 4), "gaussian minimum not from the formula");
  char buf[128];
  std::snprintf(buf, sizeof buf, "exponential 15690 -> 912 (%.1fx), gaussian 19090 -> 704 (%.1fx)", r.ratios[0].ratio,
                r.ratios[1].ratio);
  return c.done(buf);
}

Outcome criterion_truncation_error() {
  Check c;
  ProblemSpec s;
  s.x_max = 100;
  s.d = 7;
  s.n = 21;
  const Plan plan = make_plan(s, Mode::gate_saving);
  c.expect(plan.m == 5, "plan m != 5");
  const ErrorReport r = error_report(plan);
  constexpr double kPinnedMax = 5.926238153511077e-06;
  constexpr double kPinnedMean = 2.9386850232990545e-07;
  c.expect(std::abs(r.max_abs_error - kPinnedMax) <= 1e-12 * kPinnedMax, "max error drifted");
  c.expect(std::abs(r.mean_abs_error - kPinnedMean) <= 1e-12 * kPinnedMean, "mean error drifted");
  c.expect(r.worst_x == 4, "worst input moved to x=" + std::to_string(r.worst_x));
  c.expect(r.envelope == 5 * 20 * std::ldexp(1.0, -21), "envelope value");
  c.expect(r.within_envelope, "error exceeds the envelope");
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |error| %.6e at x=%llu <= envelope %.6e", r.max_abs_error,
                static_cast<unsigned long long>(r.worst_x), r.envelope);
  return c.done(buf);
}

}  // namespace
}  // namespace revexp

int main() {
  using namespace revexp;
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"schedule arithmetic table", criterion_table1},
      {"Toffoli table", criterion_table2_toffoli},
      {"qubit table", criterion_table2_qubits},
      {"planner m values and spot constants", criterion_planner},
      {"exhaustive functional sweeps", criterion_functional},
      {"primitive exhaustive checks", criterion_primitives},
      {"count bridge", criterion_count_bridge},
      {"zeroing rule", criterion_zeroing},
      {"headline ratios", criterion_ratios},
      {"pinned truncation error", criterion_truncation_error},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = seconds_since(t0) * 1000;
    std::printf("%s criterion %zu: %s - %s [%.0f ms]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].title,
                o.detail.c_str(), ms);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
