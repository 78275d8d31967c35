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

#include "revexp/exp_builder.hpp"

#include <algorithm>
#include <stdexcept>

#include "revexp/errors.hpp"
#include "revexp/estimator.hpp"
#include "revexp/qarith.hpp"

namespace revexp {

std::string_view to_string(ScheduleOpKind kind) {
  switch (kind) {
    case ScheduleOpKind::trick_compute: return "trick_compute";
    case ScheduleOpKind::compute: return "compute";
    case ScheduleOpKind::uncompute: return "uncompute";
    case ScheduleOpKind::trick_uncompute: return "trick_uncompute";
    case ScheduleOpKind::extra_uncompute: return "extra_uncompute";
  }
  return "unknown";
}

std::string_view to_string(TailZeroSource source) {
  switch (source) {
    case TailZeroSource::none: return "none";
    case TailZeroSource::free_slot: return "free_slot";
    case TailZeroSource::extra_uncompute_slot: return "extra_uncompute_slot";
    case TailZeroSource::fresh_register: return "fresh_register";
  }
  return "unknown";
}

int SpaceSavingSchedule::count(ScheduleOpKind kind) const {
  return static_cast<int>(std::count_if(ops.begin(), ops.end(), [&](const ScheduleOp& op) { return op.kind == kind; }));
}

int pool_size_for(int m) {
  if (m < 1) throw DomainError("multiplication count must be at least 1");
  int r = 1;
  while (r * (r + 1) / 2 < m) ++r;
  return r;
}

SpaceSavingSchedule schedule_space_saving(int m, int d_eff) {
  if (m <= 3) throw UnsupportedParameterError("space-saving schedule needs m > 3; use gate-saving");
  if (m > d_eff) throw InvalidSpecError("m exceeds the exponent width");
  const ScheduleArithmetic arith = schedule_arithmetic(m);
  SpaceSavingSchedule s;
  s.m = m;
  s.r = arith.r;
  s.l = arith.l;
  s.m_un = arith.m_un;
  s.m_ss = arith.m_ss;

  std::vector<bool> busy(s.r, false);
  std::vector<int> slot_of(m, -1);
  auto lowest_free = [&] {
    for (int k = 0; k < s.r; ++k) {
      if (!busy[k]) return k;
    }
    throw std::logic_error("space-saving pool exhausted");
  };
  auto source_of = [&](int index) { return index == 0 ? -1 : slot_of[index - 1]; };

  int next = 0;
  for (int wave = 1; next < m; ++wave) {
    const int width = s.r - wave + 1;
    if (width < 1) throw std::logic_error("space-saving waves ran out before m computes");
    std::vector<int> computed;
    for (int c = 0; c < width && next < m; ++c) {
      const int dst = lowest_free();
      s.ops.push_back({next == 0 ? ScheduleOpKind::trick_compute : ScheduleOpKind::compute, next, source_of(next),
                       dst, wave});
      busy[dst] = true;
      slot_of[next] = dst;
      computed.push_back(next++);
    }
    if (next == m) break;
    // Keep the newest product of the wave; clear the rest newest-first so
    // every source is still present when its uncompute runs.
    for (auto it = computed.rbegin() + 1; it != computed.rend(); ++it) {
      const int i = *it;
      s.ops.push_back({i == 0 ? ScheduleOpKind::trick_uncompute : ScheduleOpKind::uncompute, i, source_of(i),
                       slot_of[i], wave});
      busy[slot_of[i]] = false;
    }
  }
  s.output_slot = slot_of[m - 1];

  const int wave_end = s.ops.back().wave;
  if (m < d_eff) {
    if (arith.full_pool && arith.l > 0) {
      const int i = m - 2;
      s.ops.push_back({ScheduleOpKind::extra_uncompute, i, source_of(i), slot_of[i], wave_end});
      busy[slot_of[i]] = false;
      s.tail_zero = TailZeroSource::extra_uncompute_slot;
      s.tail_zero_slot = slot_of[i];
    } else if (std::find(busy.begin(), busy.end(), false) != busy.end()) {
      s.tail_zero = TailZeroSource::free_slot;
      s.tail_zero_slot = lowest_free();
    } else {
      s.tail_zero = TailZeroSource::fresh_register;
    }
  }
  for (int k = 0; k < s.r; ++k) {
    if (!busy[k] && k != s.tail_zero_slot) s.free_slots.push_back(k);
  }

  const int computes = s.count(ScheduleOpKind::trick_compute) + s.count(ScheduleOpKind::compute);
  const int uncomputes = s.count(ScheduleOpKind::trick_uncompute) + s.count(ScheduleOpKind::uncompute);
  if (computes != m || uncomputes != s.m_un) {
    throw std::logic_error("space-saving schedule disagrees with its pool arithmetic");
  }
  return s;
}

std::vector<Gate> build_tail(std::span<const QubitRef> high_bits, const Register& output, const Register& zero,
                             std::span<const QubitRef> or_ancillas) {
  if (high_bits.empty()) throw StructuralError("tail needs at least one high exponent bit");
  std::vector<Gate> g;
  const QubitRef control = build_or_cascade(high_bits, or_ancillas, g);
  auto swap = build_controlled_register_swap(control, output, zero);
  g.insert(g.end(), swap.begin(), swap.end());
  return g;
}

namespace {

struct FrontEnd {
  int domain_register = -1;
  int exponent_register = -1;
  std::vector<QubitRef> exponent_bits;
  std::int64_t toffoli = 0;
  int qubits = 0;
  std::size_t gate_count = 0;
};

void check_plan(const Plan& plan) {
  plan.spec.validate();
  if (plan.d_eff != effective_exponent_width(plan.spec)) throw InvalidSpecError("plan d_eff does not match its spec");
  if (plan.m < 1 || plan.m > plan.d_eff) throw InvalidSpecError("plan m outside [1, d_eff]");
  if (static_cast<int>(plan.constants.a_i.size()) < plan.m) throw InvalidSpecError("plan lacks constants A_i");
  for (int i = 0; i < plan.m; ++i) {
    if (plan.constants.a_i[i].width() != plan.n() || plan.constants.a_i[i].mantissa() == 0) {
      throw InvalidSpecError("constant A_" + std::to_string(i) + " is zero or has the wrong width");
    }
  }
}

// Allocates the input side and, for the gaussian, emits the squarer that
// fills the exponent register.
FrontEnd emit_front_end(Circuit& c, const Plan& plan) {
  FrontEnd f;
  const ProblemSpec& spec = plan.spec;
  if (spec.kind == FunctionKind::exponential) {
    f.domain_register = f.exponent_register = c.add_register(spec.d, RegisterRole::domain);
  } else {
    f.domain_register = c.add_register(spec.d, RegisterRole::domain);
    f.exponent_register = c.add_register(plan.d_eff, RegisterRole::exponent);
    // Copies: later allocations may move the register table.
    const Register domain = c.reg(f.domain_register);
    const Register exponent = c.reg(f.exponent_register);
    std::vector<Gate> g;
    if (!spec.symmetric) {
      const int one = c.add_register(1, RegisterRole::workspace, 1);
      g = build_squarer(domain, exponent, c.reg(one)[0]);
    } else {
      const int d = spec.d;
      const Register magnitude = c.reg(c.add_register(d, RegisterRole::workspace));
      const Register one = c.reg(c.add_register(d - 1, RegisterRole::workspace, 1));
      g = build_twos_complement_magnitude(domain, magnitude, one, exponent[0]);
      std::vector<QubitRef> low;
      std::vector<QubitRef> out;
      for (int j = 0; j < d - 1; ++j) low.push_back(magnitude[j]);
      for (int j = 0; j < 2 * d - 2; ++j) out.push_back(exponent[j]);
      auto sq = build_squarer(low, out, one[0]);
      g.insert(g.end(), sq.begin(), sq.end());
      // |k| = 2^(d-1) leaves the low bits clear, so its square is the lone top bit.
      g.push_back(Gate::cx(pos(magnitude[d - 1]), exponent[2 * d - 2]));
    }
    f.toffoli = count_toffoli(g);
    f.gate_count = g.size();
    c.append(g);
  }
  for (int i = 0; i < plan.d_eff; ++i) f.exponent_bits.push_back(c.reg(f.exponent_register)[i]);
  f.qubits = c.qubit_count() - plan.d_eff;
  return f;
}

std::vector<Gate> trick_gates(const Plan& plan, const Register& reg, QubitRef x0) {
  const int n = plan.n();
  auto g = build_transformation(plan_transformation(FixedPointValue(n, 0), plan.constants.c_fp), reg);
  auto h = build_transformation(plan_transformation(plan.constants.c_fp, plan.constants.c1_fp), reg, x0);
  g.insert(g.end(), h.begin(), h.end());
  return g;
}

int add_or_ancillas(Circuit& c, const Plan& plan) {
  const int count = plan.d_eff - plan.m - 1;
  if (count <= 0) return -1;
  return c.add_register(count, RegisterRole::or_ancilla, (std::uint64_t{1} << count) - 1);
}

std::vector<Gate> tail_gates(const Circuit& c, const Plan& plan, const FrontEnd& f, int output, int zero,
                             int or_reg) {
  std::vector<QubitRef> high(f.exponent_bits.begin() + plan.m, f.exponent_bits.end());
  std::vector<QubitRef> ancillas;
  if (or_reg >= 0) {
    for (int b = 0; b < c.reg(or_reg).width; ++b) ancillas.push_back(c.reg(or_reg)[b]);
  }
  return build_tail(high, c.reg(output), c.reg(zero), ancillas);
}

BuiltArtifact finish(Circuit c, const Plan& plan, Mode mode, const FrontEnd& f) {
  BuiltArtifact art;
  art.plan = plan;
  art.plan.mode = mode;
  art.domain_register = f.domain_register;
  art.exponent_register = f.exponent_register;
  art.squarer_toffoli = f.toffoli;
  art.squarer_qubits = f.qubits;
  art.squarer_gate_count = f.gate_count;
  art.tail_present = plan.m < plan.d_eff;
  const int core = mode == Mode::gate_saving ? qubits_gate_saving(plan.n(), plan.d_eff, plan.m)
                                             : qubits_space_saving(plan.n(), plan.d_eff, plan.m);
  art.predicted_qubits = core + f.qubits;
  c.validate();
  art.circuit = std::move(c);
  return art;
}

}  // namespace

BuiltArtifact build_gate_saving(const Plan& plan) {
  check_plan(plan);
  const int n = plan.n();
  const int m = plan.m;
  Circuit c;
  FrontEnd f = emit_front_end(c, plan);

  std::vector<int> products;
  for (int i = 0; i < m; ++i) products.push_back(c.add_register(n, RegisterRole::constant_product));
  int zero = -1;
  int or_reg = -1;
  if (m < plan.d_eff) {
    zero = c.add_register(n, RegisterRole::zero_ancilla);
    or_reg = add_or_ancillas(c, plan);
  }

  c.append(trick_gates(plan, c.reg(products[0]), f.exponent_bits[0]));
  for (int i = 1; i < m; ++i) {
    c.append(build_constant_multiplier(plan.constants.a_i[i], f.exponent_bits[i], c.reg(products[i - 1]),
                                       c.reg(products[i])));
  }
  if (zero >= 0) c.append(tail_gates(c, plan, f, products[m - 1], zero, or_reg));
  c.set_output(products[m - 1]);
  return finish(std::move(c), plan, Mode::gate_saving, f);
}

BuiltArtifact build_space_saving(const Plan& plan) {
  check_plan(plan);
  SpaceSavingSchedule s = schedule_space_saving(plan.m, plan.d_eff);
  const int n = plan.n();
  Circuit c;
  FrontEnd f = emit_front_end(c, plan);

  std::vector<int> pool;
  for (int k = 0; k < s.r; ++k) pool.push_back(c.add_register(n, RegisterRole::constant_product));
  int zero = -1;
  if (s.tail_zero == TailZeroSource::fresh_register) {
    zero = c.add_register(n, RegisterRole::zero_ancilla);
  } else if (s.tail_zero_slot >= 0) {
    zero = pool[s.tail_zero_slot];
  }
  const int or_reg = plan.m < plan.d_eff ? add_or_ancillas(c, plan) : -1;

  for (const ScheduleOp& op : s.ops) {
    const Register& dst = c.reg(pool[op.dst_slot]);
    switch (op.kind) {
      case ScheduleOpKind::trick_compute:
        c.append(trick_gates(plan, dst, f.exponent_bits[0]));
        break;
      case ScheduleOpKind::trick_uncompute:
        c.append(invert(trick_gates(plan, dst, f.exponent_bits[0])));
        break;
      case ScheduleOpKind::compute:
        c.append(build_constant_multiplier(plan.constants.a_i[op.index], f.exponent_bits[op.index],
                                           c.reg(pool[op.src_slot]), dst));
        break;
      case ScheduleOpKind::uncompute:
      case ScheduleOpKind::extra_uncompute:
        c.append(build_constant_multiplier_inverse(plan.constants.a_i[op.index], f.exponent_bits[op.index],
                                                   c.reg(pool[op.src_slot]), dst));
        break;
    }
  }
  const int output = pool[s.output_slot];
  if (zero >= 0) c.append(tail_gates(c, plan, f, output, zero, or_reg));
  c.set_output(output);

  BuiltArtifact art = finish(std::move(c), plan, Mode::space_saving, f);
  for (int k : s.free_slots) art.clean_registers.push_back(pool[k]);
  art.schedule = std::move(s);
  return art;
}

BuiltArtifact build_gaussian(const Plan& plan) {
  if (plan.spec.kind != FunctionKind::gaussian) throw InvalidSpecError("build_gaussian needs a gaussian plan");
  return plan.mode == Mode::gate_saving ? build_gate_saving(plan) : build_space_saving(plan);
}

BuiltArtifact build(const Plan& plan) {
  if (plan.spec.kind == FunctionKind::gaussian) return build_gaussian(plan);
  return plan.mode == Mode::gate_saving ? build_gate_saving(plan) : build_space_saving(plan);
}

}  // namespace revexp
