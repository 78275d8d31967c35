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

#include "revexp/qarith.hpp"

#include <set>
#include <stdexcept>

#include "revexp/errors.hpp"

namespace revexp {

namespace {

void require_distinct(std::initializer_list<std::span<const QubitRef>> groups, const char* what) {
  std::set<QubitRef> seen;
  for (auto group : groups) {
    for (const QubitRef& q : group) {
      if (!seen.insert(q).second) throw StructuralError(std::string(what) + ": operand qubits overlap");
    }
  }
}

std::vector<QubitRef> qubits_of(const Register& r) {
  std::vector<QubitRef> out;
  out.reserve(r.width);
  for (int b = 0; b < r.width; ++b) out.push_back(r[b]);
  return out;
}

// target ^= c0 & c1 & c2, using `dirty` as a borrowed qubit that ends unchanged.
void append_c3x(std::vector<Gate>& g, QubitRef c0, QubitRef c1, QubitRef c2, QubitRef target, QubitRef dirty) {
  g.push_back(Gate::ccx(pos(c2), pos(dirty), target));
  g.push_back(Gate::ccx(pos(c0), pos(c1), dirty));
  g.push_back(Gate::ccx(pos(c2), pos(dirty), target));
  g.push_back(Gate::ccx(pos(c0), pos(c1), dirty));
}

}  // namespace

std::int64_t controlled_adder_toffoli(int s) {
  if (s < 1) throw DomainError("adder width must be at least 1");
  return s == 1 ? 5 : 3 * static_cast<std::int64_t>(s) + 3;
}

std::vector<Gate> build_controlled_adder(const AdderLayout& layout) {
  const int s = static_cast<int>(layout.addend.size());
  if (s < 1) throw DomainError("adder width must be at least 1");
  if (static_cast<int>(layout.target.size()) != s + 1) {
    throw StructuralError("adder target must hold s+1 qubits");
  }
  const std::span<const QubitRef> ctl(&layout.control, 1);
  require_distinct({ctl, layout.addend, layout.target}, "controlled adder");

  const QubitRef c = layout.control;
  const auto& a = layout.addend;
  const auto& b = layout.target;
  const QubitRef z = b[s];
  std::vector<Gate> g;

  if (s == 1) {
    if (!layout.borrow) throw StructuralError("one-bit controlled adder needs a borrowed qubit");
    const std::span<const QubitRef> borrowed(&*layout.borrow, 1);
    require_distinct({ctl, a, b, borrowed}, "controlled adder");
    append_c3x(g, c, a[0], b[0], z, *layout.borrow);
    g.push_back(Gate::ccx(pos(c), pos(a[0]), b[0]));
    return g;
  }

  // Carries ripple up through the addend wires (a[i+1] holds c_{i+1} xor
  // junk); only the writes into the target and the carry-out see the control.
  for (int i = 1; i < s; ++i) g.push_back(Gate::cx(pos(a[i]), b[i]));
  g.push_back(Gate::ccx(pos(c), pos(a[s - 1]), z));
  for (int i = s - 2; i >= 1; --i) g.push_back(Gate::cx(pos(a[i]), a[i + 1]));
  for (int i = 0; i < s - 1; ++i) g.push_back(Gate::ccx(pos(b[i]), pos(a[i]), a[i + 1]));
  append_c3x(g, c, b[s - 1], a[s - 1], z, a[0]);
  for (int i = s - 1; i >= 1; --i) {
    g.push_back(Gate::ccx(pos(c), pos(a[i]), b[i]));
    g.push_back(Gate::ccx(pos(b[i - 1]), pos(a[i - 1]), a[i]));
  }
  for (int i = 1; i < s - 1; ++i) g.push_back(Gate::cx(pos(a[i]), a[i + 1]));
  g.push_back(Gate::ccx(pos(c), pos(a[0]), b[0]));
  for (int i = 1; i < s; ++i) g.push_back(Gate::cx(pos(a[i]), b[i]));

  if (count_toffoli(g) != controlled_adder_toffoli(s)) {
    throw std::logic_error("controlled adder Toffoli count drifted from 3s+3");
  }
  return g;
}

std::vector<int> multiplier_addition_widths(const FixedPointValue& a) {
  std::vector<int> widths;
  for (int j = 1; j < a.width(); ++j) {
    if (a.bit(j)) widths.push_back(j);
  }
  return widths;
}

std::vector<Gate> build_constant_multiplier(const FixedPointValue& a, QubitRef control, const Register& y,
                                            const Register& z) {
  if (a.mantissa() == 0) throw DomainError("constant multiplier by zero is never emitted");
  const int n = a.width();
  if (y.width != n || z.width != n) throw StructuralError("multiplier registers must match the constant width");
  const auto yq = qubits_of(y);
  const auto zq = qubits_of(z);
  const std::span<const QubitRef> ctl(&control, 1);
  require_distinct({ctl, yq, zq}, "constant multiplier");

  std::vector<Gate> g;
  const std::vector<int> widths = multiplier_addition_widths(a);
  if (!widths.empty()) {
    // z starts clean, so the first shifted addition is a plain controlled copy.
    const int j0 = widths.front();
    for (int k = 0; k < j0; ++k) g.push_back(Gate::ccx(pos(control), pos(y[n - j0 + k]), z[k]));
    for (std::size_t w = 1; w < widths.size(); ++w) {
      const int j = widths[w];
      AdderLayout layout{control, {}, {}, std::nullopt};
      for (int k = 0; k < j; ++k) layout.addend.push_back(y[n - j + k]);
      for (int k = 0; k <= j; ++k) layout.target.push_back(z[k]);
      auto add = build_controlled_adder(layout);
      g.insert(g.end(), add.begin(), add.end());
    }
  }
  for (int k = 0; k < n; ++k) g.push_back(Gate::ccx(neg(control), pos(y[k]), z[k]));
  return g;
}

std::vector<Gate> build_constant_multiplier_inverse(const FixedPointValue& a, QubitRef control,
                                                    const Register& y, const Register& z) {
  return invert(build_constant_multiplier(a, control, y, z));
}

BitDiffPlan plan_transformation(const FixedPointValue& from, const FixedPointValue& to) {
  if (from.width() != to.width()) throw DomainError("transformation endpoints differ in width");
  BitDiffPlan plan{from, to, {}};
  const std::uint64_t diff = from.mantissa() ^ to.mantissa();
  for (int j = 0; j < from.width(); ++j) {
    if ((diff >> j) & 1U) plan.flip_positions.push_back(j);
  }
  return plan;
}

std::vector<Gate> build_transformation(const BitDiffPlan& plan, const Register& reg,
                                       std::optional<QubitRef> control) {
  if (reg.width != plan.from.width()) throw StructuralError("transformation register width mismatch");
  if (control && control->reg == reg.id) throw StructuralError("transformation control inside its own register");
  std::vector<Gate> g;
  for (int j : plan.flip_positions) g.push_back(control ? Gate::cx(pos(*control), reg[j]) : Gate::x(reg[j]));
  return g;
}

std::vector<Gate> build_or_gate(QubitRef a, QubitRef b, QubitRef ancilla) {
  std::array<QubitRef, 3> q{a, b, ancilla};
  require_distinct({q}, "OR gate");
  // 1 xor (!a & !b) = a | b
  return {Gate::ccx(neg(a), neg(b), ancilla)};
}

QubitRef build_or_cascade(std::span<const QubitRef> inputs, std::span<const QubitRef> ancillas,
                          std::vector<Gate>& out) {
  if (inputs.empty()) throw StructuralError("OR cascade needs at least one input");
  if (ancillas.size() + 1 < inputs.size()) throw StructuralError("OR cascade needs inputs-1 ancillas");
  QubitRef acc = inputs[0];
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    auto g = build_or_gate(acc, inputs[i], ancillas[i - 1]);
    out.insert(out.end(), g.begin(), g.end());
    acc = ancillas[i - 1];
  }
  return acc;
}

std::vector<Gate> build_controlled_register_swap(QubitRef control, const Register& a, const Register& b) {
  if (a.width != b.width) throw StructuralError("register swap needs equal widths");
  if (a.id == b.id || control.reg == a.id || control.reg == b.id) {
    throw StructuralError("register swap operands overlap");
  }
  std::vector<Gate> g;
  for (int k = 0; k < a.width; ++k) g.push_back(Gate::cswap(pos(control), a[k], b[k]));
  return g;
}

std::vector<Gate> build_squarer(std::span<const QubitRef> x, std::span<const QubitRef> out, QubitRef one) {
  const int w = static_cast<int>(x.size());
  if (w < 1) throw StructuralError("squarer input is empty");
  if (static_cast<int>(out.size()) < 2 * w) {
    throw DomainError("squarer output needs " + std::to_string(2 * w) + " qubits to hold (2^d - 1)^2");
  }
  const std::span<const QubitRef> one_span(&one, 1);
  require_distinct({x, out, one_span}, "squarer");

  std::vector<Gate> g;
  if (w == 1) {
    g.push_back(Gate::cx(pos(x[0]), out[0]));
    return g;
  }
  // Before row i the partial sum is below 2^(i+w), so a (w+1)-qubit target
  // starting at out[i] never overflows.
  for (int i = 0; i < w; ++i) {
    AdderLayout layout{x[i], {}, {}, std::nullopt};
    for (int k = 0; k < w; ++k) layout.addend.push_back(k == i ? one : x[k]);
    for (int k = 0; k <= w; ++k) layout.target.push_back(out[i + k]);
    auto add = build_controlled_adder(layout);
    g.insert(g.end(), add.begin(), add.end());
  }
  return g;
}

std::vector<Gate> build_squarer(const Register& x_reg, const Register& out_reg, QubitRef one) {
  return build_squarer(qubits_of(x_reg), qubits_of(out_reg), one);
}

std::int64_t squarer_toffoli(int x_width) {
  return x_width < 2 ? 0 : x_width * controlled_adder_toffoli(x_width);
}

std::vector<Gate> build_twos_complement_magnitude(const Register& k, const Register& magnitude,
                                                  const Register& one, QubitRef borrow) {
  const int d = k.width;
  if (d < 2) throw DomainError("two's-complement magnitude needs at least 2 bits");
  if (magnitude.width != d || one.width != d - 1) throw StructuralError("magnitude register widths mismatch");
  const QubitRef sign = k[d - 1];
  std::vector<Gate> g;
  // Negative inputs: |k| = ~k + 1 over the low d-1 bits, carry into the top bit.
  for (int j = 0; j < d - 1; ++j) {
    g.push_back(Gate::cx(pos(k[j]), magnitude[j]));
    g.push_back(Gate::cx(pos(sign), magnitude[j]));
  }
  AdderLayout layout{sign, qubits_of(one), qubits_of(magnitude), std::nullopt};
  if (d == 2) layout.borrow = borrow;
  auto add = build_controlled_adder(layout);
  g.insert(g.end(), add.begin(), add.end());
  return g;
}

std::int64_t twos_complement_magnitude_toffoli(int width) { return controlled_adder_toffoli(width - 1); }

}  // namespace revexp
