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

#include "revexp/circuit.hpp"

#include <algorithm>
#include <set>

#include "revexp/errors.hpp"

namespace revexp {

namespace {

constexpr std::pair<RegisterRole, std::string_view> kRoleNames[] = {
    {RegisterRole::domain, "domain"},
    {RegisterRole::exponent, "exponent"},
    {RegisterRole::constant_product, "constant_product"},
    {RegisterRole::zero_ancilla, "zero_ancilla"},
    {RegisterRole::or_ancilla, "or_ancilla"},
    {RegisterRole::workspace, "workspace"},
};

constexpr std::pair<GateKind, std::string_view> kGateNames[] = {
    {GateKind::NOT, "NOT"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CCNOT, "CCNOT"},
    {GateKind::CSWAP, "CSWAP"},
};

std::string describe(QubitRef q) {
  return "r" + std::to_string(q.reg) + "[" + std::to_string(q.bit) + "]";
}

}  // namespace

std::string_view to_string(RegisterRole role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "unknown";
}

RegisterRole parse_register_role(std::string_view text) {
  for (const auto& [r, name] : kRoleNames) {
    if (name == text) return r;
  }
  throw StructuralError("unknown register role '" + std::string(text) + "'");
}

std::string_view to_string(GateKind kind) {
  for (const auto& [k, name] : kGateNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

GateKind parse_gate_kind(std::string_view text) {
  for (const auto& [k, name] : kGateNames) {
    if (name == text) return k;
  }
  throw StructuralError("unknown gate kind '" + std::string(text) + "'");
}

Gate Gate::x(QubitRef target) { return {GateKind::NOT, {}, {target}}; }

Gate Gate::cx(Control control, QubitRef target) { return {GateKind::CNOT, {control}, {target}}; }

Gate Gate::ccx(Control c0, Control c1, QubitRef target) {
  return {GateKind::CCNOT, {c0, c1}, {target}};
}

Gate Gate::cswap(Control control, QubitRef a, QubitRef b) {
  return {GateKind::CSWAP, {control}, {a, b}};
}

void Gate::check_shape() const {
  std::size_t want_controls = 0;
  std::size_t want_targets = 1;
  switch (kind) {
    case GateKind::NOT: break;
    case GateKind::CNOT: want_controls = 1; break;
    case GateKind::CCNOT: want_controls = 2; break;
    case GateKind::CSWAP: want_controls = 1; want_targets = 2; break;
  }
  if (controls.size() != want_controls || targets.size() != want_targets) {
    throw StructuralError(std::string(to_string(kind)) + " gate with " + std::to_string(controls.size()) +
                          " controls and " + std::to_string(targets.size()) + " targets");
  }
  std::set<QubitRef> seen;
  for (const auto& c : controls) {
    if (!seen.insert(c.qubit).second) throw StructuralError("qubit " + describe(c.qubit) + " repeated in gate");
  }
  for (const auto& t : targets) {
    if (!seen.insert(t).second) throw StructuralError("qubit " + describe(t) + " repeated in gate");
  }
}

int Circuit::add_register(int width, RegisterRole role, std::uint64_t initial_value) {
  if (width < 1 || width > 64) throw StructuralError("register width must lie in [1, 64]");
  Register r{static_cast<int>(registers_.size()), width, role, initial_value};
  if ((initial_value & ~r.mask()) != 0) throw StructuralError("initial value wider than register");
  registers_.push_back(r);
  return r.id;
}

const Register& Circuit::reg(int id) const {
  if (id < 0 || id >= static_cast<int>(registers_.size())) {
    throw StructuralError("register id " + std::to_string(id) + " not allocated");
  }
  return registers_[id];
}

void Circuit::append(Gate gate) { gates_.push_back(std::move(gate)); }

void Circuit::append(std::span<const Gate> gates) { gates_.insert(gates_.end(), gates.begin(), gates.end()); }

void Circuit::set_output(int register_id) {
  reg(register_id);
  output_ = register_id;
}

int Circuit::qubit_count() const {
  int total = 0;
  for (const auto& r : registers_) total += r.width;
  return total;
}

void Circuit::validate() const {
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    const Register& r = registers_[i];
    if (r.id != static_cast<int>(i)) throw StructuralError("register ids must be dense and ordered");
    if (r.width < 1 || r.width > 64) throw StructuralError("register width must lie in [1, 64]");
    if ((r.initial_value & ~r.mask()) != 0) throw StructuralError("initial value wider than register");
    if (r.role == RegisterRole::or_ancilla && r.initial_value != r.mask()) {
      throw StructuralError("OR ancillas must start in the all-ones state");
    }
  }
  if (output_ < 0 || output_ >= static_cast<int>(registers_.size())) {
    throw StructuralError("circuit has no valid output register");
  }
  auto check_ref = [&](QubitRef q) {
    if (q.reg < 0 || q.reg >= static_cast<int>(registers_.size()) || q.bit < 0 ||
        q.bit >= registers_[q.reg].width) {
      throw StructuralError("gate references unallocated qubit " + describe(q));
    }
  };
  for (const Gate& g : gates_) {
    g.check_shape();
    for (const auto& c : g.controls) check_ref(c.qubit);
    for (const auto& t : g.targets) check_ref(t);
  }
}

std::int64_t count_toffoli(std::span<const Gate> gates) {
  std::int64_t total = 0;
  for (const Gate& g : gates) total += toffoli_cost(g.kind);
  return total;
}

ResourceCount count_resources(const Circuit& circuit) {
  ResourceCount rc;
  rc.qubits = circuit.qubit_count();
  for (const Gate& g : circuit.gates()) {
    ++rc.by_kind[g.kind];
    rc.toffoli += toffoli_cost(g.kind);
  }
  return rc;
}

std::vector<Gate> invert(std::span<const Gate> gates) { return {gates.rbegin(), gates.rend()}; }

}  // namespace revexp
