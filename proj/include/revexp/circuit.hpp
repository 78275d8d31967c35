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

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revexp {

enum class RegisterRole { domain, exponent, constant_product, zero_ancilla, or_ancilla, workspace };

std::string_view to_string(RegisterRole role);
RegisterRole parse_register_role(std::string_view text);

struct QubitRef {
  int reg = 0;
  int bit = 0;
  friend auto operator<=>(const QubitRef&, const QubitRef&) = default;
};

enum class Polarity { positive, negative };

struct Control {
  QubitRef qubit;
  Polarity polarity = Polarity::positive;
  friend bool operator==(const Control&, const Control&) = default;
};

inline Control pos(QubitRef q) { return {q, Polarity::positive}; }
inline Control neg(QubitRef q) { return {q, Polarity::negative}; }

enum class GateKind { NOT, CNOT, CCNOT, CSWAP };

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view text);

struct Gate {
  GateKind kind = GateKind::NOT;
  std::vector<Control> controls;
  std::vector<QubitRef> targets;

  static Gate x(QubitRef target);
  static Gate cx(Control control, QubitRef target);
  static Gate ccx(Control c0, Control c1, QubitRef target);
  static Gate cswap(Control control, QubitRef a, QubitRef b);

  /// Checks arity for the kind and that no qubit appears twice.
  void check_shape() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Register {
  int id = 0;
  int width = 1;
  RegisterRole role = RegisterRole::workspace;
  std::uint64_t initial_value = 0;

  QubitRef operator[](int bit) const { return {id, bit}; }
  std::uint64_t mask() const { return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1; }
  friend bool operator==(const Register&, const Register&) = default;
};

/// Register layout plus an ordered gate list over {NOT, CNOT, CCNOT, CSWAP}.
class Circuit {
 public:
  /// Allocates a register and returns its id (ids are dense, in allocation order).
  int add_register(int width, RegisterRole role, std::uint64_t initial_value = 0);
  const Register& reg(int id) const;
  const std::vector<Register>& registers() const { return registers_; }

  void append(Gate gate);
  void append(std::span<const Gate> gates);
  const std::vector<Gate>& gates() const { return gates_; }

  void set_output(int register_id);
  int output() const { return output_; }

  int qubit_count() const;
  /// Throws StructuralError if any register or gate violates the IR invariants.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
  int output_ = -1;
};

struct ResourceCount {
  std::int64_t toffoli = 0;
  int qubits = 0;
  std::map<GateKind, std::int64_t> by_kind;
};

/// Toffoli-equivalent cost of one gate: CCNOT and CSWAP cost 1, the rest 0.
/// Polarity is free.
inline int toffoli_cost(GateKind kind) {
  return (kind == GateKind::CCNOT || kind == GateKind::CSWAP) ? 1 : 0;
}

std::int64_t count_toffoli(std::span<const Gate> gates);
ResourceCount count_resources(const Circuit& circuit);

/// Every gate kind in the vocabulary is self-inverse, so inversion is reversal.
std::vector<Gate> invert(std::span<const Gate> gates);

}  // namespace revexp
