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
#include <optional>
#include <span>
#include <vector>

#include "revexp/circuit.hpp"
#include "revexp/fixed_point.hpp"

namespace revexp {

/// Operands of one controlled truncated addition target += control ? addend : 0.
///
/// `addend` holds s qubits (least significant first); `target` holds s+1
/// qubits, the low s forming the sum and the last receiving the carry-out.
/// For s = 1 there is no spare qubit inside the adder to borrow, so the
/// caller must name one in `borrow` (any qubit outside the layout; its value
/// is irrelevant and is restored).
struct AdderLayout {
  QubitRef control;
  std::vector<QubitRef> addend;
  std::vector<QubitRef> target;
  std::optional<QubitRef> borrow;
};

/// Controlled ripple-carry adder without ancillas (Takahashi-style carry
/// chain stored in the addend wires). Costs 3s+3 Toffolis for s >= 2 and 5
/// for s = 1.
std::vector<Gate> build_controlled_adder(const AdderLayout& layout);

/// Toffoli count emitted by build_controlled_adder for addend width s.
std::int64_t controlled_adder_toffoli(int s);

/// Bit positions j >= 1 with a_j = 1, ascending. These are the shifted
/// additions hard-wired into a constant multiplier; bit 0 never contributes.
std::vector<int> multiplier_addition_widths(const FixedPointValue& a);

/// Controlled fixed-point multiply by a constant into a clean register:
/// control set -> z = sum over j of (y >> (n - j)); control clear -> z = y.
/// The smallest j is realized as a controlled copy, the rest as controlled
/// adders of width j, followed by n negative-control copy gates.
std::vector<Gate> build_constant_multiplier(const FixedPointValue& a, QubitRef control, const Register& y,
                                            const Register& z);
std::vector<Gate> build_constant_multiplier_inverse(const FixedPointValue& a, QubitRef control,
                                                    const Register& y, const Register& z);

/// Bit flips that turn one constant into another.
struct BitDiffPlan {
  FixedPointValue from;
  FixedPointValue to;
  std::vector<int> flip_positions;
  int p() const { return static_cast<int>(flip_positions.size()); }
};

BitDiffPlan plan_transformation(const FixedPointValue& from, const FixedPointValue& to);
/// One NOT per flipped bit, or one CNOT per flipped bit when controlled.
std::vector<Gate> build_transformation(const BitDiffPlan& plan, const Register& reg,
                                       std::optional<QubitRef> control = std::nullopt);

/// ancilla (starting at 1) becomes a OR b via one negative-control Toffoli.
std::vector<Gate> build_or_gate(QubitRef a, QubitRef b, QubitRef ancilla);

/// Folds inputs[0] | inputs[1] | ... into a chain of OR ancillas; needs
/// inputs.size() - 1 ancillas and returns the qubit holding the result.
/// With a single input no gates are emitted and that input is returned.
QubitRef build_or_cascade(std::span<const QubitRef> inputs, std::span<const QubitRef> ancillas,
                          std::vector<Gate>& out);

std::vector<Gate> build_controlled_register_swap(QubitRef control, const Register& a, const Register& b);

/// Schoolbook squarer: out (all zero, at least 2*|x| qubits) += x^2.
/// Row i adds x << i under control x_i, with the control's own bit replaced
/// by `one`, a qubit that must hold 1.
std::vector<Gate> build_squarer(std::span<const QubitRef> x, std::span<const QubitRef> out, QubitRef one);
std::vector<Gate> build_squarer(const Register& x_reg, const Register& out_reg, QubitRef one);
std::int64_t squarer_toffoli(int x_width);

/// |k| of a two's-complement register into a clean register of the same
/// width. `one` must be a (width-1)-qubit register holding the value 1;
/// `borrow` is any outside qubit (only used when width = 2).
std::vector<Gate> build_twos_complement_magnitude(const Register& k, const Register& magnitude,
                                                  const Register& one, QubitRef borrow);
std::int64_t twos_complement_magnitude_toffoli(int width);

}  // namespace revexp
