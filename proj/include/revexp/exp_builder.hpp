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
#include <string_view>
#include <vector>

#include "revexp/circuit.hpp"
#include "revexp/numerics.hpp"

namespace revexp {

enum class ScheduleOpKind { trick_compute, compute, uncompute, trick_uncompute, extra_uncompute };

std::string_view to_string(ScheduleOpKind kind);

/// One multiplication of the space-saving run. `index` is i of x_i / A_i;
/// the product of multiplication i is written into (or cleared from)
/// `dst_slot` using the product held in `src_slot` (-1 for the x_0 trick,
/// which has no source).
struct ScheduleOp {
  ScheduleOpKind kind = ScheduleOpKind::compute;
  int index = 0;
  int src_slot = -1;
  int dst_slot = 0;
  int wave = 1;

  bool is_uncompute() const {
    return kind == ScheduleOpKind::uncompute || kind == ScheduleOpKind::trick_uncompute ||
           kind == ScheduleOpKind::extra_uncompute;
  }
  friend bool operator==(const ScheduleOp&, const ScheduleOp&) = default;
};

enum class TailZeroSource { none, free_slot, extra_uncompute_slot, fresh_register };

std::string_view to_string(TailZeroSource source);

/// Wave-ordered compute/uncompute plan over a pool of r product registers.
struct SpaceSavingSchedule {
  int m = 0;
  int r = 0;
  int l = 0;
  int m_un = 0;
  int m_ss = 0;
  std::vector<ScheduleOp> ops;
  /// Slot holding the product of the final multiplication.
  int output_slot = 0;
  /// Slots that end the run holding zero.
  std::vector<int> free_slots;
  TailZeroSource tail_zero = TailZeroSource::none;
  /// Pool slot used as the tail's zero register, or -1.
  int tail_zero_slot = -1;

  int count(ScheduleOpKind kind) const;
};

/// r with r(r-1)/2 < m <= r(r+1)/2.
int pool_size_for(int m);

/// Throws UnsupportedParameterError for m <= 3.
SpaceSavingSchedule schedule_space_saving(int m, int d_eff);

struct BuiltArtifact {
  Circuit circuit;
  Plan plan;
  std::optional<SpaceSavingSchedule> schedule;
  /// Qubit count from the closed-form law plus any squarer overhead.
  int predicted_qubits = 0;
  bool tail_present = false;

  /// Register the circuit input is written into.
  int domain_register = -1;
  /// Register whose bits x_i drive the multiplications (equals the domain
  /// register for the exponential).
  int exponent_register = -1;
  /// Registers expected to hold zero at the end of every run.
  std::vector<int> clean_registers;

  /// Gaussian front end, reported apart from the exponentiation core.
  std::int64_t squarer_toffoli = 0;
  int squarer_qubits = 0;
  std::size_t squarer_gate_count = 0;
};

BuiltArtifact build_gate_saving(const Plan& plan);
BuiltArtifact build_space_saving(const Plan& plan);
/// Squarer front end plus the core selected by plan.mode.
BuiltArtifact build_gaussian(const Plan& plan);
/// Dispatches on plan.spec.kind and plan.mode.
BuiltArtifact build(const Plan& plan);

/// Tail of the circuit: zeroes `output` when any of `high_bits` is set, by
/// swapping it with the all-zero `zero` register. Needs high_bits.size()-1
/// OR ancillas.
std::vector<Gate> build_tail(std::span<const QubitRef> high_bits, const Register& output, const Register& zero,
                             std::span<const QubitRef> or_ancillas);

}  // namespace revexp
