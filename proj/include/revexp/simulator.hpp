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
#include <functional>
#include <span>
#include <vector>

#include "revexp/circuit.hpp"

namespace revexp {

/// Register contents indexed by register id.
using RegisterState = std::vector<std::uint64_t>;

/// Classical basis-state simulator. The circuit is validated and lowered to
/// (register, mask) form once; each run then costs a few word operations per
/// gate.
class Simulator {
 public:
  explicit Simulator(const Circuit& circuit);

  /// State with every register at its initial value.
  RegisterState initial_state() const;
  /// Initial state with the domain register set to `domain_value`.
  RegisterState initial_state(std::uint64_t domain_value) const;

  void apply(RegisterState& state) const;
  void apply_inverse(RegisterState& state) const;
  RegisterState run(std::uint64_t domain_value) const;

  int domain_register() const { return domain_register_; }
  int domain_width() const { return domain_width_; }

 private:
  struct Op {
    GateKind kind;
    int creg[2];
    std::uint64_t cmask[2];
    bool cneg[2];
    int treg[2];
    std::uint64_t tmask[2];
  };
  void step(const Op& op, RegisterState& state) const;

  std::vector<Op> ops_;
  RegisterState init_;
  int domain_register_ = -1;
  int domain_width_ = 0;
};

RegisterState simulate(const Circuit& circuit, std::uint64_t domain_value);
RegisterState simulate(const Circuit& circuit, std::span<const std::uint64_t> initial);

/// Runs fn(x) for every x in [0, count) over a small worker pool. fn must be
/// safe to call concurrently.
void parallel_for_inputs(std::uint64_t count, const std::function<void(std::uint64_t)>& fn);

}  // namespace revexp
