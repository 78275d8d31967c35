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

#include "revexp/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "revexp/errors.hpp"

namespace revexp {

Simulator::Simulator(const Circuit& circuit) {
  circuit.validate();
  for (const Register& r : circuit.registers()) {
    init_.push_back(r.initial_value);
    if (r.role == RegisterRole::domain) {
      if (domain_register_ >= 0) throw StructuralError("circuit has more than one domain register");
      domain_register_ = r.id;
      domain_width_ = r.width;
    }
  }
  ops_.reserve(circuit.gates().size());
  for (const Gate& g : circuit.gates()) {
    Op op{};
    op.kind = g.kind;
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      op.creg[i] = g.controls[i].qubit.reg;
      op.cmask[i] = std::uint64_t{1} << g.controls[i].qubit.bit;
      op.cneg[i] = g.controls[i].polarity == Polarity::negative;
    }
    for (std::size_t i = 0; i < g.targets.size(); ++i) {
      op.treg[i] = g.targets[i].reg;
      op.tmask[i] = std::uint64_t{1} << g.targets[i].bit;
    }
    ops_.push_back(op);
  }
}

RegisterState Simulator::initial_state() const { return init_; }

RegisterState Simulator::initial_state(std::uint64_t domain_value) const {
  if (domain_register_ < 0) throw StructuralError("circuit has no domain register");
  if (domain_width_ < 64 && (domain_value >> domain_width_) != 0) {
    throw DomainError("domain value " + std::to_string(domain_value) + " exceeds register width");
  }
  RegisterState s = init_;
  s[domain_register_] = domain_value;
  return s;
}

void Simulator::step(const Op& op, RegisterState& state) const {
  auto control_on = [&](int i) {
    const bool set = (state[op.creg[i]] & op.cmask[i]) != 0;
    return set != op.cneg[i];
  };
  switch (op.kind) {
    case GateKind::NOT:
      state[op.treg[0]] ^= op.tmask[0];
      break;
    case GateKind::CNOT:
      if (control_on(0)) state[op.treg[0]] ^= op.tmask[0];
      break;
    case GateKind::CCNOT:
      if (control_on(0) && control_on(1)) state[op.treg[0]] ^= op.tmask[0];
      break;
    case GateKind::CSWAP:
      if (control_on(0)) {
        const bool a = (state[op.treg[0]] & op.tmask[0]) != 0;
        const bool b = (state[op.treg[1]] & op.tmask[1]) != 0;
        if (a != b) {
          state[op.treg[0]] ^= op.tmask[0];
          state[op.treg[1]] ^= op.tmask[1];
        }
      }
      break;
  }
}

void Simulator::apply(RegisterState& state) const {
  if (state.size() != init_.size()) throw StructuralError("state size does not match register count");
  for (const Op& op : ops_) step(op, state);
}

void Simulator::apply_inverse(RegisterState& state) const {
  if (state.size() != init_.size()) throw StructuralError("state size does not match register count");
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) step(*it, state);
}

RegisterState Simulator::run(std::uint64_t domain_value) const {
  RegisterState s = initial_state(domain_value);
  apply(s);
  return s;
}

RegisterState simulate(const Circuit& circuit, std::uint64_t domain_value) {
  return Simulator(circuit).run(domain_value);
}

RegisterState simulate(const Circuit& circuit, std::span<const std::uint64_t> initial) {
  Simulator sim(circuit);
  RegisterState s(initial.begin(), initial.end());
  for (const Register& r : circuit.registers()) {
    if (r.id < static_cast<int>(s.size()) && (s[r.id] & ~r.mask()) != 0) {
      throw DomainError("initial value wider than register r" + std::to_string(r.id));
    }
  }
  sim.apply(s);
  return s;
}

void parallel_for_inputs(std::uint64_t count, const std::function<void(std::uint64_t)>& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, 16));
  if (workers == 1 || count < 64) {
    for (std::uint64_t x = 0; x < count; ++x) fn(x);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t kChunk = 32;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= count) return;
        const std::uint64_t end = std::min(count, begin + kChunk);
        for (std::uint64_t x = begin; x < end; ++x) fn(x);
      }
    });
  }
}

}  // namespace revexp
