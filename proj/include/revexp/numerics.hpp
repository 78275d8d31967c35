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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revexp/fixed_point.hpp"

namespace revexp {

enum class FunctionKind { exponential, gaussian };
enum class Mode { gate_saving, space_saving };

std::string_view to_string(FunctionKind kind);
std::string_view to_string(Mode mode);
FunctionKind parse_function_kind(std::string_view text);
Mode parse_mode(std::string_view text);

/// User-facing description of f(x') = exp(-alpha x') or exp(-alpha x'^2)
/// sampled on 2^d grid points of [x_min, x_max), evaluated to n bits.
///
/// With `symmetric` set (gaussian only, x_min = 0) the domain register is
/// read as a two's-complement grid index k in [-2^(d-1), 2^(d-1)), keeping
/// the grid spacing of the unsigned layout. The squared index then fits in
/// 2d-1 bits instead of 2d.
struct ProblemSpec {
  FunctionKind kind = FunctionKind::exponential;
  Real alpha = 1;
  Real x_min = 0;
  Real x_max = 1;
  int d = 1;
  int n = 2;
  bool symmetric = false;

  /// Throws InvalidSpecError on any violated invariant.
  void validate() const;
};

struct PlanConstants {
  Real delta;
  Real a_real;
  Real c_real;
  /// a_i[i] = round(A^(2^i)), one entry per controlled multiplication.
  std::vector<FixedPointValue> a_i;
  FixedPointValue c_fp{2, 0};
  /// round(C * A), loaded by the x_0-controlled transformation.
  FixedPointValue c1_fp{2, 0};
};

struct Plan {
  ProblemSpec spec;
  int d_eff = 1;
  int m = 1;
  Real a_max;
  PlanConstants constants;
  Mode mode = Mode::gate_saving;
  bool m_overridden = false;

  int n() const { return spec.n; }
};

/// Width of the exponent register driving the multiplications.
int effective_exponent_width(const ProblemSpec& spec);

PlanConstants derive_constants(const ProblemSpec& spec, int m);

/// Smallest i with A^(2^i) < 2^-n, capped at d_eff, found by direct search.
int compute_m(int n, int d_eff, const Real& a_real);

/// Largest base for which fewer than d_eff multiplications suffice: 2^(-n / 2^(d_eff-1)).
Real compute_a_max(int n, int d_eff);

Plan make_plan(const ProblemSpec& spec, Mode mode, std::optional<int> m_override = std::nullopt);

}  // namespace revexp
