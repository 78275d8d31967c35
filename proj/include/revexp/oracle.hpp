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
#include <vector>

#include "revexp/fixed_point.hpp"
#include "revexp/numerics.hpp"

namespace revexp {

/// Sum over set bits j >= 1 of a of floor(y / 2^(n-j)): the value a
/// hard-wired multiplier leaves in its clean output register.
std::uint64_t mult_truncated(std::uint64_t y_mantissa, const FixedPointValue& a);

/// Value of the exponent register for domain input x: x itself for the
/// exponential, x^2 for the gaussian, k^2 with k the two's-complement
/// reading of x in symmetric mode.
std::uint64_t exponent_of(const ProblemSpec& spec, std::uint64_t x);

struct PipelineTrace {
  std::uint64_t exponent = 0;
  /// C_0 .. C_m as mantissas.
  std::vector<std::uint64_t> c;
  bool tail_zeroed = false;
  std::uint64_t final = 0;
};

/// Bit-exact mirror of the circuit for domain input x in [0, 2^d).
PipelineTrace pipeline_reference(const Plan& plan, std::uint64_t x);

/// C * A^e in extended precision, e = exponent_of(spec, x).
Real exact_reference(const ProblemSpec& spec, std::uint64_t x);

struct ErrorReport {
  double max_abs_error = 0;
  double mean_abs_error = 0;
  std::uint64_t worst_x = 0;
  std::uint64_t inputs = 0;
  /// m (n-1) 2^-n.
  double envelope = 0;
  bool within_envelope = false;
};

double truncation_envelope(const Plan& plan);

/// Sweeps every domain input comparing the pipeline against the exact function.
ErrorReport error_report(const Plan& plan);

}  // namespace revexp
