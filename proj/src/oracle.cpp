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

#include "revexp/oracle.hpp"

#include <cmath>

#include "revexp/errors.hpp"

namespace revexp {

std::uint64_t mult_truncated(std::uint64_t y_mantissa, const FixedPointValue& a) {
  const int n = a.width();
  if ((y_mantissa >> n) != 0) throw DomainError("multiplicand wider than the constant");
  std::uint64_t z = 0;
  for (int j = 1; j < n; ++j) {
    if (a.bit(j)) z += y_mantissa >> (n - j);
  }
  return z;
}

std::uint64_t exponent_of(const ProblemSpec& spec, std::uint64_t x) {
  if (spec.d < 64 && (x >> spec.d) != 0) throw DomainError("domain input " + std::to_string(x) + " out of range");
  if (spec.kind == FunctionKind::exponential) return x;
  if (!spec.symmetric) return x * x;
  const std::int64_t half = std::int64_t{1} << (spec.d - 1);
  const std::int64_t k = static_cast<std::int64_t>(x) >= half ? static_cast<std::int64_t>(x) - 2 * half
                                                              : static_cast<std::int64_t>(x);
  return static_cast<std::uint64_t>(k * k);
}

PipelineTrace pipeline_reference(const Plan& plan, std::uint64_t x) {
  PipelineTrace t;
  t.exponent = exponent_of(plan.spec, x);
  const auto& k = plan.constants;
  t.c.push_back(k.c_fp.mantissa());
  t.c.push_back((t.exponent & 1U) ? k.c1_fp.mantissa() : k.c_fp.mantissa());
  for (int i = 1; i < plan.m; ++i) {
    const std::uint64_t prev = t.c.back();
    t.c.push_back(((t.exponent >> i) & 1U) ? mult_truncated(prev, k.a_i[i]) : prev);
  }
  t.tail_zeroed = (t.exponent >> plan.m) != 0;
  t.final = t.tail_zeroed ? 0 : t.c.back();
  return t;
}

Real exact_reference(const ProblemSpec& spec, std::uint64_t x) {
  const std::uint64_t e = exponent_of(spec, x);
  const Real delta = (spec.x_max - spec.x_min) / ldexp(Real(1), spec.d);
  const Real a = spec.kind == FunctionKind::exponential ? exp(-spec.alpha * delta) : exp(-spec.alpha * delta * delta);
  const Real c = spec.kind == FunctionKind::exponential ? exp(-spec.alpha * spec.x_min)
                                                        : exp(-spec.alpha * spec.x_min * spec.x_min);
  return c * pow(a, Real(e));
}

double truncation_envelope(const Plan& plan) {
  return plan.m * (plan.n() - 1) * std::ldexp(1.0, -plan.n());
}

ErrorReport error_report(const Plan& plan) {
  ErrorReport r;
  r.inputs = std::uint64_t{1} << plan.spec.d;
  r.envelope = truncation_envelope(plan);
  Real sum = 0;
  Real worst = -1;
  for (std::uint64_t x = 0; x < r.inputs; ++x) {
    const Real got = ldexp(Real(pipeline_reference(plan, x).final), -plan.n());
    const Real err = abs(got - exact_reference(plan.spec, x));
    sum += err;
    if (err > worst) {
      worst = err;
      r.worst_x = x;
    }
  }
  r.max_abs_error = static_cast<double>(worst);
  r.mean_abs_error = static_cast<double>(sum / Real(r.inputs));
  r.within_envelope = r.max_abs_error <= r.envelope;
  return r;
}

}  // namespace revexp
