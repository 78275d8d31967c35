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

#include "revexp/numerics.hpp"

#include "revexp/errors.hpp"

namespace revexp {

std::string_view to_string(FunctionKind kind) {
  return kind == FunctionKind::exponential ? "exponential" : "gaussian";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::gate_saving ? "gate_saving" : "space_saving";
}

FunctionKind parse_function_kind(std::string_view text) {
  if (text == "exponential" || text == "exp") return FunctionKind::exponential;
  if (text == "gaussian" || text == "gauss") return FunctionKind::gaussian;
  throw InvalidSpecError("unknown function kind '" + std::string(text) + "'");
}

Mode parse_mode(std::string_view text) {
  if (text == "gate_saving" || text == "gate-saving") return Mode::gate_saving;
  if (text == "space_saving" || text == "space-saving") return Mode::space_saving;
  throw InvalidSpecError("unknown mode '" + std::string(text) + "'");
}

void ProblemSpec::validate() const {
  if (!(alpha > 0)) throw InvalidSpecError("alpha must be positive; reflect x' -> -x' for negative rates");
  if (x_min < 0) throw InvalidSpecError("x_min must be non-negative");
  if (!(x_max > x_min)) throw InvalidSpecError("empty domain: x_max must exceed x_min");
  if (d < 1) throw InvalidSpecError("d must be at least 1");
  if (n < 2 || n > kMaxWidth) throw InvalidSpecError("n must lie in [2, 62]");
  if (symmetric && kind != FunctionKind::gaussian) {
    throw InvalidSpecError("symmetric domain mode applies to the gaussian only");
  }
  if (symmetric && d < 2) throw InvalidSpecError("symmetric domain mode needs d >= 2");
  if (symmetric && x_min != 0) throw InvalidSpecError("symmetric domain mode is centred on x' = 0; x_min must be 0");
  if (effective_exponent_width(*this) > kMaxWidth) throw InvalidSpecError("exponent register too wide");
}

int effective_exponent_width(const ProblemSpec& spec) {
  if (spec.kind == FunctionKind::exponential) return spec.d;
  return spec.symmetric ? 2 * spec.d - 1 : 2 * spec.d;
}

PlanConstants derive_constants(const ProblemSpec& spec, int m) {
  spec.validate();
  if (m < 1) throw InvalidSpecError("multiplication count must be at least 1");
  PlanConstants k;
  k.delta = (spec.x_max - spec.x_min) / ldexp(Real(1), spec.d);
  if (spec.kind == FunctionKind::exponential) {
    k.a_real = exp(-spec.alpha * k.delta);
    k.c_real = exp(-spec.alpha * spec.x_min);
  } else {
    k.a_real = exp(-spec.alpha * k.delta * k.delta);
    k.c_real = exp(-spec.alpha * spec.x_min * spec.x_min);
  }
  if (!(k.a_real > 0) || !(k.a_real < 1)) throw InvalidSpecError("base A falls outside (0, 1)");

  k.a_i.reserve(m);
  Real power = k.a_real;
  for (int i = 0; i < m; ++i) {
    k.a_i.push_back(fp_round(power, spec.n));
    power *= power;
  }
  k.c_fp = fp_round(k.c_real, spec.n);
  k.c1_fp = fp_round(k.c_real * k.a_real, spec.n);
  return k;
}

int compute_m(int n, int d_eff, const Real& a_real) {
  if (!(a_real < 1)) throw DomainError("base A must be below 1");
  if (d_eff < 1) throw DomainError("exponent width must be at least 1");
  const Real floor_value = ldexp(Real(1), -n);
  if (a_real < floor_value) {
    throw UnsupportedParameterError("A < 2^-n: every non-zero exponent underflows");
  }
  Real power = a_real;
  for (int i = 0; i < d_eff; ++i) {
    if (power < floor_value) return i;
    power *= power;
  }
  return d_eff;
}

Real compute_a_max(int n, int d_eff) {
  if (n < 2 || d_eff < 1) throw DomainError("compute_a_max needs n >= 2 and d_eff >= 1");
  return pow(Real(2), -Real(n) / ldexp(Real(1), d_eff - 1));
}

Plan make_plan(const ProblemSpec& spec, Mode mode, std::optional<int> m_override) {
  spec.validate();
  Plan plan;
  plan.spec = spec;
  plan.mode = mode;
  plan.d_eff = effective_exponent_width(spec);
  plan.a_max = compute_a_max(spec.n, plan.d_eff);

  // Constants first with m = 1 to learn A, then rederive with the final m.
  const PlanConstants probe = derive_constants(spec, 1);
  if (m_override) {
    if (*m_override < 1 || *m_override > plan.d_eff) {
      throw InvalidSpecError("m override " + std::to_string(*m_override) + " outside [1, " +
                             std::to_string(plan.d_eff) + "]");
    }
    plan.m = *m_override;
    plan.m_overridden = true;
  } else {
    plan.m = compute_m(spec.n, plan.d_eff, probe.a_real);
  }
  plan.constants = derive_constants(spec, plan.m);
  for (std::size_t i = 0; i < plan.constants.a_i.size(); ++i) {
    if (plan.constants.a_i[i].mantissa() == 0) {
      throw InvalidSpecError("A_" + std::to_string(i) + " rounds to zero; m is larger than the precision allows");
    }
  }
  return plan;
}

}  // namespace revexp
