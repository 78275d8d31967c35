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
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "revexp/estimator.hpp"
#include "revexp/exp_builder.hpp"
#include "revexp/oracle.hpp"

namespace revexp {

inline constexpr int kReportVersion = 1;

/// Outcome of running a built circuit on basis inputs against the oracle.
struct SweepResult {
  std::uint64_t inputs = 0;
  std::uint64_t matches = 0;
  /// Inputs whose output register differs from the oracle (first few only).
  std::vector<std::uint64_t> mismatches;
  std::uint64_t mismatch_count = 0;
  /// Inputs with a set exponent bit at or above m; each must give zero.
  std::uint64_t zeroing_checked = 0;
  std::uint64_t zeroing_violations = 0;
  /// Inputs after which a register meant to end clean held a non-zero value.
  std::uint64_t clean_violations = 0;
  /// Inputs for which the domain register was not restored.
  std::uint64_t domain_violations = 0;

  bool ok() const {
    return mismatch_count == 0 && zeroing_violations == 0 && clean_violations == 0 && domain_violations == 0;
  }
};

/// Simulates `inputs` (every domain value when empty) and checks the output
/// register, the zeroing rule, clean registers and the domain register.
SweepResult sweep_artifact(const BuiltArtifact& artifact, const std::vector<std::uint64_t>& inputs = {});

/// Build-time cross-check of gate counts against the closed forms.
struct CountBridge {
  std::int64_t counted_toffoli = 0;
  std::int64_t counted_core_toffoli = 0;
  AnalyticCount analytic;
  FormulaEstimate formula;
  int counted_qubits = 0;
  int predicted_qubits = 0;

  bool toffoli_match() const { return analytic.total() == counted_toffoli; }
  bool qubit_match() const { return counted_qubits == predicted_qubits; }
  bool ok() const { return toffoli_match() && qubit_match(); }
};

CountBridge bridge_counts(const BuiltArtifact& artifact);

nlohmann::json spec_to_json(const ProblemSpec& spec);
nlohmann::json plan_to_json(const Plan& plan);
nlohmann::json schedule_to_json(const SpaceSavingSchedule& schedule);
nlohmann::json estimate_to_json(const FormulaEstimate& estimate);
nlohmann::json bridge_to_json(const CountBridge& bridge);
nlohmann::json sweep_to_json(const SweepResult& sweep);
nlohmann::json error_report_to_json(const ErrorReport& report, const Plan& plan);
nlohmann::json tables_report_to_json(const TablesReport& report);

/// Decimal rendering of an extended-precision value.
std::string format_real(const Real& v, int digits = 12);

}  // namespace revexp
