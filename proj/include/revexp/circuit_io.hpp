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

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "revexp/circuit.hpp"

namespace revexp {

inline constexpr int kCircuitFormatVersion = 1;

enum class CircuitFormat { json, qasm_like };

CircuitFormat parse_circuit_format(std::string_view text);

// JSON layout:
//   {"format_version": 1,
//    "registers": [{"id", "width", "role", "init"}...],
//    "gates": [{"kind", "controls": [{"reg", "bit", "neg"}...], "targets": [{"reg", "bit"}...]}...],
//    "output": id}
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& doc);

/// OpenQASM-2-flavoured listing: one gate per line (x/cx/ccx/cswap) over
/// registers named r<id>. Non-zero initial values are prepared with x gates
/// and negative controls are conjugated by explicit x gates, each tagged
/// with a trailing comment.
std::string circuit_to_qasm_like(const Circuit& circuit);

std::string export_circuit(const Circuit& circuit, CircuitFormat format);
Circuit import_circuit_json(std::string_view text);

}  // namespace revexp
