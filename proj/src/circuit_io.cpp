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

#include "revexp/circuit_io.hpp"

#include <sstream>

#include "revexp/errors.hpp"

namespace revexp {

using nlohmann::json;

CircuitFormat parse_circuit_format(std::string_view text) {
  if (text == "json") return CircuitFormat::json;
  if (text == "qasm_like" || text == "qasm") return CircuitFormat::qasm_like;
  throw InvalidSpecError("unknown circuit format '" + std::string(text) + "'");
}

json circuit_to_json(const Circuit& circuit) {
  json regs = json::array();
  for (const Register& r : circuit.registers()) {
    regs.push_back({{"id", r.id}, {"width", r.width}, {"role", to_string(r.role)}, {"init", r.initial_value}});
  }
  json gates = json::array();
  for (const Gate& g : circuit.gates()) {
    json controls = json::array();
    for (const Control& c : g.controls) {
      controls.push_back(
          {{"reg", c.qubit.reg}, {"bit", c.qubit.bit}, {"neg", c.polarity == Polarity::negative}});
    }
    json targets = json::array();
    for (const QubitRef& t : g.targets) targets.push_back({{"reg", t.reg}, {"bit", t.bit}});
    gates.push_back({{"kind", to_string(g.kind)}, {"controls", controls}, {"targets", targets}});
  }
  return {{"format_version", kCircuitFormatVersion},
          {"registers", regs},
          {"gates", gates},
          {"output", circuit.output()}};
}

Circuit circuit_from_json(const json& doc) {
  try {
    if (doc.at("format_version").get<int>() != kCircuitFormatVersion) {
      throw StructuralError("unsupported circuit format_version");
    }
    Circuit c;
    for (const json& r : doc.at("registers")) {
      const int id = c.add_register(r.at("width").get<int>(), parse_register_role(r.at("role").get<std::string>()),
                                    r.at("init").get<std::uint64_t>());
      if (id != r.at("id").get<int>()) throw StructuralError("register ids must be dense and ordered");
    }
    for (const json& g : doc.at("gates")) {
      Gate gate;
      gate.kind = parse_gate_kind(g.at("kind").get<std::string>());
      for (const json& ctl : g.at("controls")) {
        gate.controls.push_back({{ctl.at("reg").get<int>(), ctl.at("bit").get<int>()},
                                 ctl.at("neg").get<bool>() ? Polarity::negative : Polarity::positive});
      }
      for (const json& t : g.at("targets")) gate.targets.push_back({t.at("reg").get<int>(), t.at("bit").get<int>()});
      c.append(std::move(gate));
    }
    c.set_output(doc.at("output").get<int>());
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed circuit document: ") + e.what());
  }
}

namespace {

std::string qname(QubitRef q) { return "r" + std::to_string(q.reg) + "[" + std::to_string(q.bit) + "]"; }

constexpr std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::NOT: return "x";
    case GateKind::CNOT: return "cx";
    case GateKind::CCNOT: return "ccx";
    case GateKind::CSWAP: return "cswap";
  }
  return "?";
}

}  // namespace

std::string circuit_to_qasm_like(const Circuit& circuit) {
  std::ostringstream out;
  out << "// revexp qasm_like format_version " << kCircuitFormatVersion << "\n";
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  for (const Register& r : circuit.registers()) {
    out << "qreg r" << r.id << "[" << r.width << "]; // role=" << to_string(r.role) << " init=" << r.initial_value
        << "\n";
  }
  out << "// output r" << circuit.output() << "\n";
  for (const Register& r : circuit.registers()) {
    for (int b = 0; b < r.width; ++b) {
      if ((r.initial_value >> b) & 1U) out << "x " << qname(r[b]) << "; // init\n";
    }
  }
  for (const Gate& g : circuit.gates()) {
    for (const Control& c : g.controls) {
      if (c.polarity == Polarity::negative) out << "x " << qname(c.qubit) << "; // negctrl\n";
    }
    out << mnemonic(g.kind) << " ";
    bool first = true;
    for (const Control& c : g.controls) {
      out << (first ? "" : ", ") << qname(c.qubit);
      first = false;
    }
    for (const QubitRef& t : g.targets) {
      out << (first ? "" : ", ") << qname(t);
      first = false;
    }
    out << ";\n";
    for (const Control& c : g.controls) {
      if (c.polarity == Polarity::negative) out << "x " << qname(c.qubit) << "; // negctrl\n";
    }
  }
  return out.str();
}

std::string export_circuit(const Circuit& circuit, CircuitFormat format) {
  if (format == CircuitFormat::json) return circuit_to_json(circuit).dump() + "\n";
  return circuit_to_qasm_like(circuit);
}

Circuit import_circuit_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw StructuralError("circuit document is not valid JSON");
  return circuit_from_json(doc);
}

}  // namespace revexp
