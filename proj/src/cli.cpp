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

#include "revexp/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>

#include "revexp/circuit_io.hpp"
#include "revexp/errors.hpp"
#include "revexp/workflow.hpp"

namespace revexp {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string command;
  std::string function = "exponential";
  std::string alpha;
  std::string base;
  std::string xmin = "0";
  std::string xmax;
  int d = 0;
  int n = 0;
  bool symmetric = false;
  std::string mode = "gate_saving";
  int m_override = 0;
  std::string out;
  std::string format = "text";
  std::string inputs = "all";
  bool no_timestamp = false;
};

// A command's result: machine-readable document, human text, exit status.
struct Outcome {
  json doc;
  std::string text;
  int code = kExitOk;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ProblemSpec spec_from(const RunConfig& cfg) {
  if (cfg.d == 0 || cfg.n == 0 || cfg.xmax.empty()) throw InvalidSpecError("--d, --n and --xmax are required");
  ProblemSpec spec;
  spec.kind = parse_function_kind(cfg.function);
  spec.x_min = parse_real(cfg.xmin);
  spec.x_max = parse_real(cfg.xmax);
  spec.d = cfg.d;
  spec.n = cfg.n;
  spec.symmetric = cfg.symmetric;
  if (!cfg.base.empty() && !cfg.alpha.empty()) throw InvalidSpecError("--alpha and --base are mutually exclusive");
  if (!cfg.base.empty()) {
    // Choose alpha so that the per-step base A comes out as given.
    const Real a = parse_real(cfg.base);
    if (!(a > 0) || !(a < 1)) throw InvalidSpecError("--base must lie strictly between 0 and 1");
    if (!(spec.x_max > spec.x_min)) throw InvalidSpecError("empty domain: x_max must exceed x_min");
    const Real delta = (spec.x_max - spec.x_min) / ldexp(Real(1), spec.d);
    spec.alpha = -log(a) / (spec.kind == FunctionKind::exponential ? delta : delta * delta);
  } else {
    spec.alpha = parse_real(cfg.alpha.empty() ? "1" : cfg.alpha);
  }
  spec.validate();
  return spec;
}

Plan plan_from(const RunConfig& cfg) {
  const ProblemSpec spec = spec_from(cfg);
  std::optional<int> override;
  if (cfg.m_override != 0) override = cfg.m_override;
  return make_plan(spec, parse_mode(cfg.mode), override);
}

std::string triple(const Plan& p) {
  return "(" + std::to_string(p.n()) + "," + std::to_string(p.d_eff) + "," + std::to_string(p.m) + ")";
}

json mode_estimate(const Plan& plan, Mode mode) {
  try {
    const FormulaEstimate e = estimate(plan.n(), plan.d_eff, plan.m, mode);
    json j = estimate_to_json(e);
    const AnalyticCount a = analytic_circuit_count(plan, mode);
    j["analytic_core_toffoli"] = a.core();
    j["available"] = true;
    return j;
  } catch (const UnsupportedParameterError& e) {
    return {{"available", false}, {"reason", e.what()}};
  }
}

std::string estimate_line(const json& e) {
  if (!e.at("available").get<bool>()) return "unavailable (" + e.at("reason").get<std::string>() + ")";
  return std::to_string(e.at("toffoli").get<std::int64_t>()) + " Toffolis / " +
         std::to_string(e.at("qubits").get<int>()) + " qubits (analytic core " +
         std::to_string(e.at("analytic_core_toffoli").get<std::int64_t>()) + ")";
}

// Smaller Toffoli-qubit product wins; gate-saving when space-saving is unavailable.
std::string recommend(const json& gs, const json& ss) {
  if (!ss.at("available").get<bool>()) return "gate_saving";
  const double v_gs = gs.at("toffoli").get<double>() * gs.at("qubits").get<double>();
  const double v_ss = ss.at("toffoli").get<double>() * ss.at("qubits").get<double>();
  return v_ss < v_gs ? "space_saving" : "gate_saving";
}

Outcome cmd_plan(const RunConfig& cfg) {
  const Plan plan = plan_from(cfg);
  Outcome o;
  const json gs = mode_estimate(plan, Mode::gate_saving);
  const json ss = mode_estimate(plan, Mode::space_saving);
  o.doc["plan"] = plan_to_json(plan);
  o.doc["estimates"] = {{"gate_saving", gs}, {"space_saving", ss}};
  o.doc["squarer_overhead"] = {{"toffoli", squarer_overhead_toffoli(plan.spec)},
                               {"qubits", squarer_overhead_qubits(plan.spec)}};
  o.doc["recommended_mode"] = recommend(gs, ss);

  std::ostringstream t;
  const PlanConstants& k = plan.constants;
  t << "function      " << to_string(plan.spec.kind) << (plan.spec.symmetric ? " (symmetric)" : "") << "\n"
    << "(n,d_eff,m)   " << triple(plan) << (plan.m_overridden ? "  [m overridden]" : "") << "\n"
    << "delta         " << format_real(k.delta) << "\n"
    << "A             " << format_real(k.a_real) << "\n"
    << "C             " << format_real(k.c_real) << "\n"
    << "A_max         " << format_real(plan.a_max) << "\n"
    << "C_fp          ." << k.c_fp.bit_string() << "\n"
    << "C*A_0 fp      ." << k.c1_fp.bit_string() << "\n";
  for (std::size_t i = 0; i < k.a_i.size(); ++i) t << "A_" << i << (i < 10 ? "           ." : "          .")
                                                    << k.a_i[i].bit_string() << "\n";
  t << "gate-saving   " << estimate_line(gs) << "\n"
    << "space-saving  " << estimate_line(ss) << "\n";
  if (plan.spec.kind == FunctionKind::gaussian) {
    t << "squarer       " << squarer_overhead_toffoli(plan.spec) << " Toffolis / "
      << squarer_overhead_qubits(plan.spec) << " qubits (not included above)\n";
  }
  t << "recommended   " << o.doc["recommended_mode"].get<std::string>() << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_estimate(const RunConfig& cfg) {
  const Plan plan = plan_from(cfg);
  const FormulaEstimate e = estimate(plan.n(), plan.d_eff, plan.m, plan.mode);
  const AnalyticCount a = analytic_circuit_count(plan, plan.mode);
  Outcome o;
  o.doc["config"] = {{"function", to_string(plan.spec.kind)}, {"n", plan.n()},           {"d_eff", plan.d_eff},
                     {"m", plan.m},                           {"mode", to_string(plan.mode)}};
  o.doc["formula"] = estimate_to_json(e);
  o.doc["analytic"] = {{"multipliers", a.multipliers}, {"tail", a.tail},   {"core", a.core()},
                       {"squarer", a.squarer},         {"total", a.total()}};
  if (plan.mode == Mode::space_saving) o.doc["schedule"] = schedule_to_json(schedule_space_saving(plan.m, plan.d_eff));

  std::ostringstream t;
  t << to_string(plan.spec.kind) << " " << to_string(plan.mode) << " " << triple(plan) << "\n";
  t << "formula Toffolis  " << e.toffoli << "  (exact " << e.toffoli_exact << ")\n";
  for (const auto& [name, value] : e.terms) t << "  " << name << "  " << value << "\n";
  t << "formula qubits    " << e.qubits << "\n";
  t << "analytic core     " << a.core() << "  (multipliers " << a.multipliers << ", tail " << a.tail << ")\n";
  if (a.squarer > 0) t << "squarer           " << a.squarer << "\n";
  o.text = t.str();
  return o;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidSpecError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw InvalidSpecError("failed writing '" + path + "'");
}

std::string bridge_text(const CountBridge& b) {
  std::ostringstream t;
  t << "Toffolis  counted " << b.counted_toffoli << "  analytic " << b.analytic.total() << "  formula core "
    << b.formula.toffoli << "  counted core " << b.counted_core_toffoli << "\n";
  t << "qubits    counted " << b.counted_qubits << "  predicted " << b.predicted_qubits << "  formula core "
    << b.formula.qubits << "\n";
  t << "status    " << (b.ok() ? "ok" : "mismatch") << "\n";
  return t.str();
}

Outcome cmd_build(const RunConfig& cfg) {
  const Plan plan = plan_from(cfg);
  const BuiltArtifact art = build(plan);
  const CountBridge b = bridge_counts(art);
  Outcome o;
  std::string circuit_format = "json";
  if (!cfg.out.empty()) {
    circuit_format = cfg.format == "qasm_like" ? "qasm_like" : "json";
    write_file(cfg.out, export_circuit(art.circuit, parse_circuit_format(circuit_format)));
  }
  o.doc["plan"] = plan_to_json(art.plan);
  o.doc["circuit"] = {{"path", cfg.out},
                      {"format", circuit_format},
                      {"gates", art.circuit.gates().size()},
                      {"registers", art.circuit.registers().size()},
                      {"tail_present", art.tail_present}};
  o.doc["counts"] = bridge_to_json(b);
  if (art.schedule) o.doc["schedule"] = schedule_to_json(*art.schedule);
  o.code = b.ok() ? kExitOk : kExitMismatch;

  std::ostringstream t;
  t << to_string(plan.spec.kind) << " " << to_string(art.plan.mode) << " " << triple(plan) << "  "
    << art.circuit.gates().size() << " gates";
  if (!cfg.out.empty()) t << " -> " << cfg.out << " (" << circuit_format << ")";
  t << "\n" << bridge_text(b);
  o.text = t.str();
  return o;
}

Outcome cmd_simulate(const RunConfig& cfg) {
  const Plan plan = plan_from(cfg);
  const BuiltArtifact art = build(plan);
  const auto inputs = parse_input_list(cfg.inputs, std::uint64_t{1} << plan.spec.d);
  const SweepResult s = sweep_artifact(art, inputs);
  const ErrorReport er = error_report(plan);
  Outcome o;
  o.doc["config"] = {{"function", to_string(plan.spec.kind)}, {"n", plan.n()},           {"d_eff", plan.d_eff},
                     {"m", plan.m},                           {"mode", to_string(plan.mode)}};
  o.doc["sweep"] = sweep_to_json(s);
  o.doc["error_report"] = error_report_to_json(er, plan);
  if (inputs.size() == 1) {
    o.doc["single"] = {{"x", inputs[0]}, {"output_bits", FixedPointValue(plan.n(), pipeline_reference(plan, inputs[0]).final).bit_string()}};
  }
  o.code = s.ok() ? kExitOk : kExitMismatch;

  std::ostringstream t;
  t << to_string(plan.spec.kind) << " " << to_string(plan.mode) << " " << triple(plan) << "\n";
  t << "matches           " << s.matches << "/" << s.inputs << "\n";
  t << "zeroing checked   " << s.zeroing_checked << "  violations " << s.zeroing_violations << "\n";
  t << "clean violations  " << s.clean_violations << "\n";
  if (inputs.size() == 1) t << "output(x=" << inputs[0] << ")  ." << o.doc["single"]["output_bits"].get<std::string>() << "\n";
  t << "max |error|       " << er.max_abs_error << " at x=" << er.worst_x << "  (envelope " << er.envelope
    << (er.within_envelope ? ", within" : ", exceeded") << ")\n";
  t << "mean |error|      " << er.mean_abs_error << "\n";
  t << "status            " << (s.ok() ? "ok" : "mismatch") << "\n";
  o.text = t.str();
  return o;
}

std::string tables_text(const TablesReport& r) {
  std::ostringstream t;
  for (const CellCheck& c : r.cells) {
    t << c.table << "  " << c.label << "  " << c.quantity << "  published " << c.published << "  computed "
      << c.computed << "  " << to_string(c.status);
    if (!c.note.empty()) t << "  (" << c.note << ")";
    t << "\n";
  }
  for (const PlannerCheck& p : r.planner) {
    t << "planner  " << p.label << "  published m " << p.published_m << "  computed m " << p.computed_m
      << (p.overridden ? " (override)" : "") << "  " << (p.pass ? "pass" : "fail") << "\n";
  }
  for (const RatioCheck& q : r.ratios) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", q.ratio);
    t << "ratio  " << q.label << "  " << q.reference_toffoli << " -> " << q.own_toffoli << "  " << buf << "x\n";
  }
  t << "table1  " << r.count("table1", "", CellStatus::pass) << " pass  " << r.count("table1", "", CellStatus::fail)
    << " fail\n";
  for (const char* q : {"toffoli", "qubits"}) {
    t << "table2 " << q << "  " << r.count("table2", q, CellStatus::pass) << " pass  "
      << r.count("table2", q, CellStatus::fail) << " fail  " << r.count("table2", q, CellStatus::flagged)
      << " flagged\n";
  }
  t << "status  " << (r.ok() ? "ok" : "mismatch") << "\n";
  return t.str();
}

Outcome cmd_tables(const RunConfig&) {
  const TablesReport r = reproduce_tables();
  Outcome o;
  o.doc["tables"] = tables_report_to_json(r);
  o.code = r.ok() ? kExitOk : kExitMismatch;
  o.text = tables_text(r);
  return o;
}

Outcome cmd_verify(const RunConfig& cfg) {
  const Plan plan = plan_from(cfg);
  const BuiltArtifact art = build(plan);
  const CountBridge b = bridge_counts(art);
  const SweepResult s = sweep_artifact(art);
  const TablesReport r = reproduce_tables();
  Outcome o;
  o.doc["plan"] = plan_to_json(art.plan);
  o.doc["counts"] = bridge_to_json(b);
  o.doc["sweep"] = sweep_to_json(s);
  o.doc["tables"] = tables_report_to_json(r);
  const bool ok = b.ok() && s.ok() && r.ok();
  o.doc["status"] = ok ? "ok" : "mismatch";
  o.code = ok ? kExitOk : kExitMismatch;

  std::ostringstream t;
  t << to_string(plan.spec.kind) << " " << to_string(plan.mode) << " " << triple(plan) << "\n";
  t << "counts  " << (b.ok() ? "ok" : "mismatch") << "\n" << bridge_text(b);
  t << "sweep   " << s.matches << "/" << s.inputs << (s.ok() ? " ok" : " mismatch") << "\n";
  t << "tables  " << (r.ok() ? "ok" : "mismatch") << "\n";
  t << "status  " << (ok ? "ok" : "mismatch") << "\n";
  o.text = t.str();
  return o;
}

void add_spec_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--function", cfg.function, "exponential or gaussian")->capture_default_str();
  sub->add_option("--alpha", cfg.alpha, "rate alpha > 0 (decimal, default 1)");
  sub->add_option("--base", cfg.base, "per-step base A in (0,1); sets alpha from the grid spacing");
  sub->add_option("--xmin", cfg.xmin, "domain lower bound")->capture_default_str();
  sub->add_option("--xmax", cfg.xmax, "domain upper bound (exclusive)")->required();
  sub->add_option("--d", cfg.d, "domain qubits")->required();
  sub->add_option("--n", cfg.n, "range qubits")->required();
  sub->add_flag("--symmetric", cfg.symmetric, "gaussian: read the domain register as a signed grid index");
  sub->add_option("--mode", cfg.mode, "gate_saving or space_saving")->capture_default_str();
  sub->add_option("--m-override", cfg.m_override, "use this multiplication count instead of the planner's");
}

void add_output_options(CLI::App* sub, RunConfig& cfg, bool circuit) {
  sub->add_option("--format", cfg.format,
                  circuit ? "report json|text; qasm_like writes the circuit as qasm_like"
                          : "report format json|text")
      ->capture_default_str();
  sub->add_option("--out", cfg.out, circuit ? "circuit output file" : "write the report to this file");
  sub->add_flag("--no-timestamp", cfg.no_timestamp, "omit generated_at from reports");
}

json error_doc(std::string_view kind, std::string_view message) {
  return {{"error", {{"kind", kind}, {"message", message}}}, {"exit_code", static_cast<int>(kExitInvalidInput)}};
}

}  // namespace

std::vector<std::uint64_t> parse_input_list(std::string_view text, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (text == "all" || text.empty()) return out;
  auto number = [&](std::string_view s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
      throw DomainError("bad input value '" + std::string(s) + "'");
    }
    const std::uint64_t v = std::stoull(std::string(s));
    if (v >= limit) throw DomainError("input " + std::string(s) + " exceeds the domain register");
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(number(item));
    } else {
      const std::uint64_t lo = number(item.substr(0, dash));
      const std::uint64_t hi = number(item.substr(dash + 1));
      if (hi < lo) throw DomainError("empty input range '" + std::string(item) + "'");
      for (std::uint64_t x = lo; x <= hi; ++x) out.push_back(x);
    }
    start = comma + 1;
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Reversible exp(-a x) / exp(-a x^2) circuit compiler, simulator and resource estimator", "revexp"};
  app.require_subcommand(1);
  struct Sub {
    const char* name;
    const char* help;
    bool spec;
    bool circuit;
  };
  const Sub subs[] = {
      {"plan", "derive constants and m; predicted counts for both modes", true, false},
      {"estimate", "closed-form and pattern-exact Toffoli/qubit counts", true, false},
      {"build", "build the circuit and compare counted resources with predictions", true, true},
      {"simulate", "simulate basis inputs against the bit-exact oracle", true, false},
      {"tables", "reproduce the published resource tables", false, false},
      {"verify", "build + simulate + count bridge + tables", true, false},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (s.spec) add_spec_options(sub, cfg);
    add_output_options(sub, cfg, s.circuit);
    if (std::string_view(s.name) == "simulate") {
      sub->add_option("--inputs", cfg.inputs, "'all' or a list like 0,5,10-20")->capture_default_str();
    }
    sub->callback([&cfg, name = s.name] { cfg.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << e.what() << "\n";
    out << error_doc("usage_error", e.what()).dump() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (cfg.format != "json" && cfg.format != "text" && !(cfg.command == "build" && cfg.format == "qasm_like")) {
      throw InvalidSpecError("unsupported --format '" + cfg.format + "' for " + cfg.command);
    }
    Outcome o;
    if (cfg.command == "plan") o = cmd_plan(cfg);
    else if (cfg.command == "estimate") o = cmd_estimate(cfg);
    else if (cfg.command == "build") o = cmd_build(cfg);
    else if (cfg.command == "simulate") o = cmd_simulate(cfg);
    else if (cfg.command == "tables") o = cmd_tables(cfg);
    else o = cmd_verify(cfg);

    json doc = {{"report_version", kReportVersion}, {"command", cfg.command}};
    if (!cfg.no_timestamp) doc["generated_at"] = utc_timestamp();
    doc.update(o.doc);
    std::string rendered;
    if (cfg.format == "json") {
      rendered = doc.dump(2) + "\n";
    } else {
      rendered = o.text;
      if (!cfg.no_timestamp) rendered += "generated_at  " + doc["generated_at"].get<std::string>() + "\n";
    }
    if (!cfg.out.empty() && cfg.command != "build") {
      write_file(cfg.out, rendered);
    } else {
      out << rendered;
    }
    return o.code;
  } catch (const RevexpError& e) {
    err << "error: " << e.what() << "\n";
    out << error_doc(e.kind(), e.what()).dump() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace revexp
