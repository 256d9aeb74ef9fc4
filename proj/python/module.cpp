// Python bindings: parse BPMN files, lint them, and query the rule catalog.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <variant>

#include "bpmnlint/engine.hpp"
#include "bpmnlint/xml_reader.hpp"

namespace py = pybind11;
using namespace bpmnlint;

namespace {

const char* severity_str(Severity s) { return severity_name(s); }

// Opaque handle keeping the parsed model alive for repeated lint calls.
struct Model {
  std::shared_ptr<BpmnModel> model;
  std::string path;
};

Model parse(const std::string& path) {
  auto r = parse_bpmn_file(path);
  if (std::holds_alternative<ParseIssue>(r)) {
    const ParseIssue& issue = std::get<ParseIssue>(r);
    throw py::value_error(path + ":" + std::to_string(issue.line) + ":" +
                          std::to_string(issue.column) + ": " + issue.message);
  }
  return Model{std::make_shared<BpmnModel>(std::move(std::get<BpmnModel>(r))), path};
}

LintConfig make_config(const std::string& profile,
                       const std::vector<std::string>& disable,
                       const py::dict& severities) {
  LintConfig config;
  if (profile == "standard") {
    config.enabled_categories = {RuleCategory::FlowControl, RuleCategory::DataFlow};
  } else if (profile != "strict") {
    throw py::value_error("profile must be 'standard' or 'strict'");
  }
  for (const std::string& id : disable) config.rule_overrides[id] = std::nullopt;
  for (auto item : severities) {
    std::string id = py::cast<std::string>(item.first);
    std::string sev = py::cast<std::string>(item.second);
    if (sev == "error") config.rule_overrides[id] = Severity::Error;
    else if (sev == "warning") config.rule_overrides[id] = Severity::Warning;
    else if (sev == "info") config.rule_overrides[id] = Severity::Info;
    else if (sev == "off") config.rule_overrides[id] = std::nullopt;
    else throw py::value_error("severity must be error|warning|info|off: " + sev);
  }
  return config;
}

py::dict report_to_py(const LintReport& report) {
  py::list diagnostics;
  for (const Diagnostic& d : report.diagnostics) {
    py::dict e;
    e["rule"] = d.rule_id;
    e["severity"] = severity_str(d.severity);
    e["element"] = d.element_id;
    e["name"] = d.element_name;
    e["container"] = d.container_path;
    e["file"] = d.source_name;
    e["message"] = d.message;
    diagnostics.append(e);
  }
  py::dict counts;
  for (const auto& [id, n] : report.counts) counts[py::str(id)] = n;
  py::dict out;
  out["version"] = 1;
  out["models"] = report.models;
  out["diagnostics"] = diagnostics;
  out["counts"] = counts;
  return out;
}

py::dict lint(const Model& m, const std::string& profile,
              const std::vector<std::string>& disable, const py::dict& severities) {
  if (!m.model) throw py::value_error("model is empty");
  LintConfig config = make_config(profile, disable, severities);
  try {
    return report_to_py(run(*m.model, config));
  } catch (const ConfigError& e) {
    throw py::value_error(e.what());
  }
}

py::list list_rules_py() {
  py::list out;
  for (const RuleDescriptor& d : rule_catalog()) {
    py::dict e;
    e["id"] = d.id;
    e["category"] = category_name(d.category);
    e["section"] = d.section;
    e["title"] = d.title;
    e["severity"] = severity_str(d.default_severity);
    out.append(e);
  }
  return out;
}

py::dict explain_py(const std::string& rule_id) {
  try {
    RuleExplanation ex = explain_rule(rule_id);
    py::dict out;
    out["id"] = ex.descriptor->id;
    out["section"] = ex.descriptor->section;
    out["title"] = ex.descriptor->title;
    out["prose"] = ex.prose;
    out["conforming"] = ex.conforming;
    out["violating"] = ex.violating;
    return out;
  } catch (const UnknownRuleError& e) {
    throw py::key_error(e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_bpmnlint, m) {
  m.doc() = "BPMN 2.0 process-model linter";

  py::class_<Model>(m, "Model")
      .def_property_readonly("path", [](const Model& self) { return self.path; })
      .def("__repr__",
           [](const Model& self) { return "<bpmnlint.Model '" + self.path + "'>"; });

  m.def("parse", &parse, py::arg("path"),
        "Parse a BPMN 2.0 XML file; raises ValueError on fatal parse errors.");
  m.def("lint", &lint, py::arg("model"), py::arg("profile") = "strict",
        py::arg("disable") = std::vector<std::string>{},
        py::arg("severities") = py::dict(),
        "Lint a parsed model; returns the report as a dict.");
  m.def("list_rules", &list_rules_py, "All catalog rule descriptors.");
  m.def("explain", &explain_py, py::arg("rule_id"),
        "Explain one rule; raises KeyError for unknown ids.");
}
