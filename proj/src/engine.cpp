#include "bpmnlint/engine.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bpmnlint/graph.hpp"

namespace bpmnlint {
namespace {

std::optional<Severity> parse_severity_word(const std::string& w) {
  if (w == "error") return Severity::Error;
  if (w == "warning") return Severity::Warning;
  if (w == "info") return Severity::Info;
  return std::nullopt;
}

void validate_config(const LintConfig& config) {
  for (const auto& [id, sev] : config.rule_overrides) {
    if (find_rule(id) == nullptr) throw ConfigError("unknown rule id in override: " + id);
  }
}

void validate_abstractions(const LintConfig& config, const BpmnModel& model) {
  auto known = [&](const std::string& name) {
    return std::any_of(model.processes.begin(), model.processes.end(),
                       [&](const ProcessDef& p) {
                         return p.id == name || trimmed(p.name) == name;
                       });
  };
  for (const auto& [abs, det] : config.abstraction_pairs) {
    if (!known(abs)) throw ConfigError("unknown abstraction process name: " + abs);
    if (!known(det)) throw ConfigError("unknown abstraction process name: " + det);
  }
}

LintReport lint_one(const BpmnModel& model, const LintConfig& config) {
  validate_abstractions(config, model);

  auto enabled = [&](const std::string& id) {
    const RuleDescriptor* d = find_rule(id);
    if (d == nullptr) return false;
    // An explicit per-rule override wins over the category filter.
    auto it = config.rule_overrides.find(id);
    if (it != config.rule_overrides.end()) return it->second.has_value();
    return config.enabled_categories.count(d->category) > 0;
  };

  GraphIndex graph(model);
  RuleOptions options;
  options.abstraction_pairs = config.abstraction_pairs;

  LintReport report;
  report.diagnostics = evaluate_rules(model, graph, options, enabled);
  for (Diagnostic& d : report.diagnostics) {
    auto it = config.rule_overrides.find(d.rule_id);
    if (it != config.rule_overrides.end() && it->second.has_value()) {
      d.severity = *it->second;
    }
  }
  // Structural diagnostics are not configurable; they describe the model's
  // conformance to the metamodel itself.
  for (Diagnostic& d : structural_check(model)) report.diagnostics.push_back(std::move(d));

  for (Diagnostic& d : report.diagnostics) d.source_name = model.source_name;
  std::sort(report.diagnostics.begin(), report.diagnostics.end(), diagnostic_less);
  for (const Diagnostic& d : report.diagnostics) ++report.counts[d.rule_id];
  report.models.push_back(model.source_name);
  report.models_checked = 1;
  return report;
}

}  // namespace

LintConfig parse_config_text(const std::string& text) {
  LintConfig config;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string body = trimmed(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trimmed(body.substr(0, eq));
    std::string value = trimmed(body.substr(eq + 1));

    if (key == "profile") {
      if (value == "standard") {
        config.enabled_categories = {RuleCategory::FlowControl, RuleCategory::DataFlow};
      } else if (value == "strict") {
        config.enabled_categories = {RuleCategory::FlowControl, RuleCategory::DataFlow,
                                     RuleCategory::BestPractice};
      } else {
        throw ConfigError("config line " + std::to_string(lineno) + ": unknown profile '" +
                          value + "'");
      }
    } else if (key.rfind("rule.", 0) == 0) {
      std::string id = key.substr(5);
      if (find_rule(id) == nullptr) {
        throw ConfigError("config line " + std::to_string(lineno) + ": unknown rule id '" + id +
                          "'");
      }
      if (value == "off") {
        config.rule_overrides[id] = std::nullopt;
      } else if (auto sev = parse_severity_word(value)) {
        config.rule_overrides[id] = sev;
      } else {
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": expected off|error|warning|info");
      }
    } else if (key == "abstraction") {
      auto colon = value.find(':');
      if (colon == std::string::npos) {
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": expected 'PublicName : PrivateName'");
      }
      std::string pub = trimmed(value.substr(0, colon));
      std::string priv = trimmed(value.substr(colon + 1));
      if (pub.empty() || priv.empty()) {
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": empty abstraction process name");
      }
      config.abstraction_pairs.emplace_back(pub, priv);
    } else if (key == "fail_on") {
      if (value == "error") {
        config.fail_threshold = Severity::Error;
      } else if (value == "warning") {
        config.fail_threshold = Severity::Warning;
      } else {
        throw ConfigError("config line " + std::to_string(lineno) + ": expected error|warning");
      }
    } else {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return config;
}

LintConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

LintReport run(const BpmnModel& model, const LintConfig& config) {
  validate_config(config);
  return lint_one(model, config);
}

LintReport run_many(const std::vector<const BpmnModel*>& models, const LintConfig& config,
                    int workers) {
  validate_config(config);
  std::vector<LintReport> partial(models.size());
  std::vector<std::string> errors(models.size());

  auto work = [&](size_t begin, size_t step) {
    for (size_t i = begin; i < models.size(); i += step) {
      try {
        partial[i] = lint_one(*models[i], config);
      } catch (const ConfigError& e) {
        errors[i] = e.what();
      }
    }
  };

  int n = std::max(1, workers);
  if (n == 1 || models.size() <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> threads;
    size_t used = std::min<size_t>(n, models.size());
    threads.reserve(used);
    for (size_t t = 0; t < used; ++t) threads.emplace_back(work, t, used);
    for (std::thread& t : threads) t.join();
  }
  for (const std::string& e : errors) {
    if (!e.empty()) throw ConfigError(e);
  }

  LintReport merged;
  for (LintReport& r : partial) {
    for (Diagnostic& d : r.diagnostics) merged.diagnostics.push_back(std::move(d));
    for (const auto& [id, count] : r.counts) merged.counts[id] += count;
    merged.models.insert(merged.models.end(), r.models.begin(), r.models.end());
    merged.models_checked += r.models_checked;
  }
  std::sort(merged.diagnostics.begin(), merged.diagnostics.end(), diagnostic_less);
  return merged;
}

std::vector<RuleDescriptor> list_rules(const LintConfig& config) {
  std::vector<RuleDescriptor> out;
  for (const RuleDescriptor& d : rule_catalog()) {
    if (config.enabled_categories.count(d.category) > 0) out.push_back(d);
  }
  return out;
}

RuleExplanation explain_rule(const std::string& rule_id) {
  const RuleDescriptor* d = find_rule(rule_id);
  if (d == nullptr) throw UnknownRuleError(rule_id);
  RuleExplanation ex;
  ex.descriptor = d;
  ex.prose = std::string(d->title) + ". See section " + d->section +
             " of the rule catalog (" + category_name(d->category) + ", default " +
             severity_name(d->default_severity) + ").";
  ex.conforming = d->conforming;
  ex.violating = d->violating;
  return ex;
}

std::string report_to_json(const LintReport& report) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["models"] = report.models;
  doc["diagnostics"] = nlohmann::ordered_json::array();
  for (const Diagnostic& d : report.diagnostics) {
    nlohmann::ordered_json item;
    item["rule"] = d.rule_id;
    item["severity"] = severity_name(d.severity);
    item["element"] = d.element_id;
    item["name"] = d.element_name;
    std::string container;
    for (const std::string& part : d.container_path) {
      if (!container.empty()) container += "/";
      container += part;
    }
    item["container"] = container;
    item["file"] = d.source_name;
    item["message"] = d.message;
    doc["diagnostics"].push_back(std::move(item));
  }
  doc["counts"] = nlohmann::ordered_json::object();
  for (const auto& [id, count] : report.counts) doc["counts"][id] = count;
  return doc.dump();
}

std::string report_to_text(const LintReport& report, bool summary_only) {
  std::ostringstream out;
  int errors = 0, warnings = 0;
  for (const Diagnostic& d : report.diagnostics) {
    if (d.severity == Severity::Error) ++errors;
    if (d.severity == Severity::Warning) ++warnings;
  }

  if (summary_only) {
    // Per-rule violation histogram.
    for (const auto& [id, count] : report.counts) {
      const RuleDescriptor* d = find_rule(id);
      out << id << " " << count << " " << (d != nullptr ? d->title : "structural") << "\n";
    }
  } else {
    for (const Diagnostic& d : report.diagnostics) {
      std::string sev = severity_name(d.severity);
      std::transform(sev.begin(), sev.end(), sev.begin(),
                     [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
      std::string where;
      for (const std::string& part : d.container_path) where += part + "/";
      where += d.element_id;
      if (!d.element_name.empty()) where += "(" + d.element_name + ")";
      out << sev << " " << d.rule_id << " " << d.source_name << " : " << where << " : "
          << d.message << "\n";
    }
  }
  out << errors << " errors, " << warnings << " warnings in " << report.models_checked
      << " model(s)\n";
  return out.str();
}

bool report_fails(const LintReport& report, Severity threshold) {
  return std::any_of(report.diagnostics.begin(), report.diagnostics.end(),
                     [&](const Diagnostic& d) {
                       return static_cast<int>(d.severity) <= static_cast<int>(threshold);
                     });
}

}  // namespace bpmnlint
