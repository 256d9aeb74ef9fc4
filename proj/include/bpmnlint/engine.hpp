// Rule registry, configuration, execution and deterministic report assembly.
#ifndef BPMNLINT_ENGINE_HPP
#define BPMNLINT_ENGINE_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpmnlint/model.hpp"
#include "bpmnlint/rules.hpp"

namespace bpmnlint {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownRuleError : std::runtime_error {
  explicit UnknownRuleError(const std::string& id)
      : std::runtime_error("unknown rule id: " + id), rule_id(id) {}
  std::string rule_id;
};

struct LintConfig {
  std::set<RuleCategory> enabled_categories = {
      RuleCategory::FlowControl, RuleCategory::DataFlow, RuleCategory::BestPractice};
  // Per-rule severity override; nullopt disables the rule.
  std::map<std::string, std::optional<Severity>> rule_overrides;
  // (abstract process, detailed process) name pairs for FC-02.
  std::vector<std::pair<std::string, std::string>> abstraction_pairs;
  Severity fail_threshold = Severity::Error;
};

struct LintReport {
  // Sorted by (source_name, container_path, element_id, rule_id).
  std::vector<Diagnostic> diagnostics;
  std::map<std::string, int> counts;  // per rule id
  std::vector<std::string> models;    // source names, in lint order
  int models_checked = 0;
};

// Parses the line-oriented config format:
//   profile = standard|strict        (standard = FC+DF, strict adds BP)
//   rule.FC-07 = off|error|warning|info
//   abstraction = PublicName : PrivateName
//   fail_on = error|warning
// '#' starts a comment.  Unknown keys raise ConfigError.
LintConfig parse_config_text(const std::string& text);
LintConfig parse_config_file(const std::string& path);

// Lints one model.  Throws ConfigError for overrides naming unknown rules or
// abstraction pairs naming unknown processes.  Structural (M-*) diagnostics
// are always included.  Deterministic.
LintReport run(const BpmnModel& model, const LintConfig& config);

// Lints several models independently and merges the reports; `workers` > 1
// fans models out across threads.  The merged report is byte-identical for
// any worker count.
LintReport run_many(const std::vector<const BpmnModel*>& models, const LintConfig& config,
                    int workers = 1);

// Catalog access.  list_rules honours the category filter; ordering is the
// catalog order (FC, DF, BP ascending).
std::vector<RuleDescriptor> list_rules(const LintConfig& config);

struct RuleExplanation {
  const RuleDescriptor* descriptor;
  std::string prose;       // rule statement, citing the catalog section
  std::string conforming;  // miniature example descriptions
  std::string violating;
};
RuleExplanation explain_rule(const std::string& rule_id);  // throws UnknownRuleError

// Serialization (shared by CLI and tests so determinism can be compared on
// bytes).  JSON shape:
//   {"version":1,"models":[...],"diagnostics":[{rule,severity,element,name,
//    container,file,message}],"counts":{...}}
std::string report_to_json(const LintReport& report);
std::string report_to_text(const LintReport& report, bool summary_only = false);

// True when any diagnostic sits at or above the threshold severity.
bool report_fails(const LintReport& report, Severity threshold);

}  // namespace bpmnlint

#endif  // BPMNLINT_ENGINE_HPP
