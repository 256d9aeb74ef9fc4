// The rule catalog: 121 well-formedness checks over a linked model, each a
// pure function producing diagnostics keyed by a stable rule id.
#ifndef BPMNLINT_RULES_HPP
#define BPMNLINT_RULES_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bpmnlint/graph.hpp"
#include "bpmnlint/model.hpp"

namespace bpmnlint {

enum class RuleCategory { FlowControl, DataFlow, BestPractice };

const char* category_name(RuleCategory c);

struct RuleDescriptor {
  const char* id;          // FC-01..85, DF-01..04, BP-01..32
  const char* section;     // catalog section, e.g. "5.1.58"
  const char* title;       // section heading
  Severity default_severity;
  RuleCategory category;
  const char* conforming;  // miniature example, for `explain`
  const char* violating;
};

// All 121 descriptors, ordered FC then DF then BP, ascending by number.
const std::vector<RuleDescriptor>& rule_catalog();

// Null when the id is not in the catalog.
const RuleDescriptor* find_rule(const std::string& id);

struct RuleOptions {
  // (abstract process, detailed process) name pairs for FC-02; names are
  // validated against the model by the caller before evaluation.
  std::vector<std::pair<std::string, std::string>> abstraction_pairs;
};

// Evaluates every catalog rule whose id satisfies `enabled`.  Diagnostics
// carry the rule's default severity; source_name is left for the caller.
// Deterministic: output depends only on the model and options.
std::vector<Diagnostic> evaluate_rules(
    const BpmnModel& model, const GraphIndex& graph, const RuleOptions& options,
    const std::function<bool(const std::string&)>& enabled);

}  // namespace bpmnlint

#endif  // BPMNLINT_RULES_HPP
