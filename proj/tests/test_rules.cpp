// Rule catalog integrity plus the per-rule fixture suite: every rule has one
// conforming and one violating model, and fires exactly where expected.
#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "bpmnlint/engine.hpp"
#include "fixture_catalog.hpp"

using namespace bpmnlint;
using bpmnlint::tests::FixtureEntry;
using bpmnlint::tests::fixture_catalog;

namespace {

std::multiset<std::string> fired_rules(const BpmnModel& model,
                                       const FixtureEntry& entry) {
  LintConfig config;
  config.abstraction_pairs = entry.abstraction;
  LintReport report = run(model, config);
  std::multiset<std::string> ids;
  for (const Diagnostic& d : report.diagnostics) ids.insert(d.rule_id);
  return ids;
}

}  // namespace

TEST_CASE("catalog has 121 rules in three categories") {
  const auto& catalog = rule_catalog();
  CHECK(catalog.size() == 121);

  std::map<RuleCategory, int> per_category;
  std::set<std::string> ids;
  for (const RuleDescriptor& d : catalog) {
    ++per_category[d.category];
    CHECK(ids.insert(d.id).second);  // ids are unique
  }
  CHECK(per_category[RuleCategory::FlowControl] == 85);
  CHECK(per_category[RuleCategory::DataFlow] == 4);
  CHECK(per_category[RuleCategory::BestPractice] == 32);
}

TEST_CASE("rule ids map one-to-one onto catalog sections") {
  for (const RuleDescriptor& d : rule_catalog()) {
    std::string id(d.id);
    std::string prefix = id.substr(0, 2);
    int number = std::stoi(id.substr(3));
    std::string expected_section;
    if (prefix == "FC") expected_section = "5.1." + std::to_string(number);
    if (prefix == "DF") expected_section = "5.2." + std::to_string(number);
    if (prefix == "BP") expected_section = "5.3." + std::to_string(number);
    INFO(id);
    CHECK(d.section == expected_section);
    CHECK(find_rule(id) == &d);
  }
  CHECK(find_rule("FC-00") == nullptr);
  CHECK(find_rule("XX-01") == nullptr);
}

TEST_CASE("default severities follow the category") {
  for (const RuleDescriptor& d : rule_catalog()) {
    INFO(d.id);
    if (d.category == RuleCategory::BestPractice) {
      CHECK(d.default_severity == Severity::Warning);
    } else {
      CHECK(d.default_severity == Severity::Error);
    }
    CHECK(std::string(d.title) != "");
    CHECK(std::string(d.conforming) != "");
    CHECK(std::string(d.violating) != "");
  }
}

TEST_CASE("fixture suite covers every rule") {
  std::set<std::string> covered;
  for (const FixtureEntry& e : fixture_catalog()) {
    CHECK(find_rule(e.rule) != nullptr);
    CHECK(covered.insert(e.rule).second);
  }
  CHECK(covered.size() == rule_catalog().size());
}

TEST_CASE("violating fixtures fire their rule; conforming fixtures do not") {
  for (const FixtureEntry& e : fixture_catalog()) {
    INFO("rule " << e.rule);
    BpmnModel good = e.conforming();
    BpmnModel bad = e.violating();
    auto good_ids = fired_rules(good, e);
    auto bad_ids = fired_rules(bad, e);
    CHECK_MESSAGE(good_ids.count(e.rule) == 0, e.rule << " fired on its conforming fixture");
    CHECK_MESSAGE(bad_ids.count(e.rule) >= 1, e.rule << " silent on its violating fixture");
  }
}

TEST_CASE("fixtures are structurally sound") {
  // Fixtures probe lint rules, not the metamodel: no M-diagnostics expected.
  for (const FixtureEntry& e : fixture_catalog()) {
    INFO("rule " << e.rule);
    BpmnModel good = e.conforming();
    BpmnModel bad = e.violating();
    CHECK(structural_check(good).empty());
    CHECK(structural_check(bad).empty());
  }
}

TEST_CASE("disabling a rule silences it") {
  for (const FixtureEntry& e : fixture_catalog()) {
    BpmnModel bad = e.violating();
    LintConfig config;
    config.abstraction_pairs = e.abstraction;
    config.rule_overrides[e.rule] = std::nullopt;
    LintReport report = run(bad, config);
    for (const Diagnostic& d : report.diagnostics) {
      INFO("rule " << e.rule);
      CHECK(d.rule_id != e.rule);
    }
  }
}
