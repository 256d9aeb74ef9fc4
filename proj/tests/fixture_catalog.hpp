// Per-rule fixture registry: for every catalog rule one conforming and one
// violating miniature model, built programmatically.
#ifndef BPMNLINT_TESTS_FIXTURE_CATALOG_HPP
#define BPMNLINT_TESTS_FIXTURE_CATALOG_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bpmnlint/model.hpp"

namespace bpmnlint::tests {

struct FixtureEntry {
  std::string rule;
  std::function<BpmnModel()> conforming;
  std::function<BpmnModel()> violating;
  // FC-02 needs a declared abstraction pair; empty for every other rule.
  std::vector<std::pair<std::string, std::string>> abstraction;
};

// One entry per catalog rule, in catalog order.
const std::vector<FixtureEntry>& fixture_catalog();

}  // namespace bpmnlint::tests

#endif  // BPMNLINT_TESTS_FIXTURE_CATALOG_HPP
