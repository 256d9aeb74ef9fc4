// Shared diagnostic record emitted by structural checks and catalog rules.
#ifndef BPMNLINT_DIAGNOSTICS_HPP
#define BPMNLINT_DIAGNOSTICS_HPP

#include <string>
#include <vector>

namespace bpmnlint {

enum class Severity { Error, Warning, Info };  // totally ordered Error > Warning > Info

const char* severity_name(Severity s);

struct Diagnostic {
  std::string rule_id;
  Severity severity = Severity::Error;
  std::string message;               // single line, <= 200 chars
  std::string element_id;
  std::string element_name;
  std::vector<std::string> container_path;  // names from root
  std::string source_name;
};

// Report ordering: (source_name, container_path, element_id, rule_id).
bool diagnostic_less(const Diagnostic& a, const Diagnostic& b);

}  // namespace bpmnlint

#endif  // BPMNLINT_DIAGNOSTICS_HPP
