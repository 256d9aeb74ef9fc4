// BPMN 2.0 XML interchange reader.
#ifndef BPMNLINT_XML_READER_HPP
#define BPMNLINT_XML_READER_HPP

#include <string>
#include <variant>

#include "bpmnlint/model.hpp"

namespace bpmnlint {

struct ParseIssue {
  int line = 0;
  int column = 0;
  std::string message;
  bool fatal = true;
};

// Reads a UTF-8 BPMN 2.0 XML document.  Elements are matched by local name
// within the BPMN model namespace; foreign namespaces are opaque.  Returns a
// fatal ParseIssue for malformed XML or a root outside the BPMN namespace.
std::variant<BpmnModel, ParseIssue> parse_bpmn(const std::string& bytes,
                                               const std::string& source_name);

// Convenience wrapper reading from disk; unreadable files yield a ParseIssue.
std::variant<BpmnModel, ParseIssue> parse_bpmn_file(const std::string& path);

}  // namespace bpmnlint

#endif  // BPMNLINT_XML_READER_HPP
