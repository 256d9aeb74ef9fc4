#include "bpmnlint/xml_reader.hpp"

#include <expat.h>

#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

namespace bpmnlint {

namespace {

constexpr char kBpmnNs[] = "http://www.omg.org/spec/BPMN/20100524/MODEL";
constexpr char kNsSep = '\n';

// ---------------------------------------------------------------------------
// Lightweight DOM built via expat
// ---------------------------------------------------------------------------

struct XmlNode {
  std::string ns;
  std::string local;
  std::map<std::string, std::string> attrs;  // attribute local name -> value
  std::vector<std::unique_ptr<XmlNode>> children;
  XmlNode* parent = nullptr;
  std::string text;
  int line = 0;

  bool is_bpmn(const char* name) const { return ns == kBpmnNs && local == name; }
  std::string attr(const char* name) const {
    auto it = attrs.find(name);
    return it != attrs.end() ? it->second : std::string();
  }
  bool attr_bool(const char* name, bool fallback) const {
    std::string v = attr(name);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    return fallback;
  }
  const XmlNode* child(const char* name) const {
    for (const auto& c : children) {
      if (c->is_bpmn(name)) return c.get();
    }
    return nullptr;
  }
};

struct DomBuilder {
  XML_Parser parser = nullptr;
  std::unique_ptr<XmlNode> root;
  XmlNode* current = nullptr;

  static void split_name(const char* expat_name, std::string& ns, std::string& local) {
    const char* sep = std::strchr(expat_name, kNsSep);
    if (sep != nullptr) {
      ns.assign(expat_name, sep - expat_name);
      local.assign(sep + 1);
    } else {
      ns.clear();
      local.assign(expat_name);
    }
  }

  static void XMLCALL on_start(void* ud, const char* name, const char** attrs) {
    DomBuilder* self = static_cast<DomBuilder*>(ud);
    auto node = std::make_unique<XmlNode>();
    split_name(name, node->ns, node->local);
    node->line = static_cast<int>(XML_GetCurrentLineNumber(self->parser));
    for (const char** a = attrs; a != nullptr && *a != nullptr; a += 2) {
      std::string ans, alocal;
      split_name(a[0], ans, alocal);
      node->attrs.emplace(alocal, a[1]);
    }
    node->parent = self->current;
    XmlNode* raw = node.get();
    if (self->current != nullptr) {
      self->current->children.push_back(std::move(node));
    } else {
      self->root = std::move(node);
    }
    self->current = raw;
  }

  static void XMLCALL on_end(void* ud, const char*) {
    DomBuilder* self = static_cast<DomBuilder*>(ud);
    if (self->current != nullptr) self->current = self->current->parent;
  }

  static void XMLCALL on_text(void* ud, const char* s, int len) {
    DomBuilder* self = static_cast<DomBuilder*>(ud);
    if (self->current != nullptr) self->current->text.append(s, len);
  }
};

// ---------------------------------------------------------------------------
// DOM -> model
// ---------------------------------------------------------------------------

// BPMN elements accepted but irrelevant to linting; never opaque placeholders.
bool is_tolerated(const std::string& local) {
  static const char* names[] = {
      "documentation", "extensionElements", "laneSet", "lane", "flowNodeRef",
      "ioSpecification", "dataInput", "dataOutput", "inputSet", "outputSet",
      "property", "auditing", "monitoring", "categoryValue", "resourceRole",
      "performer", "humanPerformer", "potentialOwner", "multiInstanceLoopCharacteristics",
      "standardLoopCharacteristics", "incoming", "outgoing", "script", "rendering",
      "partnerRole", "partnerEntity", "supports", "definitionalCollaborationRef",
  };
  for (const char* n : names) {
    if (local == n) return true;
  }
  return false;
}

struct ModelReader {
  BpmnModel m;

  void read_event_definitions(const XmlNode& x, Event& e) {
    for (const auto& c : x.children) {
      if (c->ns != kBpmnNs) continue;
      const std::string& n = c->local;
      TriggerKind t;
      std::string ref;
      if (n == "messageEventDefinition") {
        t = TriggerKind::Message;
        ref = c->attr("messageRef");
      } else if (n == "timerEventDefinition") {
        t = TriggerKind::Timer;
      } else if (n == "errorEventDefinition") {
        t = TriggerKind::Error;
        ref = c->attr("errorRef");
      } else if (n == "escalationEventDefinition") {
        t = TriggerKind::Escalation;
        ref = c->attr("escalationRef");
      } else if (n == "cancelEventDefinition") {
        t = TriggerKind::Cancel;
      } else if (n == "compensateEventDefinition") {
        t = TriggerKind::Compensation;
        e.activity_ref = c->attr("activityRef");
      } else if (n == "conditionalEventDefinition") {
        t = TriggerKind::Conditional;
      } else if (n == "linkEventDefinition") {
        t = TriggerKind::Link;
        e.trigger_name = c->attr("name");
      } else if (n == "signalEventDefinition") {
        t = TriggerKind::Signal;
        ref = c->attr("signalRef");
      } else if (n == "terminateEventDefinition") {
        t = TriggerKind::Terminate;
      } else {
        continue;
      }
      e.definitions.push_back(t);
      if (!ref.empty() && e.def_ref.empty()) e.def_ref = ref;
    }
  }

  void read_data_associations(const XmlNode& x, FlowNode& node) {
    for (const auto& c : x.children) {
      if (c->ns != kBpmnNs) continue;
      bool input = c->local == "dataInputAssociation";
      bool output = c->local == "dataOutputAssociation";
      if (!input && !output) continue;
      DataElement& d = m.data_elements.emplace_back();
      d.kind = DataKind::Association;
      d.id = c->attr("id");
      d.is_input = input;
      d.owner = &node;
      d.container = node.container;
      d.line = c->line;
      // The item-aware end: sourceRef for inputs, targetRef for outputs.
      const XmlNode* refEl = c->child(input ? "sourceRef" : "targetRef");
      if (refEl != nullptr) d.data_ref = trimmed(refEl->text);
      if (Activity* a = node.activity()) {
        (input ? a->data_inputs : a->data_outputs).push_back(&d);
      }
    }
  }

  FlowNode& new_node(Container& c, const XmlNode& x) {
    FlowNode& n = m.nodes.emplace_back();
    n.id = x.attr("id");
    n.name = x.attr("name");
    n.container = &c;
    n.line = x.line;
    c.nodes.push_back(&n);
    return n;
  }

  void read_activity(Container& c, const XmlNode& x, ActivityKind kind) {
    FlowNode& n = new_node(c, x);
    Activity a;
    a.kind = kind;
    a.is_for_compensation = x.attr_bool("isForCompensation", false);
    a.default_ref = x.attr("default");
    if (kind == ActivityKind::ReceiveTask) {
      a.instantiate = x.attr_bool("instantiate", false);
    }
    if (kind == ActivityKind::CallActivity) {
      a.called_element = x.attr("calledElement");
    }
    if (is_subprocess_kind(kind)) {
      a.triggered_by_event = x.attr_bool("triggeredByEvent", false);
      Container& body = m.containers.emplace_back();
      body.owner = &n;
      body.parent = &c;
      a.body = &body;
      n.kind = a;
      read_container_children(body, x);
      read_data_associations(x, n);
      return;
    }
    n.kind = a;
    read_data_associations(x, n);
  }

  void read_event(Container& c, const XmlNode& x, EventPosition pos) {
    FlowNode& n = new_node(c, x);
    Event e;
    e.position = pos;
    e.parallel_multiple = x.attr_bool("parallelMultiple", false);
    if (pos == EventPosition::Start) {
      e.interrupting = x.attr_bool("isInterrupting", true);
    } else if (pos == EventPosition::Boundary) {
      e.interrupting = x.attr_bool("cancelActivity", true);
      e.attached_ref = x.attr("attachedToRef");
    }
    read_event_definitions(x, e);
    n.kind = e;
    read_data_associations(x, n);
  }

  void read_gateway(Container& c, const XmlNode& x, GatewayKind kind) {
    FlowNode& n = new_node(c, x);
    Gateway g;
    g.kind = kind;
    g.default_ref = x.attr("default");
    std::string dir = x.attr("gatewayDirection");
    if (dir == "Converging") g.direction = GatewayDirection::Converging;
    else if (dir == "Diverging") g.direction = GatewayDirection::Diverging;
    else if (dir == "Mixed") g.direction = GatewayDirection::Mixed;
    if (kind == GatewayKind::EventBased) {
      g.instantiate = x.attr_bool("instantiate", false);
      g.parallel_event_based = x.attr("eventGatewayType") == "Parallel";
    }
    n.kind = g;
  }

  void read_sequence_flow(Container& c, const XmlNode& x) {
    SequenceFlow& f = m.flows.emplace_back();
    f.id = x.attr("id");
    f.name = x.attr("name");
    f.source_ref = x.attr("sourceRef");
    f.target_ref = x.attr("targetRef");
    f.container = &c;
    f.line = x.line;
    const XmlNode* cond = x.child("conditionExpression");
    if (cond != nullptr) f.condition_expression = cond->text;
    c.flows.push_back(&f);
  }

  void read_artifact(Container& c, const XmlNode& x) {
    Artifact& a = m.artifacts.emplace_back();
    a.id = x.attr("id");
    a.container = &c;
    a.line = x.line;
    if (x.local == "textAnnotation") {
      a.kind = ArtifactKind::TextAnnotation;
      const XmlNode* t = x.child("text");
      if (t != nullptr) a.text = t->text;
    } else if (x.local == "group") {
      a.kind = ArtifactKind::Group;
      a.name = x.attr("name");
    } else {
      a.kind = ArtifactKind::Association;
      a.source.ref = x.attr("sourceRef");
      a.target.ref = x.attr("targetRef");
      std::string dir = x.attr("associationDirection");
      if (dir == "One") a.direction = AssocDirection::One;
      else if (dir == "Both") a.direction = AssocDirection::Both;
    }
    c.artifacts.push_back(&a);
  }

  void read_container_children(Container& c, const XmlNode& x) {
    for (const auto& child : x.children) {
      if (child->ns != kBpmnNs) {
        // Foreign-namespace elements are opaque.
        add_opaque(c, *child);
        continue;
      }
      const std::string& n = child->local;
      if (n == "startEvent") read_event(c, *child, EventPosition::Start);
      else if (n == "endEvent") read_event(c, *child, EventPosition::End);
      else if (n == "intermediateCatchEvent") read_event(c, *child, EventPosition::IntermediateCatch);
      else if (n == "intermediateThrowEvent") read_event(c, *child, EventPosition::IntermediateThrow);
      else if (n == "boundaryEvent") read_event(c, *child, EventPosition::Boundary);
      else if (n == "task") read_activity(c, *child, ActivityKind::AbstractTask);
      else if (n == "sendTask") read_activity(c, *child, ActivityKind::SendTask);
      else if (n == "receiveTask") read_activity(c, *child, ActivityKind::ReceiveTask);
      else if (n == "userTask") read_activity(c, *child, ActivityKind::UserTask);
      else if (n == "serviceTask") read_activity(c, *child, ActivityKind::ServiceTask);
      else if (n == "scriptTask") read_activity(c, *child, ActivityKind::ScriptTask);
      else if (n == "manualTask") read_activity(c, *child, ActivityKind::ManualTask);
      else if (n == "businessRuleTask") read_activity(c, *child, ActivityKind::BusinessRuleTask);
      else if (n == "callActivity") read_activity(c, *child, ActivityKind::CallActivity);
      else if (n == "subProcess") read_activity(c, *child, ActivityKind::SubProcess);
      else if (n == "transaction") read_activity(c, *child, ActivityKind::Transaction);
      else if (n == "adHocSubProcess") read_activity(c, *child, ActivityKind::AdHocSubProcess);
      else if (n == "exclusiveGateway") read_gateway(c, *child, GatewayKind::Exclusive);
      else if (n == "inclusiveGateway") read_gateway(c, *child, GatewayKind::Inclusive);
      else if (n == "parallelGateway") read_gateway(c, *child, GatewayKind::Parallel);
      else if (n == "eventBasedGateway") read_gateway(c, *child, GatewayKind::EventBased);
      else if (n == "complexGateway") read_gateway(c, *child, GatewayKind::Complex);
      else if (n == "sequenceFlow") read_sequence_flow(c, *child);
      else if (n == "dataObject") {
        DataElement& d = m.data_elements.emplace_back();
        d.kind = DataKind::Object;
        d.id = child->attr("id");
        d.name = child->attr("name");
        d.container = &c;
        d.line = child->line;
        c.data.push_back(&d);
      } else if (n == "dataObjectReference") {
        DataElement& d = m.data_elements.emplace_back();
        d.kind = DataKind::ObjectReference;
        d.id = child->attr("id");
        d.name = child->attr("name");
        d.container = &c;
        d.object_ref = child->attr("dataObjectRef");
        d.line = child->line;
        c.data.push_back(&d);
      } else if (n == "dataStoreReference") {
        DataElement& d = m.data_elements.emplace_back();
        d.kind = DataKind::StoreReference;
        d.id = child->attr("id");
        d.name = child->attr("name");
        d.container = &c;
        d.store_ref = child->attr("dataStoreRef");
        d.line = child->line;
        c.data.push_back(&d);
      } else if (n == "association" || n == "textAnnotation" || n == "group") {
        read_artifact(c, *child);
      } else if (is_tolerated(n)) {
        // parsed and ignored
      } else {
        add_opaque(c, *child);
      }
    }
  }

  void add_opaque(Container& c, const XmlNode& x) {
    OpaqueElement& o = m.opaques.emplace_back();
    o.id = x.attr("id");
    o.xml_name = x.local;
    o.container = &c;
    o.line = x.line;
    c.opaques.push_back(&o);
  }

  void read_process(const XmlNode& x) {
    ProcessDef& p = m.processes.emplace_back();
    p.id = x.attr("id");
    p.name = x.attr("name");
    std::string pt = x.attr("processType");
    if (pt == "Public") p.process_type = ProcessType::Public;
    else if (pt == "Private") p.process_type = ProcessType::Private;
    if (!x.attr("isExecutable").empty())
      p.is_executable = x.attr_bool("isExecutable", false);
    if (!x.attr("isClosed").empty())
      p.is_closed = x.attr_bool("isClosed", false);
    Container& c = m.containers.emplace_back();
    c.process = &p;
    p.root = &c;
    read_container_children(c, x);
  }

  void read_collaboration(const XmlNode& x) {
    Collaboration& col = m.collaborations.emplace_back();
    col.id = x.attr("id");
    col.name = x.attr("name");
    for (const auto& child : x.children) {
      if (child->ns != kBpmnNs) continue;
      if (child->local == "participant") {
        Participant& p = m.participants.emplace_back();
        p.id = child->attr("id");
        p.name = child->attr("name");
        p.process_ref = child->attr("processRef");
        p.collaboration = &col;
        col.participants.push_back(&p);
      } else if (child->local == "messageFlow") {
        MessageFlow& f = m.message_flows.emplace_back();
        f.id = child->attr("id");
        f.name = child->attr("name");
        f.source.ref = child->attr("sourceRef");
        f.target.ref = child->attr("targetRef");
        f.message_ref = child->attr("messageRef");
        f.collaboration = &col;
        f.line = child->line;
        col.message_flows.push_back(&f);
      }
    }
  }

  void read_definitions(const XmlNode& root) {
    for (const auto& child : root.children) {
      if (child->ns != kBpmnNs) continue;
      const std::string& n = child->local;
      if (n == "process") {
        read_process(*child);
      } else if (n == "collaboration") {
        read_collaboration(*child);
      } else if (n == "message" || n == "signal" || n == "error" ||
                 n == "escalation") {
        Definition& d = m.definitions.emplace_back();
        if (n == "message") d.kind = DefKind::Message;
        else if (n == "signal") d.kind = DefKind::Signal;
        else if (n == "error") d.kind = DefKind::Error;
        else d.kind = DefKind::Escalation;
        d.id = child->attr("id");
        d.name = child->attr("name");
      } else if (n == "dataStore") {
        DataElement& d = m.data_elements.emplace_back();
        d.kind = DataKind::Store;
        d.id = child->attr("id");
        d.name = child->attr("name");
        d.line = child->line;
      }
    }
  }
};

}  // namespace

std::variant<BpmnModel, ParseIssue> parse_bpmn(const std::string& bytes,
                                               const std::string& source_name) {
  DomBuilder dom;
  XML_Parser parser = XML_ParserCreateNS(nullptr, kNsSep);
  dom.parser = parser;
  XML_SetUserData(parser, &dom);
  XML_SetElementHandler(parser, DomBuilder::on_start, DomBuilder::on_end);
  XML_SetCharacterDataHandler(parser, DomBuilder::on_text);

  XML_Status st = XML_Parse(parser, bytes.data(), static_cast<int>(bytes.size()),
                            /*isFinal=*/1);
  ParseIssue issue;
  if (st == XML_STATUS_ERROR) {
    issue.line = static_cast<int>(XML_GetCurrentLineNumber(parser));
    issue.column = static_cast<int>(XML_GetCurrentColumnNumber(parser));
    issue.message = XML_ErrorString(XML_GetErrorCode(parser));
    XML_ParserFree(parser);
    return issue;
  }
  XML_ParserFree(parser);

  if (dom.root == nullptr) {
    issue.message = "empty document";
    return issue;
  }
  if (dom.root->ns != kBpmnNs) {
    issue.line = dom.root->line;
    issue.message = "root element is not in the BPMN 2.0 model namespace";
    return issue;
  }

  ModelReader reader;
  reader.m.source_name = source_name;
  reader.read_definitions(*dom.root);
  link_model(reader.m);
  return std::move(reader.m);
}

std::variant<BpmnModel, ParseIssue> parse_bpmn_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ParseIssue issue;
    issue.message = "cannot read file: " + path;
    return issue;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bpmn(buf.str(), path);
}

}  // namespace bpmnlint
