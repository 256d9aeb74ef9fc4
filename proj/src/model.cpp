#include "bpmnlint/model.hpp"

#include <algorithm>
#include <cctype>

namespace bpmnlint {

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "error";
}

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
  if (a.source_name != b.source_name) return a.source_name < b.source_name;
  if (a.container_path != b.container_path) return a.container_path < b.container_path;
  if (a.element_id != b.element_id) return a.element_id < b.element_id;
  return a.rule_id < b.rule_id;
}

std::string trimmed(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_unnamed(const std::string& s) { return trimmed(s).empty(); }

bool is_subprocess_kind(ActivityKind k) {
  return k == ActivityKind::SubProcess || k == ActivityKind::Transaction ||
         k == ActivityKind::AdHocSubProcess;
}

bool is_event_subprocess(const FlowNode& n) {
  const Activity* a = n.activity();
  return a != nullptr && is_subprocess_kind(a->kind) && a->triggered_by_event;
}

bool is_compensation_activity(const FlowNode& n) {
  const Activity* a = n.activity();
  return a != nullptr && a->is_for_compensation;
}

bool is_catch_event(const Event& e) {
  return e.position == EventPosition::Start ||
         e.position == EventPosition::IntermediateCatch ||
         e.position == EventPosition::Boundary;
}

bool is_throw_event(const Event& e) {
  return e.position == EventPosition::End ||
         e.position == EventPosition::IntermediateThrow;
}

const Container* effective_container(const FlowNode& n) {
  const Event* e = n.event();
  if (e != nullptr && e->position == EventPosition::Boundary &&
      e->attached_to != nullptr) {
    return e->attached_to->container;
  }
  return n.container;
}

const ProcessDef* root_process(const Container& c) {
  const Container* cur = &c;
  while (cur->parent != nullptr) cur = cur->parent;
  return cur->process;
}

const Participant* participant_of(const BpmnModel& m, const ProcessDef& p) {
  for (const Participant& part : m.participants) {
    if (part.process == &p) return &part;
  }
  return nullptr;
}

const std::string& Container::id() const {
  static const std::string empty;
  if (process != nullptr) return process->id;
  if (owner != nullptr) return owner->id;
  return empty;
}

const std::string& Container::display_name() const {
  if (process != nullptr) {
    return process->name.empty() ? process->id : process->name;
  }
  if (owner != nullptr) {
    return owner->name.empty() ? owner->id : owner->name;
  }
  static const std::string empty;
  return empty;
}

std::vector<std::string> container_path(const Container& c) {
  std::vector<std::string> path;
  for (const Container* cur = &c; cur != nullptr; cur = cur->parent) {
    path.push_back(cur->display_name());
  }
  std::reverse(path.begin(), path.end());
  return path;
}

const char* activity_kind_name(ActivityKind k) {
  switch (k) {
    case ActivityKind::AbstractTask: return "task";
    case ActivityKind::SendTask: return "send task";
    case ActivityKind::ReceiveTask: return "receive task";
    case ActivityKind::UserTask: return "user task";
    case ActivityKind::ServiceTask: return "service task";
    case ActivityKind::ScriptTask: return "script task";
    case ActivityKind::ManualTask: return "manual task";
    case ActivityKind::BusinessRuleTask: return "business rule task";
    case ActivityKind::CallActivity: return "call activity";
    case ActivityKind::SubProcess: return "sub-process";
    case ActivityKind::Transaction: return "transaction";
    case ActivityKind::AdHocSubProcess: return "ad-hoc sub-process";
  }
  return "activity";
}

const char* trigger_name_str(TriggerKind t) {
  switch (t) {
    case TriggerKind::None: return "None";
    case TriggerKind::Message: return "Message";
    case TriggerKind::Timer: return "Timer";
    case TriggerKind::Error: return "Error";
    case TriggerKind::Escalation: return "Escalation";
    case TriggerKind::Cancel: return "Cancel";
    case TriggerKind::Compensation: return "Compensation";
    case TriggerKind::Conditional: return "Conditional";
    case TriggerKind::Link: return "Link";
    case TriggerKind::Signal: return "Signal";
    case TriggerKind::Terminate: return "Terminate";
    case TriggerKind::Multiple: return "Multiple";
    case TriggerKind::ParallelMultiple: return "ParallelMultiple";
  }
  return "None";
}

const char* gateway_kind_name(GatewayKind k) {
  switch (k) {
    case GatewayKind::Exclusive: return "exclusive gateway";
    case GatewayKind::Inclusive: return "inclusive gateway";
    case GatewayKind::Parallel: return "parallel gateway";
    case GatewayKind::EventBased: return "event-based gateway";
    case GatewayKind::Complex: return "complex gateway";
  }
  return "gateway";
}

namespace {

void note(BpmnModel& m, const char* code, std::string message,
          const std::string& element_id, const std::string& element_name,
          Severity sev = Severity::Error) {
  m.notes.push_back({code, std::move(message), element_id, element_name, sev});
}

void register_id(BpmnModel& m, const std::string& id, AnyRef ref,
                 const std::string& name) {
  if (id.empty()) return;
  auto [it, inserted] = m.elements.emplace(id, ref);
  if (!inserted) {
    note(m, "M-01", "duplicate identifier '" + id + "'", id, name);
  }
}

FlowNode* find_node(BpmnModel& m, const std::string& id) {
  auto it = m.elements.find(id);
  if (it == m.elements.end()) return nullptr;
  FlowNode* const* n = std::get_if<FlowNode*>(&it->second);
  return n != nullptr ? *n : nullptr;
}

// Short description of what an id resolves to, for endpoint-kind reporting.
std::string kind_of(const AnyRef& ref) {
  struct Visitor {
    std::string operator()(FlowNode* n) const {
      if (n->gateway() != nullptr) return "a gateway";
      if (n->event() != nullptr) return "an event";
      return "an activity";
    }
    std::string operator()(SequenceFlow*) const { return "a sequence flow"; }
    std::string operator()(MessageFlow*) const { return "a message flow"; }
    std::string operator()(ProcessDef*) const { return "a process"; }
    std::string operator()(Participant*) const { return "a participant"; }
    std::string operator()(Collaboration*) const { return "a collaboration"; }
    std::string operator()(DataElement* d) const {
      switch (d->kind) {
        case DataKind::Store: return "a data store";
        case DataKind::StoreReference: return "a data store reference";
        default: return "a data element";
      }
    }
    std::string operator()(Artifact*) const { return "an artifact"; }
    std::string operator()(Definition*) const { return "a definition"; }
    std::string operator()(OpaqueElement*) const { return "an unrecognized element"; }
  };
  return std::visit(Visitor{}, ref);
}

void resolve_msg_endpoint(BpmnModel& m, MessageFlow& mf, MsgEndpoint& ep,
                          const char* side) {
  if (ep.ref.empty()) {
    note(m, "M-04",
         std::string("message flow is missing its ") + side + " endpoint",
         mf.id, mf.name);
    return;
  }
  auto it = m.elements.find(ep.ref);
  if (it == m.elements.end()) {
    note(m, "M-02",
         std::string("message flow ") + side + " '" + ep.ref +
             "' does not resolve",
         mf.id, mf.name);
    return;
  }
  if (Participant* const* p = std::get_if<Participant*>(&it->second)) {
    ep.pool = *p;
    return;
  }
  if (FlowNode* const* n = std::get_if<FlowNode*>(&it->second)) {
    if ((*n)->gateway() == nullptr) {
      ep.node = *n;
      return;
    }
  }
  // Gateways, data stores and other non-interaction-node elements.
  ep.bad_kind = kind_of(it->second);
  note(m, "M-03",
       std::string("message flow ") + side + " '" + ep.ref + "' is " +
           ep.bad_kind + ", not an interaction node",
       mf.id, mf.name);
}

void resolve_element_ref(BpmnModel& m, Artifact& art, ElementRef& ref,
                         const char* side) {
  if (ref.ref.empty()) return;
  auto it = m.elements.find(ref.ref);
  if (it == m.elements.end()) {
    note(m, "M-02",
         std::string("association ") + side + " '" + ref.ref +
             "' does not resolve",
         art.id, art.name);
    return;
  }
  if (FlowNode* const* n = std::get_if<FlowNode*>(&it->second)) ref.node = *n;
  else if (Artifact* const* a = std::get_if<Artifact*>(&it->second)) ref.artifact = *a;
  else if (DataElement* const* d = std::get_if<DataElement*>(&it->second)) ref.data = *d;
  else if (Participant* const* p = std::get_if<Participant*>(&it->second)) ref.pool = *p;
  else if (SequenceFlow* const* f = std::get_if<SequenceFlow*>(&it->second)) ref.flow = *f;
}

DataElement* find_data(BpmnModel& m, const std::string& id) {
  auto it = m.elements.find(id);
  if (it == m.elements.end()) return nullptr;
  DataElement* const* d = std::get_if<DataElement*>(&it->second);
  return d != nullptr ? *d : nullptr;
}

}  // namespace

void link_model(BpmnModel& m) {
  m.elements.clear();
  m.notes.clear();

  for (Collaboration& c : m.collaborations)
    register_id(m, c.id, &c, c.name);
  for (Participant& p : m.participants)
    register_id(m, p.id, &p, p.name);
  for (ProcessDef& p : m.processes)
    register_id(m, p.id, &p, p.name);
  for (FlowNode& n : m.nodes)
    register_id(m, n.id, &n, n.name);
  for (SequenceFlow& f : m.flows)
    register_id(m, f.id, &f, f.name);
  for (MessageFlow& f : m.message_flows)
    register_id(m, f.id, &f, f.name);
  for (DataElement& d : m.data_elements)
    register_id(m, d.id, &d, d.name);
  for (Artifact& a : m.artifacts)
    register_id(m, a.id, &a, a.name);
  for (Definition& d : m.definitions)
    register_id(m, d.id, &d, d.name);
  for (OpaqueElement& o : m.opaques)
    register_id(m, o.id, &o, o.xml_name);

  // Participants -> processes.
  for (Participant& p : m.participants) {
    if (p.process_ref.empty()) continue;
    auto it = m.elements.find(p.process_ref);
    ProcessDef* const* proc =
        it != m.elements.end() ? std::get_if<ProcessDef*>(&it->second) : nullptr;
    if (proc != nullptr) {
      p.process = *proc;
    } else {
      note(m, "M-02",
           "participant processRef '" + p.process_ref + "' does not resolve",
           p.id, p.name);
    }
  }

  // Sequence flows: endpoints, then per-node incoming/outgoing lists.
  for (FlowNode& n : m.nodes) {
    n.incoming.clear();
    n.outgoing.clear();
  }
  for (SequenceFlow& f : m.flows) {
    if (f.source == nullptr && !f.source_ref.empty()) {
      f.source = find_node(m, f.source_ref);
      if (f.source == nullptr) {
        auto it = m.elements.find(f.source_ref);
        if (it != m.elements.end()) {
          note(m, "M-03",
               "sequence flow source '" + f.source_ref + "' is " +
                   kind_of(it->second) + ", not a flow node",
               f.id, f.name);
        } else {
          note(m, "M-02",
               "sequence flow source '" + f.source_ref + "' does not resolve",
               f.id, f.name);
        }
      }
    }
    if (f.target == nullptr && !f.target_ref.empty()) {
      f.target = find_node(m, f.target_ref);
      if (f.target == nullptr) {
        auto it = m.elements.find(f.target_ref);
        if (it != m.elements.end()) {
          note(m, "M-03",
               "sequence flow target '" + f.target_ref + "' is " +
                   kind_of(it->second) + ", not a flow node",
               f.id, f.name);
        } else {
          note(m, "M-02",
               "sequence flow target '" + f.target_ref + "' does not resolve",
               f.id, f.name);
        }
      }
    }
    if (f.source != nullptr) f.source->outgoing.push_back(&f);
    if (f.target != nullptr) f.target->incoming.push_back(&f);
  }

  // Default-flow references and boundary attachment.
  for (FlowNode& n : m.nodes) {
    std::string* def_ref = nullptr;
    SequenceFlow** def_slot = nullptr;
    if (Activity* a = n.activity()) {
      def_ref = &a->default_ref;
      def_slot = &a->default_flow;
      a->boundary_events.clear();
    } else if (Gateway* g = n.gateway()) {
      def_ref = &g->default_ref;
      def_slot = &g->default_flow;
    }
    if (def_ref != nullptr && !def_ref->empty() && *def_slot == nullptr) {
      auto it = m.elements.find(*def_ref);
      SequenceFlow* const* f =
          it != m.elements.end() ? std::get_if<SequenceFlow*>(&it->second) : nullptr;
      if (f != nullptr) {
        *def_slot = *f;
      } else {
        note(m, "M-02", "default flow '" + *def_ref + "' does not resolve",
             n.id, n.name);
      }
    }
  }
  for (FlowNode& n : m.nodes) {
    if (Activity* a = n.activity()) {
      if (a->default_flow != nullptr) {
        a->default_flow->is_default = true;
        // Model invariant: a default flow carries no condition.
        a->default_flow->condition_expression.reset();
      }
    } else if (Gateway* g = n.gateway()) {
      if (g->default_flow != nullptr) {
        g->default_flow->is_default = true;
        g->default_flow->condition_expression.reset();
      }
    }
  }
  for (FlowNode& n : m.nodes) {
    Event* e = n.event();
    if (e == nullptr || e->position != EventPosition::Boundary) continue;
    if (e->attached_to == nullptr && !e->attached_ref.empty()) {
      FlowNode* act = find_node(m, e->attached_ref);
      if (act == nullptr || act->activity() == nullptr) {
        note(m, "M-02",
             "boundary event attachedToRef '" + e->attached_ref +
                 "' does not resolve to an activity",
             n.id, n.name);
        continue;
      }
      e->attached_to = act;
    }
    if (e->attached_to != nullptr) {
      e->attached_to->activity()->boundary_events.push_back(&n);
      if (e->attached_to->container != n.container) {
        note(m, "M-05",
             "boundary event is attached to an activity in a different container",
             n.id, n.name);
      }
    }
  }

  // Event trigger derivation and definition-name resolution.
  for (FlowNode& n : m.nodes) {
    Event* e = n.event();
    if (e == nullptr) continue;
    if (!e->definitions.empty()) {
      if (e->definitions.size() == 1) {
        e->trigger = e->definitions.front();
      } else {
        e->trigger = e->parallel_multiple ? TriggerKind::ParallelMultiple
                                          : TriggerKind::Multiple;
      }
    }
    if (!e->def_ref.empty() && e->trigger_name.empty()) {
      auto it = m.elements.find(e->def_ref);
      Definition* const* d =
          it != m.elements.end() ? std::get_if<Definition*>(&it->second) : nullptr;
      if (d != nullptr) {
        e->trigger_name = (*d)->name;
      } else {
        note(m, "M-02",
             "event definition reference '" + e->def_ref + "' does not resolve",
             n.id, n.name);
      }
    }
  }

  // Call activities.
  for (FlowNode& n : m.nodes) {
    Activity* a = n.activity();
    if (a == nullptr || a->kind != ActivityKind::CallActivity) continue;
    if (a->called_element.empty() || a->called_process != nullptr) continue;
    auto it = m.elements.find(a->called_element);
    ProcessDef* const* proc =
        it != m.elements.end() ? std::get_if<ProcessDef*>(&it->second) : nullptr;
    if (proc != nullptr) {
      a->called_process = *proc;
    } else {
      note(m, "M-02",
           "callActivity calledElement '" + a->called_element +
               "' does not resolve",
           n.id, n.name);
    }
  }

  // Message flows.
  for (MessageFlow& f : m.message_flows) {
    resolve_msg_endpoint(m, f, f.source, "source");
    resolve_msg_endpoint(m, f, f.target, "target");
    if (!f.message_ref.empty()) {
      auto it = m.elements.find(f.message_ref);
      Definition* const* d =
          it != m.elements.end() ? std::get_if<Definition*>(&it->second) : nullptr;
      if (d == nullptr || (*d)->kind != DefKind::Message) {
        note(m, "M-02",
             "message flow messageRef '" + f.message_ref + "' does not resolve",
             f.id, f.name);
      }
    }
  }

  // Data references.
  for (DataElement& d : m.data_elements) {
    if (d.kind == DataKind::ObjectReference && !d.object_ref.empty() &&
        d.object == nullptr) {
      DataElement* obj = find_data(m, d.object_ref);
      if (obj != nullptr && obj->kind == DataKind::Object) {
        d.object = obj;
      } else {
        note(m, "M-02",
             "dataObjectRef '" + d.object_ref + "' does not resolve", d.id,
             d.name);
      }
    }
    if (d.kind == DataKind::StoreReference && !d.store_ref.empty() &&
        d.store == nullptr) {
      DataElement* st = find_data(m, d.store_ref);
      if (st != nullptr && st->kind == DataKind::Store) {
        d.store = st;
      } else {
        note(m, "M-02",
             "dataStoreRef '" + d.store_ref + "' does not resolve", d.id,
             d.name);
      }
    }
    if (d.kind == DataKind::Association && !d.data_ref.empty() &&
        d.data_endpoint == nullptr) {
      DataElement* end = find_data(m, d.data_ref);
      if (end != nullptr && end->kind != DataKind::Association) {
        d.data_endpoint = end;
      } else if (m.elements.count(d.data_ref) == 0) {
        note(m, "M-02",
             "data association endpoint '" + d.data_ref + "' does not resolve",
             d.id, d.name);
      }
    }
  }

  // Artifact associations.
  for (Artifact& a : m.artifacts) {
    if (a.kind != ArtifactKind::Association) continue;
    resolve_element_ref(m, a, a.source, "source");
    resolve_element_ref(m, a, a.target, "target");
  }
}

std::optional<AnyRef> resolve(const BpmnModel& m, const std::string& id) {
  auto it = m.elements.find(id);
  if (it == m.elements.end()) return std::nullopt;
  return it->second;
}

std::vector<Diagnostic> structural_check(const BpmnModel& m) {
  std::vector<Diagnostic> out;
  for (const StructuralNote& n : m.notes) {
    Diagnostic d;
    d.rule_id = n.code;
    d.severity = n.severity;
    d.message = n.message;
    d.element_id = n.element_id;
    d.element_name = n.element_name;
    d.source_name = m.source_name;
    out.push_back(std::move(d));
  }
  if (!m.opaques.empty()) {
    Diagnostic d;
    d.rule_id = "M-06";
    d.severity = Severity::Info;
    d.message = "model contains " + std::to_string(m.opaques.size()) +
                " unrecognized element(s), excluded from rule checks";
    d.element_id = m.opaques.front().id;
    d.element_name = m.opaques.front().xml_name;
    d.source_name = m.source_name;
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), diagnostic_less);
  return out;
}

}  // namespace bpmnlint
