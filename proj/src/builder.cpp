#include "bpmnlint/builder.hpp"

namespace bpmnlint {

ModelBuilder::ModelBuilder(std::string source_name)
    : model_(std::make_unique<BpmnModel>()) {
  model_->source_name = std::move(source_name);
}

void ModelBuilder::claim_id(const std::string& id) {
  if (id.empty()) throw BuildError("empty identifier");
  if (!ids_.insert(id).second) throw BuildError("duplicate identifier '" + id + "'");
}

Collaboration* ModelBuilder::collab() {
  if (collaboration_ == nullptr) {
    collaboration_ = add_collaboration("Collaboration_1");
  }
  return collaboration_;
}

Container* ModelBuilder::add_process(const std::string& id, const std::string& name,
                                     ProcessType type,
                                     std::optional<bool> executable) {
  claim_id(id);
  ProcessDef& p = model_->processes.emplace_back();
  p.id = id;
  p.name = name;
  p.process_type = type;
  p.is_executable = executable;
  Container& c = model_->containers.emplace_back();
  c.process = &p;
  p.root = &c;
  return &c;
}

Collaboration* ModelBuilder::add_collaboration(const std::string& id) {
  claim_id(id);
  Collaboration& c = model_->collaborations.emplace_back();
  c.id = id;
  if (collaboration_ == nullptr) collaboration_ = &c;
  return &c;
}

Participant* ModelBuilder::add_participant(const std::string& id, Container* process,
                                           const std::string& name) {
  claim_id(id);
  Participant& p = model_->participants.emplace_back();
  p.id = id;
  p.name = name;
  if (process != nullptr) {
    if (process->process == nullptr)
      throw BuildError("participant must reference a top-level process");
    p.process_ref = process->process->id;
  }
  p.collaboration = collab();
  p.collaboration->participants.push_back(&p);
  return &p;
}

FlowNode* ModelBuilder::new_node(Container* c, const std::string& id,
                                 const std::string& name) {
  if (c == nullptr) throw BuildError("node requires a container");
  claim_id(id);
  FlowNode& n = model_->nodes.emplace_back();
  n.id = id;
  n.name = name;
  n.container = c;
  c->nodes.push_back(&n);
  return &n;
}

FlowNode* ModelBuilder::add_task(Container* c, const std::string& id,
                                 ActivityKind kind, const std::string& name) {
  if (is_subprocess_kind(kind)) throw BuildError("use add_subprocess for container activities");
  FlowNode* n = new_node(c, id, name);
  Activity a;
  a.kind = kind;
  n->kind = a;
  return n;
}

FlowNode* ModelBuilder::add_call_activity(Container* c, const std::string& id,
                                          const std::string& called_element,
                                          const std::string& name) {
  FlowNode* n = new_node(c, id, name);
  Activity a;
  a.kind = ActivityKind::CallActivity;
  a.called_element = called_element;
  n->kind = a;
  return n;
}

FlowNode* ModelBuilder::add_subprocess(Container* c, const std::string& id,
                                       const std::string& name, ActivityKind kind,
                                       bool triggered_by_event) {
  if (!is_subprocess_kind(kind)) throw BuildError("not a container activity kind");
  FlowNode* n = new_node(c, id, name);
  Activity a;
  a.kind = kind;
  a.triggered_by_event = triggered_by_event;
  Container& body = model_->containers.emplace_back();
  body.owner = n;
  body.parent = c;
  a.body = &body;
  n->kind = a;
  return n;
}

Container* ModelBuilder::body_of(FlowNode* subprocess) {
  Activity* a = subprocess != nullptr ? subprocess->activity() : nullptr;
  if (a == nullptr || a->body == nullptr) throw BuildError("node has no body container");
  return a->body;
}

FlowNode* ModelBuilder::add_event(Container* c, const std::string& id,
                                  EventPosition pos, TriggerKind trigger,
                                  const std::string& name,
                                  const std::string& trigger_name,
                                  bool interrupting) {
  if (pos == EventPosition::Boundary)
    throw BuildError("use add_boundary for boundary events");
  FlowNode* n = new_node(c, id, name);
  Event e;
  e.position = pos;
  e.trigger = trigger;
  e.trigger_name = trigger_name;
  e.interrupting = interrupting;
  n->kind = e;
  return n;
}

FlowNode* ModelBuilder::add_gateway(Container* c, const std::string& id,
                                    GatewayKind kind, const std::string& name,
                                    GatewayDirection direction) {
  FlowNode* n = new_node(c, id, name);
  Gateway g;
  g.kind = kind;
  g.direction = direction;
  n->kind = g;
  return n;
}

FlowNode* ModelBuilder::add_boundary(FlowNode* activity, const std::string& id,
                                     TriggerKind trigger, bool interrupting,
                                     const std::string& name,
                                     const std::string& trigger_name) {
  if (activity == nullptr || activity->activity() == nullptr)
    throw BuildError("boundary events attach to activities only");
  FlowNode* n = new_node(activity->container, id, name);
  Event e;
  e.position = EventPosition::Boundary;
  e.trigger = trigger;
  e.trigger_name = trigger_name;
  e.interrupting = interrupting;
  e.attached_ref = activity->id;
  n->kind = e;
  return n;
}

SequenceFlow* ModelBuilder::connect(const std::string& id, FlowNode* source,
                                    FlowNode* target,
                                    std::optional<std::string> condition,
                                    const std::string& name,
                                    bool allow_cross_container) {
  if (source == nullptr || target == nullptr)
    throw BuildError("connect requires two nodes");
  claim_id(id);
  // Boundary events count as belonging to the attached activity's container;
  // attachment is resolved only in link_model, so look at the raw ref here.
  auto home = [&](FlowNode* n) -> Container* {
    if (Event* e = n->event(); e != nullptr &&
        e->position == EventPosition::Boundary && !e->attached_ref.empty()) {
      return n->container;  // builder places boundary in the activity's container
    }
    return n->container;
  };
  if (!allow_cross_container && home(source) != home(target))
    throw BuildError("cross-container sequence flow (pass allow_cross_container to force)");
  SequenceFlow& f = model_->flows.emplace_back();
  f.id = id;
  f.name = name;
  f.source = source;
  f.target = target;
  f.source_ref = source->id;
  f.target_ref = target->id;
  f.condition_expression = std::move(condition);
  f.container = source->container;
  f.container->flows.push_back(&f);
  return &f;
}

void ModelBuilder::set_default(FlowNode* node, SequenceFlow* flow) {
  if (Activity* a = node->activity()) {
    a->default_ref = flow->id;
  } else if (Gateway* g = node->gateway()) {
    g->default_ref = flow->id;
  } else {
    throw BuildError("default flows belong to activities or gateways");
  }
}

MessageFlow* ModelBuilder::add_message_flow(const std::string& id,
                                            const std::string& source,
                                            const std::string& target,
                                            const std::string& name,
                                            const std::string& message_ref) {
  claim_id(id);
  MessageFlow& f = model_->message_flows.emplace_back();
  f.id = id;
  f.name = name;
  f.source.ref = source;
  f.target.ref = target;
  f.message_ref = message_ref;
  f.collaboration = collab();
  f.collaboration->message_flows.push_back(&f);
  return &f;
}

Definition* ModelBuilder::add_definition(DefKind kind, const std::string& id,
                                         const std::string& name) {
  claim_id(id);
  Definition& d = model_->definitions.emplace_back();
  d.kind = kind;
  d.id = id;
  d.name = name;
  return &d;
}

DataElement* ModelBuilder::add_data_object(Container* c, const std::string& id,
                                           const std::string& name) {
  claim_id(id);
  DataElement& d = model_->data_elements.emplace_back();
  d.kind = DataKind::Object;
  d.id = id;
  d.name = name;
  d.container = c;
  c->data.push_back(&d);
  return &d;
}

DataElement* ModelBuilder::add_data_object_ref(Container* c, const std::string& id,
                                               const std::string& object_ref,
                                               const std::string& name) {
  claim_id(id);
  DataElement& d = model_->data_elements.emplace_back();
  d.kind = DataKind::ObjectReference;
  d.id = id;
  d.name = name;
  d.container = c;
  d.object_ref = object_ref;
  c->data.push_back(&d);
  return &d;
}

DataElement* ModelBuilder::add_data_store(const std::string& id,
                                          const std::string& name) {
  claim_id(id);
  DataElement& d = model_->data_elements.emplace_back();
  d.kind = DataKind::Store;
  d.id = id;
  d.name = name;
  return &d;
}

DataElement* ModelBuilder::add_data_store_ref(Container* c, const std::string& id,
                                              const std::string& store_ref) {
  claim_id(id);
  DataElement& d = model_->data_elements.emplace_back();
  d.kind = DataKind::StoreReference;
  d.id = id;
  d.container = c;
  d.store_ref = store_ref;
  c->data.push_back(&d);
  return &d;
}

DataElement* ModelBuilder::add_data_association(FlowNode* owner, const std::string& id,
                                                bool is_input,
                                                const std::string& data_ref) {
  claim_id(id);
  DataElement& d = model_->data_elements.emplace_back();
  d.kind = DataKind::Association;
  d.id = id;
  d.is_input = is_input;
  d.owner = owner;
  d.data_ref = data_ref;
  d.container = owner != nullptr ? owner->container : nullptr;
  if (Activity* a = owner != nullptr ? owner->activity() : nullptr) {
    (is_input ? a->data_inputs : a->data_outputs).push_back(&d);
  }
  return &d;
}

Artifact* ModelBuilder::add_annotation(Container* c, const std::string& id,
                                       const std::string& text) {
  claim_id(id);
  Artifact& a = model_->artifacts.emplace_back();
  a.kind = ArtifactKind::TextAnnotation;
  a.id = id;
  a.text = text;
  a.container = c;
  if (c != nullptr) c->artifacts.push_back(&a);
  return &a;
}

Artifact* ModelBuilder::add_association(Container* c, const std::string& id,
                                        const std::string& source,
                                        const std::string& target,
                                        AssocDirection direction) {
  claim_id(id);
  Artifact& a = model_->artifacts.emplace_back();
  a.kind = ArtifactKind::Association;
  a.id = id;
  a.direction = direction;
  a.source.ref = source;
  a.target.ref = target;
  a.container = c;
  if (c != nullptr) c->artifacts.push_back(&a);
  return &a;
}

BpmnModel ModelBuilder::into_model() {
  if (model_ == nullptr) throw BuildError("builder already consumed");
  link_model(*model_);
  BpmnModel out = std::move(*model_);
  model_.reset();
  return out;
}

}  // namespace bpmnlint
