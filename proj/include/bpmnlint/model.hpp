// In-memory object graph for the collaboration / process-orchestration subset
// of the BPMN 2.0 metamodel.  Models are immutable after construction and safe
// to share read-only across threads.
#ifndef BPMNLINT_MODEL_HPP
#define BPMNLINT_MODEL_HPP

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bpmnlint/diagnostics.hpp"

namespace bpmnlint {

struct FlowNode;
struct SequenceFlow;
struct MessageFlow;
struct Container;
struct ProcessDef;
struct Participant;
struct Collaboration;
struct DataElement;
struct Artifact;
struct OpaqueElement;
struct BpmnModel;

// ---------------------------------------------------------------------------
// Node kinds
// ---------------------------------------------------------------------------

enum class ActivityKind {
  AbstractTask,
  SendTask,
  ReceiveTask,
  UserTask,
  ServiceTask,
  ScriptTask,
  ManualTask,
  BusinessRuleTask,
  CallActivity,
  SubProcess,
  Transaction,
  AdHocSubProcess,
};

enum class EventPosition { Start, End, IntermediateCatch, IntermediateThrow, Boundary };

enum class TriggerKind {
  None,
  Message,
  Timer,
  Error,
  Escalation,
  Cancel,
  Compensation,
  Conditional,
  Link,
  Signal,
  Terminate,
  Multiple,
  ParallelMultiple,
};

enum class GatewayKind { Exclusive, Inclusive, Parallel, EventBased, Complex };

enum class GatewayDirection { Unspecified, Converging, Diverging, Mixed };

struct Activity {
  ActivityKind kind = ActivityKind::AbstractTask;
  bool is_for_compensation = false;
  bool instantiate = false;          // receive task attribute
  bool triggered_by_event = false;   // subprocess attribute
  std::string called_element;        // callActivity target id (raw)
  ProcessDef* called_process = nullptr;  // resolved, when it names a process
  std::vector<FlowNode*> boundary_events;
  std::string default_ref;           // raw id from the default attribute
  SequenceFlow* default_flow = nullptr;
  Container* body = nullptr;         // owned container for subprocess kinds
  std::vector<DataElement*> data_inputs;
  std::vector<DataElement*> data_outputs;
};

struct Event {
  EventPosition position = EventPosition::Start;
  TriggerKind trigger = TriggerKind::None;
  // Raw event-definition kinds, in document order (drives Multiple derivation).
  std::vector<TriggerKind> definitions;
  // Matching key: the referenced message/signal/error/escalation definition's
  // name, or the link definition's name attribute.  Empty = unnamed.
  std::string trigger_name;
  // Compensation: referenced activity id (activityRef), raw.
  std::string activity_ref;
  // Raw id of the referenced message/signal/error/escalation definition;
  // resolved into trigger_name while linking.
  std::string def_ref;
  bool parallel_multiple = false;    // parallelMultiple attribute
  bool interrupting = true;          // start isInterrupting / boundary cancelActivity
  std::string attached_ref;          // boundary events: raw attachedToRef
  FlowNode* attached_to = nullptr;   // resolved
};

struct Gateway {
  GatewayKind kind = GatewayKind::Exclusive;
  GatewayDirection direction = GatewayDirection::Unspecified;
  bool instantiate = false;
  bool parallel_event_based = false;  // eventGatewayType="Parallel"
  std::string default_ref;            // raw id from the default attribute
  SequenceFlow* default_flow = nullptr;
};

struct FlowNode {
  std::string id;
  std::string name;
  Container* container = nullptr;
  std::variant<Activity, Event, Gateway> kind;
  std::vector<SequenceFlow*> incoming;
  std::vector<SequenceFlow*> outgoing;
  int line = 0;

  Activity* activity() { return std::get_if<Activity>(&kind); }
  const Activity* activity() const { return std::get_if<Activity>(&kind); }
  Event* event() { return std::get_if<Event>(&kind); }
  const Event* event() const { return std::get_if<Event>(&kind); }
  Gateway* gateway() { return std::get_if<Gateway>(&kind); }
  const Gateway* gateway() const { return std::get_if<Gateway>(&kind); }
};

// ---------------------------------------------------------------------------
// Edges
// ---------------------------------------------------------------------------

struct SequenceFlow {
  std::string id;
  std::string name;
  std::string source_ref;    // raw ids; resolved while linking
  std::string target_ref;
  FlowNode* source = nullptr;
  FlowNode* target = nullptr;
  std::optional<std::string> condition_expression;
  bool is_default = false;   // derived: referenced by some node's default attribute
  Container* container = nullptr;
  int line = 0;
};

// A message-flow endpoint is an interaction node: a participant or a flow node.
struct MsgEndpoint {
  std::string ref;                 // raw id
  FlowNode* node = nullptr;
  Participant* pool = nullptr;
  // Non-interaction-node element the ref resolved to, if any (for structural
  // reporting: e.g. a gateway or a data store named as an endpoint).
  std::string bad_kind;

  bool resolved() const { return node != nullptr || pool != nullptr; }
};

struct MessageFlow {
  std::string id;
  std::string name;
  MsgEndpoint source;
  MsgEndpoint target;
  std::string message_ref;         // raw id
  Collaboration* collaboration = nullptr;
  int line = 0;
};

// ---------------------------------------------------------------------------
// Containers and processes
// ---------------------------------------------------------------------------

// A FlowElementsContainer: either a process (top level) or the body of a
// subprocess-like activity.
struct Container {
  ProcessDef* process = nullptr;   // set when this is a process body
  FlowNode* owner = nullptr;       // set when this is a subprocess body
  Container* parent = nullptr;
  std::vector<FlowNode*> nodes;
  std::vector<SequenceFlow*> flows;
  std::vector<DataElement*> data;
  std::vector<Artifact*> artifacts;
  std::vector<OpaqueElement*> opaques;

  const std::string& id() const;
  const std::string& display_name() const;  // name, falling back to id
};

enum class ProcessType { None, Public, Private };

struct ProcessDef {
  std::string id;
  std::string name;
  ProcessType process_type = ProcessType::None;
  std::optional<bool> is_executable;
  std::optional<bool> is_closed;
  Container* root = nullptr;
};

struct Participant {
  std::string id;
  std::string name;
  std::string process_ref;         // raw id
  ProcessDef* process = nullptr;   // resolved
  Collaboration* collaboration = nullptr;

  bool is_black_box() const { return process == nullptr; }
};

struct Collaboration {
  std::string id;
  std::string name;
  std::vector<Participant*> participants;
  std::vector<MessageFlow*> message_flows;
};

// ---------------------------------------------------------------------------
// Data, artifacts, definitions
// ---------------------------------------------------------------------------

enum class DataKind { Object, ObjectReference, Store, StoreReference, Association };

struct DataElement {
  DataKind kind = DataKind::Object;
  std::string id;
  std::string name;
  Container* container = nullptr;       // null for model-global data stores
  std::string object_ref;               // ObjectReference: raw dataObjectRef
  DataElement* object = nullptr;        // resolved
  std::string store_ref;                // StoreReference: raw dataStoreRef
  DataElement* store = nullptr;         // resolved
  // Associations only:
  bool is_input = false;                // dataInputAssociation vs dataOutput...
  FlowNode* owner = nullptr;            // enclosing activity/event
  std::string data_ref;                 // raw id of the item-aware end
  DataElement* data_endpoint = nullptr; // resolved item-aware end
  int line = 0;
};

enum class ArtifactKind { Association, TextAnnotation, Group };

enum class AssocDirection { None, One, Both };

// Association endpoints may name any base element.
struct ElementRef {
  std::string ref;                 // raw id
  FlowNode* node = nullptr;
  Artifact* artifact = nullptr;
  DataElement* data = nullptr;
  Participant* pool = nullptr;
  SequenceFlow* flow = nullptr;

  bool resolved() const {
    return node || artifact || data || pool || flow;
  }
};

struct Artifact {
  ArtifactKind kind = ArtifactKind::Association;
  std::string id;
  std::string name;
  std::string text;                // text annotation body
  AssocDirection direction = AssocDirection::None;
  ElementRef source;
  ElementRef target;
  Container* container = nullptr;
  int line = 0;
};

enum class DefKind { Message, Signal, Error, Escalation };

// Root-level named definitions (message, signal, error, escalation).
struct Definition {
  DefKind kind = DefKind::Message;
  std::string id;
  std::string name;
};

// Unknown element kept as an opaque placeholder, excluded from rule checks.
struct OpaqueElement {
  std::string id;
  std::string xml_name;            // local element name
  Container* container = nullptr;
  int line = 0;
};

// ---------------------------------------------------------------------------
// Model
// ---------------------------------------------------------------------------

// Any addressable element, for identifier resolution.
using AnyRef = std::variant<FlowNode*, SequenceFlow*, MessageFlow*, ProcessDef*,
                            Participant*, Collaboration*, DataElement*, Artifact*,
                            Definition*, OpaqueElement*>;

// Structural problems recorded while linking (duplicate ids, dangling refs...).
struct StructuralNote {
  std::string code;                // stable M-rule id, e.g. "M-01"
  std::string message;
  std::string element_id;
  std::string element_name;
  Severity severity = Severity::Error;
};

struct BpmnModel {
  std::string source_name;

  // Ownership pools; deques keep addresses stable while linking.
  std::deque<Collaboration> collaborations;
  std::deque<Participant> participants;
  std::deque<ProcessDef> processes;
  std::deque<Container> containers;
  std::deque<FlowNode> nodes;
  std::deque<SequenceFlow> flows;
  std::deque<MessageFlow> message_flows;
  std::deque<DataElement> data_elements;
  std::deque<Artifact> artifacts;
  std::deque<Definition> definitions;
  std::deque<OpaqueElement> opaques;

  std::map<std::string, AnyRef> elements;
  std::vector<StructuralNote> notes;

  BpmnModel() = default;
  BpmnModel(const BpmnModel&) = delete;
  BpmnModel& operator=(const BpmnModel&) = delete;
  BpmnModel(BpmnModel&&) = default;
  BpmnModel& operator=(BpmnModel&&) = default;
};

// Builds the id map, resolves every cross-reference, wires incoming/outgoing
// lists and records StructuralNotes for violations.  Called once by the XML
// reader and the fixture builder after element creation.
void link_model(BpmnModel& model);

// Identifier lookup.
struct UnknownId {
  std::string id;
};
// Returns the element registered under `id`; UnknownId via std::nullopt.
std::optional<AnyRef> resolve(const BpmnModel& model, const std::string& id);

// Metamodel-derived checks: one category-"M" diagnostic per structural
// violation (duplicate id, dangling reference, non-interaction-node message
// flow endpoint, missing endpoint, cross-container boundary attachment),
// plus one info diagnostic per model containing unknown elements.
std::vector<Diagnostic> structural_check(const BpmnModel& model);

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

// Name semantics: compared after trimming surrounding whitespace,
// case-sensitively; unnamed = absent or trims to empty.
std::string trimmed(const std::string& s);
bool is_unnamed(const std::string& s);

bool is_subprocess_kind(ActivityKind k);       // SubProcess/Transaction/AdHoc
bool is_event_subprocess(const FlowNode& n);   // subprocess with triggeredByEvent
bool is_compensation_activity(const FlowNode& n);
bool is_catch_event(const Event& e);           // start / intermediate catch / boundary
bool is_throw_event(const Event& e);           // end / intermediate throw

// Container the node effectively belongs to for sequence-flow scoping:
// boundary events count as belonging to their attached activity's container.
const Container* effective_container(const FlowNode& n);

// The owning top-level process of a container.
const ProcessDef* root_process(const Container& c);

// The participant bound to a process, if any.
const Participant* participant_of(const BpmnModel& m, const ProcessDef& p);

// Human-readable path of container names from the root process.
std::vector<std::string> container_path(const Container& c);

const char* activity_kind_name(ActivityKind k);
const char* trigger_name_str(TriggerKind t);
const char* gateway_kind_name(GatewayKind k);

}  // namespace bpmnlint

#endif  // BPMNLINT_MODEL_HPP
