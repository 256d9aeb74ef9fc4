// Derived indices and flow analyses over an immutable BpmnModel: containment,
// degrees, message-flow indices, normal/exception flow classification, and the
// token-exclusivity analysis behind the gateway-matching rules.
#ifndef BPMNLINT_GRAPH_HPP
#define BPMNLINT_GRAPH_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bpmnlint/model.hpp"

namespace bpmnlint {

enum class SplitKind { NotASplit, ExclusiveSplit, NonExclusiveSplit };

// Whether an edge can carry at most one (Exclusive) or concurrently several
// (NonExclusive) control tokens per process instance.
enum class TokenMode { Exclusive, NonExclusive };

enum class FlowClass { Normal, Exception };

struct Degrees {
  int in = 0;
  int out = 0;
};

struct MessagePartners {
  // Opposite-endpoint elements of message flows touching the node, resolved
  // to the owning Participant where one exists; keyed by element id so set
  // comparison is deterministic.
  std::set<std::string> in_partners;
  std::set<std::string> out_partners;
};

// Classification of a join's incoming sequence flows.
struct JoinClassification {
  // Container has no source nodes; analysis skipped (degenerate input).
  bool skipped = false;
  // False when the marking-exploration budget was exceeded; every edge is
  // then conservatively NonExclusive.
  bool decided = true;
  std::vector<std::pair<const SequenceFlow*, TokenMode>> modes;

  TokenMode mode_of(const SequenceFlow* f) const;
  bool any_exclusive() const;
  bool any_non_exclusive() const;
  // True when some reachable marking holds tokens on both edges at once.
  bool co_markable(const SequenceFlow* a, const SequenceFlow* b) const;
  // Exists a pair of incoming edges that can never hold tokens together
  // (deadlock evidence for a parallel join).
  bool has_non_co_markable_pair() const;
  bool has_co_markable_pair() const;

  std::set<std::pair<const SequenceFlow*, const SequenceFlow*>> co_pairs;
};

class GraphIndex {
 public:
  explicit GraphIndex(const BpmnModel& model);

  const BpmnModel& model() const { return *model_; }

  // Containment ------------------------------------------------------------
  bool is_top_level(const Container& c) const { return c.parent == nullptr; }
  std::vector<const Container*> all_containers() const;
  // Containers of a process, root first, recursive through subprocess bodies.
  std::vector<const Container*> containers_of(const ProcessDef& p) const;
  std::vector<const FlowNode*> descendants(const Container& c, bool recursive) const;

  // Degrees & names ---------------------------------------------------------
  Degrees degrees(const FlowNode& n) const;  // sequence flows only
  std::map<std::string, std::vector<const FlowNode*>> name_index(
      const Container& c,
      const std::function<bool(const FlowNode&)>& predicate) const;

  // Message flows -----------------------------------------------------------
  std::vector<const MessageFlow*> incoming_messages(const FlowNode& n) const;
  std::vector<const MessageFlow*> outgoing_messages(const FlowNode& n) const;
  std::vector<const MessageFlow*> incoming_messages(const Participant& p) const;
  std::vector<const MessageFlow*> outgoing_messages(const Participant& p) const;
  MessagePartners message_partners(const FlowNode& n) const;

  // Flow classes ------------------------------------------------------------
  FlowClass flow_class(const SequenceFlow& f) const;

  // Splits and token modes --------------------------------------------------
  SplitKind split_kind(const FlowNode& n) const;
  // Pre: join has >=2 incoming flows.  Deterministic and independent of
  // element declaration order.
  JoinClassification classify_incoming(const FlowNode& join) const;

 private:
  struct ContainerTokens {
    bool skipped = false;
    bool decided = true;
    // Unordered-id pairs of flows seen marked together in one reachable marking.
    std::set<std::pair<const SequenceFlow*, const SequenceFlow*>> co_marked;
  };
  const ContainerTokens& tokens_of(const Container& c) const;
  void explore_container(const Container& c, ContainerTokens& out) const;

  const BpmnModel* model_;
  std::map<const FlowNode*, std::vector<const MessageFlow*>> node_in_msgs_;
  std::map<const FlowNode*, std::vector<const MessageFlow*>> node_out_msgs_;
  std::map<const Participant*, std::vector<const MessageFlow*>> pool_in_msgs_;
  std::map<const Participant*, std::vector<const MessageFlow*>> pool_out_msgs_;
  std::map<const SequenceFlow*, FlowClass> flow_class_;
  mutable std::map<const Container*, ContainerTokens> tokens_cache_;
};

}  // namespace bpmnlint

#endif  // BPMNLINT_GRAPH_HPP
