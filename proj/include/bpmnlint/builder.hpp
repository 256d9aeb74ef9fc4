// Programmatic fixture builder: constructs BpmnModel object graphs directly,
// without XML, for tests and embedding.
#ifndef BPMNLINT_BUILDER_HPP
#define BPMNLINT_BUILDER_HPP

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "bpmnlint/model.hpp"

namespace bpmnlint {

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModelBuilder {
 public:
  explicit ModelBuilder(std::string source_name = "<builder>");

  // Top-level processes and collaboration structure -------------------------
  Container* add_process(const std::string& id, const std::string& name = "",
                         ProcessType type = ProcessType::None,
                         std::optional<bool> executable = std::nullopt);
  Collaboration* add_collaboration(const std::string& id);
  // process may be null for a black-box pool.  Uses (and lazily creates) the
  // current collaboration.
  Participant* add_participant(const std::string& id, Container* process,
                               const std::string& name = "");

  // Flow nodes --------------------------------------------------------------
  FlowNode* add_task(Container* c, const std::string& id,
                     ActivityKind kind = ActivityKind::AbstractTask,
                     const std::string& name = "");
  FlowNode* add_call_activity(Container* c, const std::string& id,
                              const std::string& called_element,
                              const std::string& name = "");
  // Subprocess-like activity owning a nested container (see body_of).
  FlowNode* add_subprocess(Container* c, const std::string& id,
                           const std::string& name = "",
                           ActivityKind kind = ActivityKind::SubProcess,
                           bool triggered_by_event = false);
  Container* body_of(FlowNode* subprocess);

  FlowNode* add_event(Container* c, const std::string& id, EventPosition pos,
                      TriggerKind trigger = TriggerKind::None,
                      const std::string& name = "",
                      const std::string& trigger_name = "",
                      bool interrupting = true);
  FlowNode* add_gateway(Container* c, const std::string& id, GatewayKind kind,
                        const std::string& name = "",
                        GatewayDirection direction = GatewayDirection::Unspecified);
  // Attaches to an activity; BuildError when the target is not an activity.
  FlowNode* add_boundary(FlowNode* activity, const std::string& id,
                         TriggerKind trigger, bool interrupting = true,
                         const std::string& name = "",
                         const std::string& trigger_name = "");

  // Edges -------------------------------------------------------------------
  // BuildError on cross-container endpoints unless allow_cross_container;
  // self-loops are allowed (flagged later by rule checks).
  SequenceFlow* connect(const std::string& id, FlowNode* source, FlowNode* target,
                        std::optional<std::string> condition = std::nullopt,
                        const std::string& name = "",
                        bool allow_cross_container = false);
  void set_default(FlowNode* node, SequenceFlow* flow);
  // Endpoints given as raw ids (participant or flow node); resolution happens
  // in link_model so deliberately broken fixtures stay expressible.
  MessageFlow* add_message_flow(const std::string& id, const std::string& source,
                                const std::string& target,
                                const std::string& name = "",
                                const std::string& message_ref = "");

  // Definitions, data, artifacts -------------------------------------------
  Definition* add_definition(DefKind kind, const std::string& id,
                             const std::string& name);
  DataElement* add_data_object(Container* c, const std::string& id,
                               const std::string& name = "");
  DataElement* add_data_object_ref(Container* c, const std::string& id,
                                   const std::string& object_ref,
                                   const std::string& name = "");
  DataElement* add_data_store(const std::string& id, const std::string& name = "");
  DataElement* add_data_store_ref(Container* c, const std::string& id,
                                  const std::string& store_ref);
  DataElement* add_data_association(FlowNode* owner, const std::string& id,
                                    bool is_input, const std::string& data_ref);
  Artifact* add_annotation(Container* c, const std::string& id,
                           const std::string& text = "");
  Artifact* add_association(Container* c, const std::string& id,
                            const std::string& source, const std::string& target,
                            AssocDirection direction = AssocDirection::None);

  // Finalization ------------------------------------------------------------
  // Links references and returns the finished model; the builder is spent.
  BpmnModel into_model();

 private:
  void claim_id(const std::string& id);
  FlowNode* new_node(Container* c, const std::string& id, const std::string& name);
  Collaboration* collab();

  std::unique_ptr<BpmnModel> model_;
  std::set<std::string> ids_;
  Collaboration* collaboration_ = nullptr;
};

}  // namespace bpmnlint

#endif  // BPMNLINT_BUILDER_HPP
