// XML interchange reader: namespace handling, element mapping, attribute and
// reference plumbing, and fatal parse failures.
#include <doctest.h>

#include <string>
#include <variant>

#include "bpmnlint/model.hpp"
#include "bpmnlint/xml_reader.hpp"

using namespace bpmnlint;

namespace {

constexpr char kHeader[] =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<bpmn:definitions xmlns:bpmn=\"http://www.omg.org/spec/BPMN/20100524/MODEL\"\n"
    "                  xmlns:ext=\"http://example.com/ext\" id=\"defs\">\n";
constexpr char kFooter[] = "</bpmn:definitions>\n";

BpmnModel parse_ok(const std::string& body) {
  auto r = parse_bpmn(kHeader + body + kFooter, "test.bpmn");
  REQUIRE(std::holds_alternative<BpmnModel>(r));
  return std::move(std::get<BpmnModel>(r));
}

FlowNode* node_by_id(const BpmnModel& m, const std::string& id) {
  auto ref = resolve(m, id);
  if (!ref) return nullptr;
  auto* n = std::get_if<FlowNode*>(&*ref);
  return n ? *n : nullptr;
}

}  // namespace

TEST_CASE("a full collaboration document round-trips into the model") {
  BpmnModel m = parse_ok(R"(
  <bpmn:collaboration id="col">
    <bpmn:participant id="pa" name="Seller" processRef="P"/>
    <bpmn:participant id="pb" name="Buyer"/>
    <bpmn:messageFlow id="mf" sourceRef="send" targetRef="pb" messageRef="msg"/>
  </bpmn:collaboration>
  <bpmn:process id="P" name="Sell" processType="Private" isExecutable="true">
    <bpmn:startEvent id="s" name="Order received">
      <bpmn:messageEventDefinition messageRef="msg"/>
    </bpmn:startEvent>
    <bpmn:sequenceFlow id="f1" sourceRef="s" targetRef="gw"/>
    <bpmn:exclusiveGateway id="gw" name="In stock?" default="f3"/>
    <bpmn:sequenceFlow id="f2" sourceRef="gw" targetRef="send" name="yes">
      <bpmn:conditionExpression>stock &gt; 0</bpmn:conditionExpression>
    </bpmn:sequenceFlow>
    <bpmn:sequenceFlow id="f3" sourceRef="gw" targetRef="e2" name="no"/>
    <bpmn:sendTask id="send" name="Ship goods"/>
    <bpmn:sequenceFlow id="f4" sourceRef="send" targetRef="e1"/>
    <bpmn:endEvent id="e1" name="Shipped"/>
    <bpmn:endEvent id="e2" name="Rejected"/>
  </bpmn:process>
  <bpmn:message id="msg" name="Order"/>
)");

  CHECK(m.source_name == "test.bpmn");
  REQUIRE(m.collaborations.size() == 1);
  REQUIRE(m.participants.size() == 2);
  CHECK(m.participants[0].process == &m.processes[0]);
  CHECK(m.participants[1].is_black_box());
  REQUIRE(m.message_flows.size() == 1);
  CHECK(m.message_flows[0].source.node == node_by_id(m, "send"));
  CHECK(m.message_flows[0].target.pool == &m.participants[1]);

  REQUIRE(m.processes.size() == 1);
  const ProcessDef& p = m.processes[0];
  CHECK(p.name == "Sell");
  CHECK(p.process_type == ProcessType::Private);
  REQUIRE(p.is_executable.has_value());
  CHECK(*p.is_executable);
  CHECK(!p.is_closed.has_value());

  FlowNode* s = node_by_id(m, "s");
  REQUIRE(s != nullptr);
  REQUIRE(s->event() != nullptr);
  CHECK(s->event()->trigger == TriggerKind::Message);
  CHECK(s->event()->trigger_name == "Order");  // resolved via messageRef

  FlowNode* gw = node_by_id(m, "gw");
  REQUIRE(gw->gateway() != nullptr);
  CHECK(gw->gateway()->kind == GatewayKind::Exclusive);
  REQUIRE(gw->gateway()->default_flow != nullptr);
  CHECK(gw->gateway()->default_flow->id == "f3");
  CHECK(gw->gateway()->default_flow->is_default);
  CHECK(gw->outgoing.size() == 2);

  auto f2ref = resolve(m, "f2");
  REQUIRE(f2ref.has_value());
  SequenceFlow* f2 = std::get<SequenceFlow*>(*f2ref);
  REQUIRE(f2->condition_expression.has_value());
  CHECK(f2->condition_expression->find("stock > 0") != std::string::npos);
  CHECK(f2->source == gw);

  CHECK(structural_check(m).empty());
}

TEST_CASE("subprocess bodies, boundaries and event triggers") {
  BpmnModel m = parse_ok(R"(
  <bpmn:process id="P">
    <bpmn:startEvent id="s"/>
    <bpmn:sequenceFlow id="f1" sourceRef="s" targetRef="sp"/>
    <bpmn:subProcess id="sp" name="Stage">
      <bpmn:startEvent id="bs"/>
      <bpmn:sequenceFlow id="bf" sourceRef="bs" targetRef="be"/>
      <bpmn:endEvent id="be">
        <bpmn:errorEventDefinition errorRef="err"/>
      </bpmn:endEvent>
      <bpmn:subProcess id="esp" triggeredByEvent="true">
        <bpmn:startEvent id="es" isInterrupting="false">
          <bpmn:signalEventDefinition signalRef="sig"/>
        </bpmn:startEvent>
        <bpmn:sequenceFlow id="ef" sourceRef="es" targetRef="ee"/>
        <bpmn:endEvent id="ee"/>
      </bpmn:subProcess>
    </bpmn:subProcess>
    <bpmn:boundaryEvent id="bd" attachedToRef="sp" cancelActivity="false">
      <bpmn:timerEventDefinition/>
    </bpmn:boundaryEvent>
    <bpmn:sequenceFlow id="f2" sourceRef="sp" targetRef="e"/>
    <bpmn:sequenceFlow id="f3" sourceRef="bd" targetRef="e"/>
    <bpmn:endEvent id="e"/>
  </bpmn:process>
  <bpmn:error id="err" name="Oops"/>
  <bpmn:signal id="sig" name="Ping"/>
)");

  FlowNode* sp = node_by_id(m, "sp");
  REQUIRE(sp != nullptr);
  REQUIRE(sp->activity() != nullptr);
  Container* body = sp->activity()->body;
  REQUIRE(body != nullptr);
  CHECK(body->owner == sp);
  CHECK(body->parent == sp->container);
  CHECK(node_by_id(m, "bs")->container == body);

  FlowNode* esp = node_by_id(m, "esp");
  REQUIRE(esp != nullptr);
  CHECK(is_event_subprocess(*esp));
  FlowNode* es = node_by_id(m, "es");
  CHECK(es->event()->trigger == TriggerKind::Signal);
  CHECK(es->event()->trigger_name == "Ping");
  CHECK(!es->event()->interrupting);

  FlowNode* be = node_by_id(m, "be");
  CHECK(be->event()->trigger == TriggerKind::Error);
  CHECK(be->event()->trigger_name == "Oops");

  FlowNode* bd = node_by_id(m, "bd");
  REQUIRE(bd->event() != nullptr);
  CHECK(bd->event()->position == EventPosition::Boundary);
  CHECK(bd->event()->trigger == TriggerKind::Timer);
  CHECK(!bd->event()->interrupting);
  CHECK(bd->event()->attached_to == sp);
  CHECK(effective_container(*bd) == sp->container);

  CHECK(structural_check(m).empty());
}

TEST_CASE("multiple event definitions derive the Multiple trigger") {
  BpmnModel m = parse_ok(R"(
  <bpmn:process id="P">
    <bpmn:startEvent id="s" parallelMultiple="true">
      <bpmn:messageEventDefinition/>
      <bpmn:timerEventDefinition/>
    </bpmn:startEvent>
    <bpmn:sequenceFlow id="f" sourceRef="s" targetRef="e"/>
    <bpmn:endEvent id="e"/>
  </bpmn:process>
)");
  FlowNode* s = node_by_id(m, "s");
  CHECK(s->event()->trigger == TriggerKind::ParallelMultiple);
  CHECK(s->event()->definitions.size() == 2);

  BpmnModel m2 = parse_ok(R"(
  <bpmn:process id="P">
    <bpmn:startEvent id="s">
      <bpmn:messageEventDefinition/>
      <bpmn:timerEventDefinition/>
    </bpmn:startEvent>
    <bpmn:sequenceFlow id="f" sourceRef="s" targetRef="e"/>
    <bpmn:endEvent id="e"/>
  </bpmn:process>
)");
  CHECK(node_by_id(m2, "s")->event()->trigger == TriggerKind::Multiple);
}

TEST_CASE("data elements, stores and associations") {
  BpmnModel m = parse_ok(R"(
  <bpmn:process id="P">
    <bpmn:startEvent id="s"/>
    <bpmn:sequenceFlow id="f1" sourceRef="s" targetRef="t"/>
    <bpmn:task id="t">
      <bpmn:dataInputAssociation id="dia">
        <bpmn:sourceRef>doref</bpmn:sourceRef>
      </bpmn:dataInputAssociation>
      <bpmn:dataOutputAssociation id="doa">
        <bpmn:targetRef>dsr</bpmn:targetRef>
      </bpmn:dataOutputAssociation>
    </bpmn:task>
    <bpmn:sequenceFlow id="f2" sourceRef="t" targetRef="e"/>
    <bpmn:endEvent id="e"/>
    <bpmn:dataObject id="do1" name="Order"/>
    <bpmn:dataObjectReference id="doref" dataObjectRef="do1" name="Order"/>
    <bpmn:dataStoreReference id="dsr" dataStoreRef="ds" name="Archive"/>
  </bpmn:process>
  <bpmn:dataStore id="ds" name="Archive"/>
)");
  FlowNode* t = node_by_id(m, "t");
  REQUIRE(t->activity() != nullptr);
  REQUIRE(t->activity()->data_inputs.size() == 1);
  REQUIRE(t->activity()->data_outputs.size() == 1);
  const DataElement* in = t->activity()->data_inputs[0];
  CHECK(in->is_input);
  REQUIRE(in->data_endpoint != nullptr);
  CHECK(in->data_endpoint->id == "doref");
  CHECK(in->data_endpoint->object != nullptr);
  const DataElement* out = t->activity()->data_outputs[0];
  REQUIRE(out->data_endpoint != nullptr);
  CHECK(out->data_endpoint->store != nullptr);
  CHECK(out->data_endpoint->store->name == "Archive");
  CHECK(structural_check(m).empty());
}

TEST_CASE("artifacts and tolerated elements parse without placeholders") {
  BpmnModel m = parse_ok(R"(
  <bpmn:process id="P">
    <bpmn:documentation>how this works</bpmn:documentation>
    <bpmn:laneSet id="ls"><bpmn:lane id="l1"/></bpmn:laneSet>
    <bpmn:startEvent id="s"/>
    <bpmn:sequenceFlow id="f" sourceRef="s" targetRef="e"/>
    <bpmn:endEvent id="e"/>
    <bpmn:textAnnotation id="ta"><bpmn:text>note</bpmn:text></bpmn:textAnnotation>
    <bpmn:association id="as" sourceRef="s" targetRef="ta" associationDirection="One"/>
    <bpmn:group id="g" name="Scope"/>
  </bpmn:process>
)");
  CHECK(m.opaques.empty());
  REQUIRE(m.artifacts.size() == 3);
  const Artifact* ta = nullptr;
  const Artifact* as = nullptr;
  for (const Artifact& a : m.artifacts) {
    if (a.kind == ArtifactKind::TextAnnotation) ta = &a;
    if (a.kind == ArtifactKind::Association) as = &a;
  }
  REQUIRE(ta != nullptr);
  CHECK(ta->text == "note");
  REQUIRE(as != nullptr);
  CHECK(as->direction == AssocDirection::One);
  CHECK(as->source.node == node_by_id(m, "s"));
  CHECK(as->target.artifact == ta);
  CHECK(structural_check(m).empty());
}

TEST_CASE("unknown elements become opaque placeholders") {
  BpmnModel m = parse_ok(R"(
  <bpmn:process id="P">
    <bpmn:startEvent id="s"/>
    <bpmn:sequenceFlow id="f" sourceRef="s" targetRef="e"/>
    <bpmn:endEvent id="e"/>
    <ext:widget id="w1"/>
    <bpmn:choreographyTask id="ct"/>
  </bpmn:process>
)");
  CHECK(m.opaques.size() == 2);
  auto diags = structural_check(m);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].rule_id == "M-06");
  CHECK(diags[0].severity == Severity::Info);
}

TEST_CASE("malformed XML is a fatal parse issue with a position") {
  auto r = parse_bpmn("<bpmn:definitions xmlns:bpmn=\"http://www.omg.org/spec/BPMN/20100524/MODEL\">\n  <bpmn:process", "broken.bpmn");
  REQUIRE(std::holds_alternative<ParseIssue>(r));
  const ParseIssue& issue = std::get<ParseIssue>(r);
  CHECK(issue.fatal);
  CHECK(issue.line >= 1);
  CHECK(issue.message != "");
}

TEST_CASE("non-BPMN root is rejected") {
  auto r = parse_bpmn("<html><body/></html>", "page.xml");
  REQUIRE(std::holds_alternative<ParseIssue>(r));
  CHECK(std::get<ParseIssue>(r).message ==
        "root element is not in the BPMN 2.0 model namespace");

  auto r2 = parse_bpmn("", "empty.xml");
  REQUIRE(std::holds_alternative<ParseIssue>(r2));
}

TEST_CASE("unreadable file is a parse issue") {
  auto r = parse_bpmn_file("/nonexistent/missing.bpmn");
  REQUIRE(std::holds_alternative<ParseIssue>(r));
  CHECK(std::get<ParseIssue>(r).message.find("cannot read") == 0);
}
