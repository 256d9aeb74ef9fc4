// Static rule catalog: 85 flow-control, 4 data-flow and 32 best-practice
// descriptors, in section order.
#include "bpmnlint/rules.hpp"

#include <map>

namespace bpmnlint {

const char* category_name(RuleCategory c) {
  switch (c) {
    case RuleCategory::FlowControl: return "flow-control";
    case RuleCategory::DataFlow: return "data-flow";
    case RuleCategory::BestPractice: return "best-practice";
  }
  return "?";
}

namespace {

constexpr Severity kErr = Severity::Error;
constexpr Severity kWarn = Severity::Warning;
constexpr RuleCategory kFC = RuleCategory::FlowControl;
constexpr RuleCategory kDF = RuleCategory::DataFlow;
constexpr RuleCategory kBP = RuleCategory::BestPractice;

const std::vector<RuleDescriptor> kCatalog = {
    {"FC-01", "5.1.1", "Only one implicit pool can exist in a collaboration", kErr, kFC,
     "Collaboration with two processes, one bound to a pool and one implicit.",
     "Collaboration with two processes and no participant binding either."},
    {"FC-02", "5.1.2",
     "A Process is an abstraction of more detailed Process, if its normal flow is contained by the "
     "second Process's normal flow",
     kErr, kFC,
     "Declared abstract process with fewer nodes, flows and message flows than the detailed one.",
     "Declared abstract process with more incoming message flows than the detailed process."},
    {"FC-03", "5.1.3", "A public Process may not be executable", kErr, kFC,
     "Public process with isExecutable=false.", "Public process with isExecutable=true."},
    {"FC-04", "5.1.4",
     "A Top-Level Process can only be instantiated by a restricted set of Start Events types", kErr,
     kFC, "Top-level process started by a Message start event.",
     "Top-level process started by an Escalation start event."},
    {"FC-05", "5.1.5", "A Call Activity must only call a Callable Element", kErr, kFC,
     "Call activity targeting a process with a None start event.",
     "Call activity targeting a process whose only start events are typed."},
    {"FC-06", "5.1.6",
     "The messages flows interacting with a collapsed view of a sub-process must be the same as "
     "the depicted in the detailed view of the same sub-process",
     kErr, kFC,
     "Sub-process whose attached message-flow partners equal those of its inner nodes.",
     "Sub-process exchanging messages with a pool its inner nodes never talk to."},
    {"FC-07", "5.1.7", "A Sub-Process can only have one None Start Event", kErr, kFC,
     "Embedded sub-process with a single None start event.",
     "Embedded sub-process with a Message start event."},
    {"FC-08", "5.1.8",
     "An Event Sub-Process can only have a single Start Event and it must be typed", kErr, kFC,
     "Event sub-process with one Error start event.",
     "Event sub-process with an untyped (None) start event."},
    {"FC-09", "5.1.9",
     "An Event Sub-Process must not have any incoming or outgoing Sequence Flows", kErr, kFC,
     "Event sub-process connected to its container only through its start trigger.",
     "Event sub-process with an incoming sequence flow from a task."},
    {"FC-10", "5.1.10",
     "If a container includes Start and End Events, as general rule, all Flow Nodes must have at "
     "least one incoming or one outgoing Sequence Flow",
     kErr, kFC, "All flow nodes between the start and end events are connected.",
     "A sub-process sitting in the container with no sequence flows at all."},
    {"FC-11", "5.1.11",
     "A Flow Node, in a container that includes start and end events, must have at least one "
     "incoming or one outgoing sequence flow",
     kErr, kFC, "Every task lies on a path of sequence flows.",
     "An isolated task in a container that has explicit start and end events."},
    {"FC-12", "5.1.12",
     "Only some predefined types of Start, Intermediate and End Events are allowed in specific "
     "contexts",
     kErr, kFC, "A Message boundary event and a Timer end-free context.",
     "A Timer end event (timers cannot end a process)."},
    {"FC-13", "5.1.13", "Incoming Sequence Flow not allowed in a Start Event", kErr, kFC,
     "Start event with outgoing flows only.", "Start event targeted by a sequence flow."},
    {"FC-14", "5.1.14", "Outgoing Sequence Flow not allowed in an End Event", kErr, kFC,
     "End event with incoming flows only.", "End event with an outgoing sequence flow."},
    {"FC-15", "5.1.15",
     "A Catch Event with incoming Message Flow must have Message or Multiple type", kErr, kFC,
     "Message catch event receiving a message flow.",
     "Timer catch event receiving a message flow."},
    {"FC-16", "5.1.16",
     "A Catch Event must have Multiple type if there are more than one incoming Message Flow",
     kErr, kFC, "Multiple catch event receiving two message flows.",
     "Message catch event receiving two message flows."},
    {"FC-17", "5.1.17", "Outgoing Message Flow not allowed in a Catch Event", kErr, kFC,
     "Catch event with incoming message flows only.",
     "Catch event used as the source of a message flow."},
    {"FC-18", "5.1.18",
     "A Throw Event with outgoing Message Flow must have Message or Multiple types", kErr, kFC,
     "Message end event sending a message flow.", "Signal end event sending a message flow."},
    {"FC-19", "5.1.19",
     "A Throw Event must have Multiple type if there are more than one outgoing Message Flow",
     kErr, kFC, "Multiple throw event sending two message flows.",
     "Message throw event sending two message flows."},
    {"FC-20", "5.1.20", "Incoming Message Flow not allowed in a Throw Event", kErr, kFC,
     "Throw event with outgoing message flows only.",
     "Message end event targeted by a message flow."},
    {"FC-21", "5.1.21",
     "A Catch Link Event must have an incoming Sequence Flow. A Throw Link Event must have "
     "outgoing Sequence Flow",
     kErr, kFC,
     "Throw link with one incoming flow paired with a catch link with one outgoing flow.",
     "Catch link event with no outgoing sequence flow."},
    {"FC-22", "5.1.22", "Multiple Throw Link Events allowed, but only one Catch Link Event", kErr,
     kFC, "Two throw links and one catch link sharing a name.",
     "Two catch link events with the same name in one container."},
    {"FC-23", "5.1.23", "Source and target Link Events must have names", kErr, kFC,
     "Link pair named 'A'.", "Throw link event without a name."},
    {"FC-24", "5.1.24", "Throw and Catch Link Events names must match in the same container", kErr,
     kFC, "Throw 'A' and catch 'A' in the same container.",
     "Throw 'A' with only a catch 'B' present."},
    {"FC-25", "5.1.25",
     "Intermediate Events used within normal flow require incoming and outgoing Sequence Flows",
     kErr, kFC, "Timer intermediate event with one incoming and one outgoing flow.",
     "Timer intermediate event with no incoming flow."},
    {"FC-26", "5.1.26",
     "Activities or Gateways without incoming Sequence Flow do not allow explicit Start Events",
     kErr, kFC, "Implicitly started activities in a container without start events.",
     "A start event next to an activity that has no incoming flow."},
    {"FC-27", "5.1.27",
     "Explicit Start/End Events do not allow Activities or Gateways without incoming/outgoing "
     "Sequence Flow",
     kErr, kFC, "Explicit start/end with all nodes fully connected.",
     "Explicit start event plus a gateway with no incoming flow."},
    {"FC-28", "5.1.28", "Implicit Start Events require implicit End Events, and vice versa", kErr,
     kFC, "Container with both start and end events (or neither).",
     "Container with a start event but no end event."},
    {"FC-29", "5.1.29", "Non-interrupting Start Events are only allowed in Event SubProcess", kErr,
     kFC, "Non-interrupting Message start inside an event sub-process.",
     "Non-interrupting start event in a plain process."},
    {"FC-30", "5.1.30", "Error Intermediate Events can only be attached to Activity boundaries",
     kErr, kFC, "Error catch attached to a task boundary.",
     "Error intermediate catch event placed in normal flow."},
    {"FC-31", "5.1.31", "Catch Error Event must trigger an exception flow", kErr, kFC,
     "Boundary error event with one outgoing exception flow.",
     "Boundary error event with no outgoing flow."},
    {"FC-32", "5.1.32",
     "A Throw Error Event must have an unnamed Catch Error Event or a Catch Error Event with the "
     "same name",
     kErr, kFC, "Error end 'E1' inside a sub-process with boundary catch 'E1'.",
     "Error end 'E2' whose only boundary catch is named 'E1'."},
    {"FC-33", "5.1.33",
     "A catching Error Event name must match the name of a thrown Error Event or be unnamed", kErr,
     kFC, "Boundary catch 'E1' over a body throwing 'E1'.",
     "Boundary catch 'E9' with no 'E9' thrown inside."},
    {"FC-34", "5.1.34", "Unnamed and named Catch Error Events must not be mixed", kErr, kFC,
     "Two named error catches on one activity.",
     "An unnamed and a named error catch on the same activity."},
    {"FC-35", "5.1.35", "A Throwing Error Event must be an End Event", kErr, kFC,
     "Error thrown by an end event.", "Error thrown by an intermediate throw event."},
    {"FC-36", "5.1.36", "Catch Escalation Events can only be attached to activity boundaries", kErr,
     kFC, "Escalation catch on a sub-process boundary.",
     "Escalation intermediate catch event in normal flow."},
    {"FC-37", "5.1.37", "Catch Escalation Event must trigger an exception flow", kErr, kFC,
     "Boundary escalation event with an outgoing flow.",
     "Boundary escalation event with no outgoing flow."},
    {"FC-38", "5.1.38",
     "A Throw Escalation Event must have an unnamed Catch Escalation Event or a Catch Escalation "
     "Event with the same name",
     kErr, kFC, "Escalation end 'Esc1' with boundary catch 'Esc1'.",
     "Escalation end 'Esc2' with no matching catch in scope."},
    {"FC-39", "5.1.39",
     "Named and unnamed Interrupting Catch Escalation Events must not be mixed", kErr, kFC,
     "Two named interrupting escalation catches on one activity.",
     "A named and an unnamed interrupting escalation catch on one activity."},
    {"FC-40", "5.1.40",
     "Unnamed and named Catch non-Interrupting Escalation Events must not be mixed", kErr, kFC,
     "Two named non-interrupting escalation catches on one activity.",
     "A named and an unnamed non-interrupting escalation catch on one activity."},
    {"FC-41", "5.1.41",
     "A Throwing Escalation End Event must be caught by an Interrupting Escalation Catch Event",
     kErr, kFC, "Escalation end event caught by an interrupting boundary catch.",
     "Escalation end event caught only by a non-interrupting catch."},
    {"FC-42", "5.1.42",
     "A Throwing Escalation Intermediate Event must be caught by a non-Interrupting Escalation "
     "Catch Event",
     kErr, kFC, "Escalation intermediate throw caught by a non-interrupting catch.",
     "Escalation intermediate throw caught only by an interrupting catch."},
    {"FC-43", "5.1.43",
     "A Throw Escalation Event must have an unnamed Catch Escalation Event or a Catch Escalation "
     "Event with the same name",
     kErr, kFC, "Named escalation catch matching a thrown escalation.",
     "Named escalation catch whose name is never thrown in its scope."},
    {"FC-44", "5.1.44",
     "A Throw Signal Event must be caught by a Catch Signal Event with the same name or unnamed",
     kErr, kFC, "Signal 'S1' thrown in one pool and caught in another.",
     "Signal 'S2' thrown with no signal catch anywhere."},
    {"FC-45", "5.1.45",
     "A named Catch Signal Event captures Signal Throw Event with the same name", kErr, kFC,
     "Catch of signal 'S1' with a matching throw.",
     "Catch of signal 'S9' while no event throws 'S9'."},
    {"FC-46", "5.1.46",
     "A catching Cancel Intermediate Event can only be used attached to the boundary of a "
     "Transaction Sub-Process",
     kErr, kFC, "Cancel boundary event on a transaction.",
     "Message boundary event attached to a transaction."},
    {"FC-47", "5.1.47",
     "The Cancel End Event must be contained within the Transaction SubProcess or within a "
     "lower-level child Transaction SubProcess",
     kErr, kFC, "Transaction with a Cancel boundary and a Cancel end inside.",
     "Cancel boundary on a transaction that contains no Cancel end event."},
    {"FC-48", "5.1.48",
     "A Terminate End Event must exist in a Transaction if there are several types of End Events",
     kErr, kFC, "Transaction with two end events, one of them Terminate.",
     "Transaction with several end events and no Terminate end."},
    {"FC-49", "5.1.49",
     "A Compensation End or Intermediate Event can only be used in a Sub-Process which is not a "
     "Transaction",
     kErr, kFC, "Compensation throw inside a plain sub-process.",
     "Compensation end event inside a transaction."},
    {"FC-50", "5.1.50",
     "Embedded SubProcess can have Compensation Activities explicitly called or via Event "
     "SubProcess",
     kErr, kFC,
     "Compensation activity linked by association to a compensation boundary event.",
     "Compensation activity with no boundary association and no compensation event sub-process."},
    {"FC-51", "5.1.51",
     "The name of the throwing Intermediate Compensation Event must match to the name of "
     "cancelled Activities",
     kErr, kFC, "Compensation throw 'Book' compensating activity 'Book' with a handler.",
     "Compensation throw naming an activity that does not exist."},
    {"FC-52", "5.1.52",
     "An exception flow originated by Interrupting Catch Events can merge the normal flow through "
     "an Exclusive Gateway",
     kErr, kFC, "Interrupting boundary path merging at an exclusive gateway.",
     "Interrupting boundary path merging at an inclusive gateway."},
    {"FC-53", "5.1.53",
     "An exception flow originated by Non-Interrupting Catch Events can merge the normal flow "
     "through an Inclusive Gateway",
     kErr, kFC, "Non-interrupting boundary path merging at an inclusive gateway.",
     "Non-interrupting boundary path merging at an exclusive gateway."},
    {"FC-54", "5.1.54",
     "A Condition Expression must not be used if the source of the Sequence Flow is an Event",
     kErr, kFC, "Unconditional flow out of a boundary event.",
     "Conditional flow out of a boundary event."},
    {"FC-55", "5.1.55",
     "A Boundary Event must have exactly one outgoing Sequence Flow (unless it has the "
     "Compensation type)",
     kErr, kFC, "Timer boundary event with exactly one outgoing flow.",
     "Timer boundary event with no outgoing flow."},
    {"FC-56", "5.1.56", "A Boundary Event must not have incoming Sequence Flow", kErr, kFC,
     "Boundary event with outgoing flow only.",
     "Boundary event targeted by a sequence flow."},
    {"FC-57", "5.1.57",
     "An Intermediate Event must have at least one incoming and outgoing Sequence Flow", kErr, kFC,
     "Message intermediate throw with incoming and outgoing flows.",
     "Message intermediate throw with no incoming flow."},
    {"FC-58", "5.1.58", "A Parallel Gateway joins only non-exclusive Sequence Flows", kErr, kFC,
     "Parallel join fed by the branches of a parallel split.",
     "Parallel join fed by the branches of an exclusive split (deadlock)."},
    {"FC-59", "5.1.59", "A join Exclusive Gateway must merge only exclusive Sequence Flows", kErr,
     kFC, "Exclusive join fed by the branches of an exclusive split.",
     "Exclusive join fed by the branches of a parallel split."},
    {"FC-60", "5.1.60",
     "A Data-Based Exclusive Gateway must have exclusive outgoing Sequence Flows", kErr, kFC,
     "Exclusive split whose non-default branches all carry conditions.",
     "Exclusive split mixing conditional and unconditional branches."},
    {"FC-61", "5.1.61",
     "A Gateway must have either multiple incoming Sequence Flow or multiple outgoing Sequence "
     "Flow",
     kErr, kFC, "Gateway with one incoming and two outgoing flows.",
     "Gateway with one incoming and one outgoing flow."},
    {"FC-62", "5.1.62",
     "A Gateway with a gatewayDirection property of converging must have multiple incoming "
     "Sequence Flow",
     kErr, kFC, "Converging gateway with two incoming flows.",
     "Converging gateway with a single incoming flow."},
    {"FC-63", "5.1.63",
     "A Gateway with a gatewayDirection property of diverging must have multiple outgoing "
     "Sequence Flow",
     kErr, kFC, "Diverging gateway with two outgoing flows.",
     "Diverging gateway with a single outgoing flow."},
    {"FC-64", "5.1.64", "An Event Gateway must have two or more outgoing Sequence Flow", kErr, kFC,
     "Event-based gateway branching to two catch events.",
     "Event-based gateway with a single outgoing flow."},
    {"FC-65", "5.1.65",
     "A Conditional Sequence Flow must not be used if the source Gateway is of type Event-Based",
     kErr, kFC, "Plain flows out of an event-based gateway.",
     "Conditional flow out of an event-based gateway."},
    {"FC-66", "5.1.66",
     "A Condition Expression must be defined if the source of the Sequence Flow is an Exclusive "
     "or Inclusive Gateway",
     kErr, kFC, "Exclusive split with conditions on every non-default branch.",
     "Exclusive split with an unconditional non-default branch."},
    {"FC-67", "5.1.67",
     "The target of the Event Based Gateway must be Receive Task or specific Intermediate Catch "
     "Event",
     kErr, kFC, "Event gateway branching to Message and Timer catch events.",
     "Event gateway branching to a user task."},
    {"FC-68", "5.1.68",
     "Receive Tasks used in an Event Based Gateway configuration must not have any attached "
     "Boundary Event",
     kErr, kFC, "Receive-task target without boundary events.",
     "Receive-task target carrying a Timer boundary event."},
    {"FC-69", "5.1.69",
     "Message Intermediate Catch Events are used as alternative to Receive Tasks", kErr, kFC,
     "Event gateway targeting only receive tasks.",
     "Event gateway mixing a receive task and a message catch event."},
    {"FC-70", "5.1.70",
     "Target elements in an Event Gateway must not have other incoming Sequence Flow", kErr, kFC,
     "Gateway targets reached only from the gateway.",
     "Gateway target with an extra incoming flow from a task."},
    {"FC-71", "5.1.71",
     "A Parallel or Complex Gateway must not have outgoing Conditional Sequence Flow", kErr, kFC,
     "Parallel split with plain outgoing flows.",
     "Parallel split with a conditional outgoing flow."},
    {"FC-72", "5.1.72",
     "An Activity with multiple Conditional Sequence Flows must have at least two outgoing "
     "Sequence Flows",
     kErr, kFC, "Activity with two conditional branches and a default.",
     "Activity whose default flow coexists with an unconditional branch."},
    {"FC-73", "5.1.73",
     "A Compensation Activity must not have any incoming or outgoing Sequence Flow", kErr, kFC,
     "Compensation handler linked only by an association.",
     "Compensation handler with an outgoing sequence flow."},
    {"FC-74", "5.1.74",
     "A Compensation Activity must reside within the Process inherent to the compensated "
     "Activity",
     kErr, kFC, "Handler placed in the same process as the compensated activity.",
     "Handler placed in a different process than the compensated activity."},
    {"FC-75", "5.1.75", "A Receive Task must not have an outgoing Message Flow", kErr, kFC,
     "Receive task with incoming message flow only.",
     "Receive task used as a message-flow source."},
    {"FC-76", "5.1.76", "A Send Task must not have an incoming Message Flow", kErr, kFC,
     "Send task with outgoing message flow only.",
     "Send task used as a message-flow target."},
    {"FC-77", "5.1.77", "A Script or Manual Task must not have an incoming or an outgoing Message "
     "Flow", kErr, kFC, "Script task with no message flows.",
     "Manual task receiving a message flow."},
    {"FC-78", "5.1.78",
     "A Conditional Sequence Flow cannot be used if there is only one sequence flow goes out of "
     "the element",
     kErr, kFC, "Sole outgoing flow left unconditional.",
     "A task whose only outgoing flow carries a condition."},
    {"FC-79", "5.1.79", "Sequence Flows cannot cross the container boundaries", kErr, kFC,
     "Flows staying inside their sub-process.",
     "Flow from inside a sub-process to the parent process."},
    {"FC-80", "5.1.80", "The source and target of a Sequence Flow must not be the same", kErr, kFC,
     "Flow between two distinct nodes.", "Flow looping a task onto itself."},
    {"FC-81", "5.1.81",
     "A Message Flow can only have as source a Message End Event, Intermediate Throw Event, Send "
     "Task, User Task, Service Task, Subprocess or a \"black box\" pool",
     kErr, kFC, "Message flow sourced at a send task.",
     "Message flow sourced at a script task."},
    {"FC-82", "5.1.82",
     "A Message Flow can only go to a Message Start, Intermediate Catch Event, Boundary Event, "
     "Receive Task, User Task, or Service Task, Subprocess, or \"black box\" pool",
     kErr, kFC, "Message flow ending at a receive task.",
     "Message flow ending at a script task."},
    {"FC-83", "5.1.83",
     "A Message Flow must not be connected to the border of a \"white Box\" Pool", kErr, kFC,
     "Message flow connected to a black-box pool border.",
     "Message flow connected to the border of a pool with a visible process."},
    {"FC-84", "5.1.84",
     "A Message must be attached to a Message Flow or must be connected to an Association "
     "connected to a Message Flow, a Send Task a Receive Task, or a Message Event Definition",
     kErr, kFC, "Message definition referenced by a message flow.",
     "Message definition referenced by nothing."},
    {"FC-85", "5.1.85", "An Association should not connect two Text Annotations", kErr, kFC,
     "Association between a task and an annotation.",
     "Association between two text annotations."},

    {"DF-01", "5.2.1", "A reusable SubProcess has only self-contained data", kErr, kDF,
     "Called process reading only its own data objects.",
     "Called process reading a data store defined outside it."},
    {"DF-02", "5.2.2", "A Data Object must have at least one connected Data Association", kErr,
     kDF, "Data object written by a task's data association.",
     "Data object with no data association."},
    {"DF-03", "5.2.3", "A Data Store must have at least one connected Data Association", kErr, kDF,
     "Data store read through a data association.", "Data store with no data association."},
    {"DF-04", "5.2.4",
     "A Data Object Reference can only access a Data Object inside the same container or on its "
     "parent",
     kErr, kDF, "Reference to a data object of the enclosing process.",
     "Reference to a data object inside a sibling sub-process."},

    {"BP-01", "5.3.1", "Use 7 ± 2 Flow Nodes per diagram", kWarn, kBP,
     "Container with nine or fewer flow nodes.", "Container with twelve flow nodes."},
    {"BP-02", "5.3.2",
     "Use exclusively Send/Receive Task or Throw/Catch Message Intermediate Events", kWarn, kBP,
     "Process messaging only through send/receive tasks.",
     "Process mixing send tasks with message intermediate events."},
    {"BP-03", "5.3.3", "Use explicitly Start Events and End Events", kWarn, kBP,
     "Container with explicit start and end events.",
     "Container whose flow starts implicitly at a task."},
    {"BP-04", "5.3.4", "Use only one Start Event", kWarn, kBP,
     "Container with a single start event.", "Container with two start events."},
    {"BP-05", "5.3.5", "Use a Default Condition always a Conditional Sequence Flow is used", kWarn,
     kBP, "Activity with conditional branches plus a default flow.",
     "Activity with conditional branches and no default flow."},
    {"BP-06", "5.3.6", "Use a Timer Intermediate Event with an Event Gateway", kWarn, kBP,
     "Event gateway with a timer branch as timeout.",
     "Event gateway whose branches never include a timer."},
    {"BP-07", "5.3.7", "An Event should have at most one outgoing Sequence Flow", kWarn, kBP,
     "Events with a single outgoing flow.", "Start event with two outgoing flows."},
    {"BP-08", "5.3.8", "A Start Event should have a name", kWarn, kBP, "Start event named.",
     "Start event left unnamed."},
    {"BP-09", "5.3.9", "A Message Start Event should have an incoming Message Flow", kWarn, kBP,
     "Message start receiving a message flow.",
     "Message start with no incoming message flow."},
    {"BP-10", "5.3.10",
     "A Catching Intermediate Message Event should have an incoming Message flow", kWarn, kBP,
     "Message catch receiving a message flow.", "Message catch with no incoming message flow."},
    {"BP-11", "5.3.11",
     "A Throwing Intermediate Message Event should have an outgoing Message Flow", kWarn, kBP,
     "Message throw sending a message flow.", "Message throw with no outgoing message flow."},
    {"BP-12", "5.3.12", "An Intermediate Event must have a name", kWarn, kBP,
     "Named intermediate events.", "Unnamed timer intermediate event."},
    {"BP-13", "5.3.13", "An End Event should be labeled with the name of the end state", kWarn,
     kBP, "Two end events, both labeled.", "Two end events with one left unnamed."},
    {"BP-14", "5.3.14",
     "If a SubProcess is followed by a yes/no gateway, at least one End Event of the SubProcess "
     "should be labeled to match the gateway label",
     kWarn, kBP, "Sub-process end 'Approved' feeding a gateway branch 'Approved'.",
     "Sub-process ends unrelated to the question gateway's branch labels."},
    {"BP-15", "5.3.15", "Use a Default Condition in an Exclusive Gateway", kWarn, kBP,
     "Exclusive split with a default branch.", "Exclusive split without a default branch."},
    {"BP-16", "5.3.16", "Use a Default Condition at an Inclusive Gateway", kWarn, kBP,
     "Inclusive split with a default branch.", "Inclusive split without a default branch."},
    {"BP-17", "5.3.17", "Use a Default Condition in an Complex Gateway", kWarn, kBP,
     "Complex split with a default branch.", "Complex split without a default branch."},
    {"BP-18", "5.3.18", "Match merging and splitting Sequence Flow in Parallel Gateways", kWarn,
     kBP, "Parallel split of 2 matched by a parallel join of 2.",
     "Parallel split of 3 joined by a parallel join of 2."},
    {"BP-19", "5.3.19", "Match merging and splitting Inclusive Gateways", kWarn, kBP,
     "Inclusive split of 2 matched by an inclusive join of 2.",
     "Inclusive split of 3 joined by an inclusive join of 2."},
    {"BP-20", "5.3.20", "Use a Gateway as mediator when merging exclusive paths", kWarn, kBP,
     "Paths merged by a gateway before the end event.",
     "Two paths merging directly into one end event."},
    {"BP-21", "5.3.21", "Simultaneous merging and splitting Gateway should be avoid", kWarn, kBP,
     "Separate join and split gateways.", "One gateway with two incoming and two outgoing flows."},
    {"BP-22", "5.3.22",
     "An Exclusive Gateway should have at most one unnamed outgoing Sequence Flow", kWarn, kBP,
     "Exclusive split with labeled branches.",
     "Exclusive split with two unnamed branches."},
    {"BP-23", "5.3.23", "An Inclusive Gateway should have all outgoing Sequence Flow named", kWarn,
     kBP, "Inclusive split with every branch labeled.",
     "Inclusive split with an unlabeled branch."},
    {"BP-24", "5.3.24",
     "If a SubProcess is followed by a yes/no Gateway, at least one End Event of the SubProcess "
     "should be named to match the Gateway name",
     kWarn, kBP, "Every branch label of the question gateway matched by a sub-process end name.",
     "A gateway branch label matched by no end event of the sub-process."},
    {"BP-25", "5.3.25", "Activities should be named", kWarn, kBP, "All tasks labeled.",
     "A task without a name."},
    {"BP-26", "5.3.26", "Two Activities inside the same Process should not have the same name",
     kWarn, kBP, "Distinct task names within the process.",
     "Two tasks both named 'Review' in one process."},
    {"BP-27", "5.3.27", "A Send Task should have an outgoing Message Flow", kWarn, kBP,
     "Send task wired to a partner pool.", "Send task with no outgoing message flow."},
    {"BP-28", "5.3.28", "A Receive Task should have an incoming Message Flow", kWarn, kBP,
     "Receive task wired from a partner pool.", "Receive task with no incoming message flow."},
    {"BP-29", "5.3.29",
     "If a SubProcess is followed by a Gateway labeled as a question, it must have more than one "
     "End Event",
     kWarn, kBP, "Sub-process with two end states before a question gateway.",
     "Sub-process with a single end event before a question gateway."},
    {"BP-30", "5.3.30", "A Message Flow should be named with the name of the Message", kWarn, kBP,
     "Message flow named after its message definition.",
     "Message flow left unnamed."},
    {"BP-31", "5.3.31", "A Text Annotation should be connect by an Association", kWarn, kBP,
     "Annotation linked to a task by an association.",
     "Annotation floating with no association."},
    {"BP-32", "5.3.32",
     "An Association connected to a Text Annotation should have assigned none to the "
     "associationDirection property",
     kWarn, kBP, "Annotation association with direction None.",
     "Annotation association with a directed arrow."},
};

const std::map<std::string, const RuleDescriptor*>& index_by_id() {
  static const std::map<std::string, const RuleDescriptor*> idx = [] {
    std::map<std::string, const RuleDescriptor*> m;
    for (const RuleDescriptor& d : kCatalog) m.emplace(d.id, &d);
    return m;
  }();
  return idx;
}

}  // namespace

const std::vector<RuleDescriptor>& rule_catalog() { return kCatalog; }

const RuleDescriptor* find_rule(const std::string& id) {
  const auto& idx = index_by_id();
  auto it = idx.find(id);
  return it == idx.end() ? nullptr : it->second;
}

}  // namespace bpmnlint
