// Rule evaluation: every catalog check, grouped the way the catalog groups
// them.  All checks are pure functions of (model, graph indices, options).
#include "bpmnlint/rules.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <string>

namespace bpmnlint {
namespace {

// ---------------------------------------------------------------------------
// Small predicates
// ---------------------------------------------------------------------------

bool is_start(const FlowNode& n) {
  const Event* e = n.event();
  return e != nullptr && e->position == EventPosition::Start;
}
bool is_end(const FlowNode& n) {
  const Event* e = n.event();
  return e != nullptr && e->position == EventPosition::End;
}
bool is_boundary(const FlowNode& n) {
  const Event* e = n.event();
  return e != nullptr && e->position == EventPosition::Boundary;
}
bool is_icatch(const FlowNode& n) {
  const Event* e = n.event();
  return e != nullptr && e->position == EventPosition::IntermediateCatch;
}
bool is_ithrow(const FlowNode& n) {
  const Event* e = n.event();
  return e != nullptr && e->position == EventPosition::IntermediateThrow;
}
bool is_activity(const FlowNode& n) { return n.activity() != nullptr; }
bool is_gateway(const FlowNode& n) { return n.gateway() != nullptr; }

bool has_cond(const SequenceFlow& f) {
  return !f.is_default && f.condition_expression.has_value();
}

// Message / Multiple family, the triggers allowed to carry message flows.
bool is_messageish(TriggerKind t) {
  return t == TriggerKind::Message || t == TriggerKind::Multiple ||
         t == TriggerKind::ParallelMultiple;
}

bool is_esp_start(const FlowNode& n) {
  return is_start(n) && n.container != nullptr && n.container->owner != nullptr &&
         is_event_subprocess(*n.container->owner);
}

// Inside an ad-hoc sub-process body (directly).
bool in_adhoc(const FlowNode& n) {
  const Container* c = n.container;
  return c != nullptr && c->owner != nullptr && c->owner->activity() != nullptr &&
         c->owner->activity()->kind == ActivityKind::AdHocSubProcess;
}

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Link-event matching name: the link definition's name, falling back to the
// element label so hand-built fixtures behave like diagram labels.
std::string link_name(const FlowNode& n) {
  const Event* e = n.event();
  if (e != nullptr && !trimmed(e->trigger_name).empty()) return trimmed(e->trigger_name);
  return trimmed(n.name);
}

// Error/escalation/signal matching key: the referenced definition's name.
std::string trigger_key(const FlowNode& n) {
  const Event* e = n.event();
  return e == nullptr ? std::string() : trimmed(e->trigger_name);
}

// ---------------------------------------------------------------------------
// Diagnostic sink
// ---------------------------------------------------------------------------

struct Ctx {
  const BpmnModel& m;
  const GraphIndex& g;
  const RuleOptions& opt;
  const std::function<bool(const std::string&)>& enabled;
  std::vector<Diagnostic> out;

  bool on(const char* id) const { return enabled(id); }

  void emit(const char* id, const std::string& element_id, const std::string& element_name,
            std::vector<std::string> path, const std::string& detail) {
    if (!enabled(id)) return;
    const RuleDescriptor* d = find_rule(id);
    Diagnostic diag;
    diag.rule_id = id;
    diag.severity = d != nullptr ? d->default_severity : Severity::Error;
    std::string msg = d != nullptr ? d->title : std::string(id);
    if (!detail.empty()) msg += " (" + detail + ")";
    if (msg.size() > 200) msg.resize(200);
    diag.message = msg;
    diag.element_id = element_id;
    diag.element_name = element_name;
    diag.container_path = std::move(path);
    out.push_back(std::move(diag));
  }

  void add(const char* id, const FlowNode& n, const std::string& detail = "") {
    std::vector<std::string> path;
    if (n.container != nullptr) path = container_path(*n.container);
    emit(id, n.id, trimmed(n.name), std::move(path), detail);
  }
  void add(const char* id, const SequenceFlow& f, const std::string& detail = "") {
    std::vector<std::string> path;
    if (f.container != nullptr) path = container_path(*f.container);
    emit(id, f.id, trimmed(f.name), std::move(path), detail);
  }
  void add(const char* id, const MessageFlow& f, const std::string& detail = "") {
    emit(id, f.id, trimmed(f.name), {}, detail);
  }
  void add(const char* id, const Container& c, const std::string& detail = "") {
    emit(id, c.id(), c.display_name(), container_path(c), detail);
  }
  void add(const char* id, const ProcessDef& p, const std::string& detail = "") {
    std::vector<std::string> path;
    if (p.root != nullptr) path = container_path(*p.root);
    emit(id, p.id, trimmed(p.name), std::move(path), detail);
  }
  void add(const char* id, const Artifact& a, const std::string& detail = "") {
    std::vector<std::string> path;
    if (a.container != nullptr) path = container_path(*a.container);
    emit(id, a.id, trimmed(a.name), std::move(path), detail);
  }
  void add(const char* id, const DataElement& d, const std::string& detail = "") {
    std::vector<std::string> path;
    if (d.container != nullptr) path = container_path(*d.container);
    emit(id, d.id, trimmed(d.name), std::move(path), detail);
  }
  void add(const char* id, const Definition& d, const std::string& detail = "") {
    emit(id, d.id, trimmed(d.name), {}, detail);
  }
};

// Compensation handler wiring: associations pairing a compensation boundary
// event with an activity.
struct CompLink {
  const FlowNode* boundary = nullptr;
  const FlowNode* handler = nullptr;
};

std::vector<CompLink> compensation_links(const BpmnModel& m) {
  std::vector<CompLink> links;
  for (const Artifact& a : m.artifacts) {
    if (a.kind != ArtifactKind::Association) continue;
    const FlowNode* s = a.source.node;
    const FlowNode* t = a.target.node;
    if (s == nullptr || t == nullptr) continue;
    auto comp_boundary = [](const FlowNode* n) {
      return is_boundary(*n) && n->event()->trigger == TriggerKind::Compensation;
    };
    if (comp_boundary(s) && is_activity(*t)) links.push_back({s, t});
    else if (comp_boundary(t) && is_activity(*s)) links.push_back({t, s});
  }
  return links;
}

// Error/escalation catches visible to a throw raised inside `c`: boundary
// events of enclosing activities plus matching event-subprocess starts in `c`
// or its ancestors, nearest scope first.
std::vector<const FlowNode*> catches_in_scope(const Container* c, TriggerKind t) {
  std::vector<const FlowNode*> found;
  for (const Container* cur = c; cur != nullptr; cur = cur->parent) {
    for (const FlowNode* n : cur->nodes) {
      if (!is_event_subprocess(*n)) continue;
      const Container* body = n->activity()->body;
      if (body == nullptr) continue;
      for (const FlowNode* s : body->nodes) {
        if (is_start(*s) && s->event()->trigger == t) found.push_back(s);
      }
    }
    if (cur->owner != nullptr && cur->owner->activity() != nullptr) {
      for (const FlowNode* b : cur->owner->activity()->boundary_events) {
        if (b->event()->trigger == t) found.push_back(b);
      }
    }
  }
  return found;
}

// A throw with no enclosing activity and no matching event sub-process in its
// own container escalates to the environment; matching rules skip it.
bool throw_is_catchable(const Container* c, TriggerKind t) {
  if (c == nullptr) return false;
  if (c->owner != nullptr) return true;
  for (const FlowNode* n : c->nodes) {
    if (!is_event_subprocess(*n)) continue;
    const Container* body = n->activity()->body;
    if (body == nullptr) continue;
    for (const FlowNode* s : body->nodes) {
      if (is_start(*s) && s->event()->trigger == t) return true;
    }
  }
  return false;
}

// All throw events of trigger `t` in `c` and every nested container.
std::vector<const FlowNode*> throws_below(const GraphIndex& g, const Container& c,
                                          TriggerKind t, bool ends_only) {
  std::vector<const FlowNode*> found;
  for (const FlowNode* n : g.descendants(c, true)) {
    const Event* e = n->event();
    if (e == nullptr || e->trigger != t) continue;
    if (e->position == EventPosition::End ||
        (!ends_only && e->position == EventPosition::IntermediateThrow)) {
      found.push_back(n);
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Collaboration / process level
// ---------------------------------------------------------------------------

void check_collaboration(Ctx& c) {
  if (c.m.collaborations.empty()) return;
  std::set<const ProcessDef*> bound;
  for (const Participant& p : c.m.participants) {
    if (p.process != nullptr) bound.insert(p.process);
  }
  int implicit = 0;
  for (const ProcessDef& p : c.m.processes) {
    if (bound.count(&p) == 0) ++implicit;
  }
  if (implicit > 1) {
    const Collaboration& collab = c.m.collaborations.front();
    c.emit("FC-01", collab.id, trimmed(collab.name), {},
           std::to_string(implicit) + " processes without a participant");
  }
}

const ProcessDef* endpoint_process(const MsgEndpoint& e) {
  if (e.pool != nullptr) return e.pool->process;
  if (e.node != nullptr && e.node->container != nullptr) {
    return root_process(*e.node->container);
  }
  return nullptr;
}

void check_process(Ctx& c) {
  // FC-02: declared abstractions.
  for (const auto& [abstract_name, detailed_name] : c.opt.abstraction_pairs) {
    const ProcessDef* abs = nullptr;
    const ProcessDef* det = nullptr;
    for (const ProcessDef& p : c.m.processes) {
      if (trimmed(p.name) == abstract_name || p.id == abstract_name) abs = &p;
      if (trimmed(p.name) == detailed_name || p.id == detailed_name) det = &p;
    }
    if (abs == nullptr || det == nullptr) continue;  // validated by the engine
    auto totals = [&](const ProcessDef& p) {
      int nodes = 0, flows = 0, subs = 0;
      for (const Container* cc : c.g.containers_of(p)) {
        nodes += static_cast<int>(cc->nodes.size());
        flows += static_cast<int>(cc->flows.size());
        for (const FlowNode* n : cc->nodes) {
          if (n->activity() != nullptr && is_subprocess_kind(n->activity()->kind)) ++subs;
        }
      }
      int in = 0, out = 0;
      for (const MessageFlow& f : c.m.message_flows) {
        if (endpoint_process(f.target) == &p) ++in;
        if (endpoint_process(f.source) == &p) ++out;
      }
      return std::array<int, 5>{nodes, flows, in, out, subs};
    };
    auto a = totals(*abs);
    auto d = totals(*det);
    bool ok = a[0] <= d[0] && a[1] <= d[1] && a[2] <= d[2] && a[3] <= d[3] && a[4] >= d[4];
    if (!ok) {
      c.add("FC-02", *abs, "not an abstraction of '" + detailed_name + "'");
    }
  }

  for (const ProcessDef& p : c.m.processes) {
    // FC-03.
    if (p.process_type == ProcessType::Public && p.is_executable == true) {
      c.add("FC-03", p);
    }
    // FC-04: top-level start trigger whitelist.
    static const std::set<TriggerKind> allowed = {
        TriggerKind::None,   TriggerKind::Message,  TriggerKind::Timer,
        TriggerKind::Conditional, TriggerKind::Signal, TriggerKind::Multiple,
        TriggerKind::ParallelMultiple};
    if (p.root != nullptr) {
      for (const FlowNode* n : p.root->nodes) {
        if (is_start(*n) && allowed.count(n->event()->trigger) == 0) {
          c.add("FC-04", *n, trigger_name_str(n->event()->trigger));
        }
      }
    }
  }

  // FC-05.
  for (const FlowNode& n : c.m.nodes) {
    const Activity* a = n.activity();
    if (a == nullptr || a->kind != ActivityKind::CallActivity) continue;
    if (a->called_process == nullptr || a->called_process->root == nullptr) continue;
    bool any_start = false, any_none = false;
    for (const FlowNode* s : a->called_process->root->nodes) {
      if (!is_start(*s)) continue;
      any_start = true;
      if (s->event()->trigger == TriggerKind::None) any_none = true;
    }
    if (any_start && !any_none) {
      c.add("FC-05", n, "called process has no None start event");
    }
  }
}

void check_subprocess(Ctx& c) {
  for (const FlowNode& n : c.m.nodes) {
    const Activity* a = n.activity();
    if (a == nullptr || !is_subprocess_kind(a->kind) || a->body == nullptr) continue;
    const Container& body = *a->body;

    if (is_event_subprocess(n)) {
      // FC-08 / FC-09.
      std::vector<const FlowNode*> starts;
      for (const FlowNode* s : body.nodes) {
        if (is_start(*s)) starts.push_back(s);
      }
      if (starts.size() != 1) {
        c.add("FC-08", n, std::to_string(starts.size()) + " start events");
      } else if (starts[0]->event()->trigger == TriggerKind::None) {
        c.add("FC-08", *starts[0], "untyped start event");
      }
      if (!n.incoming.empty() || !n.outgoing.empty()) c.add("FC-09", n);
      continue;
    }

    // FC-07: at most one start, and None-triggered.
    int starts = 0;
    for (const FlowNode* s : body.nodes) {
      if (!is_start(*s)) continue;
      ++starts;
      if (s->event()->trigger != TriggerKind::None) {
        c.add("FC-07", *s, "typed start event in a sub-process");
      }
    }
    if (starts > 1) c.add("FC-07", n, std::to_string(starts) + " start events");

    // FC-06: collapsed vs detailed message-flow partners.  Only comparable
    // when the sub-process element itself carries message flows.
    MessagePartners own = c.g.message_partners(n);
    if (!own.in_partners.empty() || !own.out_partners.empty()) {
      MessagePartners inner;
      for (const FlowNode* d : c.g.descendants(body, true)) {
        MessagePartners mp = c.g.message_partners(*d);
        inner.in_partners.insert(mp.in_partners.begin(), mp.in_partners.end());
        inner.out_partners.insert(mp.out_partners.begin(), mp.out_partners.end());
      }
      if (own.in_partners != inner.in_partners || own.out_partners != inner.out_partners) {
        c.add("FC-06", n, "message-flow partners differ between views");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Connectivity and degrees
// ---------------------------------------------------------------------------

void check_connectivity(Ctx& c) {
  for (const Container* cc : c.g.all_containers()) {
    bool has_start = false, has_end = false;
    for (const FlowNode* n : cc->nodes) {
      if (is_start(*n)) has_start = true;
      if (is_end(*n)) has_end = true;
    }

    for (const FlowNode* n : cc->nodes) {
      size_t in = n->incoming.size();
      size_t out = n->outgoing.size();

      bool isolation_exempt = is_event_subprocess(*n) || is_compensation_activity(*n) ||
                              is_boundary(*n) || in_adhoc(*n);
      if (has_start && has_end && in == 0 && out == 0 && !isolation_exempt) {
        c.add("FC-10", *n);
        c.add("FC-11", *n);
      }

      // FC-26/27: implicit vs explicit starts and ends.
      bool degree_exempt = is_event_subprocess(*n) || is_compensation_activity(*n) ||
                           is_boundary(*n) || in_adhoc(*n) || n->event() != nullptr;
      if (!degree_exempt) {
        if (has_start && in == 0) {
          if (is_activity(*n)) c.add("FC-26", *n);
          c.add("FC-27", *n, "no incoming sequence flow");
        }
        if (has_end && out == 0) {
          c.add("FC-27", *n, "no outgoing sequence flow");
        }
      }

      if (is_start(*n) && in > 0) c.add("FC-13", *n);
      if (is_end(*n) && out > 0) c.add("FC-14", *n);

      // FC-25: intermediate events in normal flow need both sides; link
      // events are exempt on their pass-through side.
      if (is_icatch(*n) || is_ithrow(*n)) {
        bool link = n->event()->trigger == TriggerKind::Link;
        bool need_in = !(link && is_icatch(*n));
        bool need_out = !(link && is_ithrow(*n));
        if ((need_in && in == 0) || (need_out && out == 0)) c.add("FC-25", *n);
        // FC-57: the throw-typed variant of the same obligation.
        if (is_ithrow(*n) && ((in == 0) || (need_out && out == 0))) c.add("FC-57", *n);
      }

      if (is_boundary(*n)) {
        if (in > 0) c.add("FC-56", *n);
        if (n->event()->trigger != TriggerKind::Compensation && out != 1) {
          c.add("FC-55", *n, std::to_string(out) + " outgoing flows");
        }
      }
    }

    // FC-28: explicit starts and explicit ends come together.
    bool adhoc_body = cc->owner != nullptr && cc->owner->activity() != nullptr &&
                      cc->owner->activity()->kind == ActivityKind::AdHocSubProcess;
    if (!cc->nodes.empty() && !adhoc_body && has_start != has_end) {
      c.add("FC-28", *cc, has_start ? "no end event" : "no start event");
    }
  }
}

void check_event_typing(Ctx& c) {
  using T = TriggerKind;
  static const std::set<T> esp_start_int = {T::Cancel, T::None, T::Link, T::Terminate};
  static const std::set<T> esp_start_non = {T::Cancel, T::None, T::Link, T::Terminate,
                                            T::Error, T::Compensation};
  static const std::set<T> boundary_int = {T::None, T::Link, T::Terminate};
  static const std::set<T> boundary_non = {T::None, T::Link, T::Terminate, T::Cancel,
                                           T::Error, T::Compensation};
  static const std::set<T> icatch_bad = {T::None, T::Error, T::Escalation, T::Cancel,
                                         T::Terminate, T::Compensation};
  static const std::set<T> ithrow_bad = {T::Cancel, T::Timer, T::Error, T::Terminate,
                                         T::ParallelMultiple, T::Conditional};
  static const std::set<T> end_bad = {T::Timer, T::Conditional, T::Link, T::ParallelMultiple};

  for (const FlowNode& n : c.m.nodes) {
    const Event* e = n.event();
    if (e == nullptr) continue;
    const std::set<T>* bad = nullptr;
    switch (e->position) {
      case EventPosition::Start:
        if (is_esp_start(n)) bad = e->interrupting ? &esp_start_int : &esp_start_non;
        break;
      case EventPosition::Boundary:
        bad = e->interrupting ? &boundary_int : &boundary_non;
        break;
      case EventPosition::IntermediateCatch: bad = &icatch_bad; break;
      case EventPosition::IntermediateThrow: bad = &ithrow_bad; break;
      case EventPosition::End: bad = &end_bad; break;
    }
    if (bad != nullptr && bad->count(e->trigger) > 0) {
      c.add("FC-12", n, std::string(trigger_name_str(e->trigger)) + " not allowed here");
    }

    if (is_start(n) && !e->interrupting && !is_esp_start(n)) c.add("FC-29", n);
    if (is_icatch(n) && e->trigger == T::Error) c.add("FC-30", n);
    if (is_ithrow(n) && e->trigger == T::Error) c.add("FC-35", n);
    if (is_icatch(n) && e->trigger == T::Escalation) c.add("FC-36", n);
  }
}

void check_event_message_flows(Ctx& c) {
  for (const FlowNode& n : c.m.nodes) {
    const Event* e = n.event();
    if (e == nullptr) continue;
    size_t in_msgs = c.g.incoming_messages(n).size();
    size_t out_msgs = c.g.outgoing_messages(n).size();
    if (is_catch_event(*e)) {
      if (in_msgs > 0 && !is_messageish(e->trigger)) {
        c.add("FC-15", n, trigger_name_str(e->trigger));
      }
      if (in_msgs > 1 && e->trigger == TriggerKind::Message) c.add("FC-16", n);
      if (out_msgs > 0) c.add("FC-17", n);
    } else if (is_throw_event(*e)) {
      if (out_msgs > 0 && !is_messageish(e->trigger)) {
        c.add("FC-18", n, trigger_name_str(e->trigger));
      }
      if (out_msgs > 1 && e->trigger == TriggerKind::Message) c.add("FC-19", n);
      if (in_msgs > 0) c.add("FC-20", n);
    }
  }
}

void check_link_events(Ctx& c) {
  for (const Container* cc : c.g.all_containers()) {
    std::vector<const FlowNode*> catches, throws;
    for (const FlowNode* n : cc->nodes) {
      const Event* e = n->event();
      if (e == nullptr || e->trigger != TriggerKind::Link) continue;
      if (is_icatch(*n)) catches.push_back(n);
      if (is_ithrow(*n)) throws.push_back(n);
    }
    if (catches.empty() && throws.empty()) continue;

    for (const FlowNode* n : catches) {
      if (n->outgoing.empty()) c.add("FC-21", *n, "catch link without outgoing flow");
      if (!n->incoming.empty()) c.add("FC-21", *n, "catch link with incoming flow");
      if (link_name(*n).empty()) c.add("FC-23", *n);
    }
    for (const FlowNode* n : throws) {
      if (n->incoming.empty()) c.add("FC-21", *n, "throw link without incoming flow");
      if (!n->outgoing.empty()) c.add("FC-21", *n, "throw link with outgoing flow");
      if (link_name(*n).empty()) c.add("FC-23", *n);
    }

    // FC-22: one catch per name.
    std::map<std::string, int> catch_names;
    for (const FlowNode* n : catches) {
      std::string name = link_name(*n);
      if (!name.empty()) ++catch_names[name];
    }
    for (const FlowNode* n : catches) {
      std::string name = link_name(*n);
      if (!name.empty() && catch_names[name] > 1) c.add("FC-22", *n, "duplicate '" + name + "'");
    }

    // FC-24: names pair up within the container.
    std::set<std::string> throw_names, catch_set;
    for (const FlowNode* n : throws) {
      if (!link_name(*n).empty()) throw_names.insert(link_name(*n));
    }
    for (const FlowNode* n : catches) {
      if (!link_name(*n).empty()) catch_set.insert(link_name(*n));
    }
    for (const FlowNode* n : throws) {
      std::string name = link_name(*n);
      if (!name.empty() && catch_set.count(name) == 0) c.add("FC-24", *n);
    }
    for (const FlowNode* n : catches) {
      std::string name = link_name(*n);
      if (!name.empty() && throw_names.count(name) == 0) c.add("FC-24", *n);
    }
  }
}

// ---------------------------------------------------------------------------
// Error / escalation / signal matching
// ---------------------------------------------------------------------------

void check_error_escalation(Ctx& c) {
  for (const FlowNode& n : c.m.nodes) {
    const Event* e = n.event();
    if (e == nullptr) continue;

    // Boundary error/escalation catches must start an exception flow.
    if (is_boundary(n) && e->trigger == TriggerKind::Error && n.outgoing.empty()) {
      c.add("FC-31", n);
    }
    if (is_boundary(n) && e->trigger == TriggerKind::Escalation && n.outgoing.empty()) {
      c.add("FC-37", n);
    }

    // FC-32: thrown errors need a catch in scope.
    if (is_end(n) && e->trigger == TriggerKind::Error &&
        throw_is_catchable(n.container, TriggerKind::Error)) {
      std::string key = trigger_key(n);
      bool matched = false;
      for (const FlowNode* cat : catches_in_scope(n.container, TriggerKind::Error)) {
        std::string ck = trigger_key(*cat);
        if (ck.empty() || ck == key) { matched = true; break; }
      }
      if (!matched) c.add("FC-32", n, key.empty() ? "no unnamed catch" : "'" + key + "' uncaught");
    }

    // FC-38/41/42: escalation throws.
    if ((is_end(n) || is_ithrow(n)) && e->trigger == TriggerKind::Escalation &&
        throw_is_catchable(n.container, TriggerKind::Escalation)) {
      std::string key = trigger_key(n);
      std::vector<const FlowNode*> matches;
      for (const FlowNode* cat : catches_in_scope(n.container, TriggerKind::Escalation)) {
        std::string ck = trigger_key(*cat);
        if (ck.empty() || ck == key) matches.push_back(cat);
      }
      if (matches.empty()) {
        c.add("FC-38", n, key.empty() ? "no unnamed catch" : "'" + key + "' uncaught");
      } else if (is_end(n)) {
        bool any_int = std::any_of(matches.begin(), matches.end(), [](const FlowNode* cat) {
          return cat->event()->interrupting;
        });
        if (!any_int) c.add("FC-41", n);
      } else {
        bool any_non = std::any_of(matches.begin(), matches.end(), [](const FlowNode* cat) {
          return !cat->event()->interrupting;
        });
        if (!any_non) c.add("FC-42", n);
      }
    }
  }

  // FC-33/FC-43: named catches need a matching throw in the scope they guard.
  auto guarded_scope = [&](const FlowNode& cat) -> const Container* {
    const Event* e = cat.event();
    if (is_boundary(cat) && e->attached_to != nullptr &&
        e->attached_to->activity() != nullptr) {
      return e->attached_to->activity()->body;  // null for plain tasks
    }
    if (is_esp_start(cat)) return cat.container->owner->container;
    return nullptr;
  };
  for (const FlowNode& n : c.m.nodes) {
    const Event* e = n.event();
    if (e == nullptr) continue;
    bool err_catch = (is_boundary(n) || is_esp_start(n)) && e->trigger == TriggerKind::Error;
    bool esc_catch = (is_boundary(n) || is_esp_start(n)) && e->trigger == TriggerKind::Escalation;
    if (!err_catch && !esc_catch) continue;
    std::string key = trigger_key(n);
    if (key.empty()) continue;
    const Container* scope = guarded_scope(n);
    if (scope == nullptr) continue;  // nothing inspectable (boundary on a task)
    bool matched = false;
    for (const FlowNode* thr : throws_below(c.g, *scope, e->trigger, err_catch)) {
      if (trigger_key(*thr) == key) { matched = true; break; }
    }
    if (!matched) c.add(err_catch ? "FC-33" : "FC-43", n, "'" + key + "' never thrown");
  }

  // FC-34/39/40: named and unnamed catches must not be mixed per activity.
  for (const FlowNode& n : c.m.nodes) {
    const Activity* a = n.activity();
    if (a == nullptr || a->boundary_events.empty()) continue;
    auto mixed = [&](TriggerKind t, int want_interrupting) {
      bool named = false, unnamed = false;
      for (const FlowNode* b : a->boundary_events) {
        const Event* e = b->event();
        if (e->trigger != t) continue;
        if (want_interrupting >= 0 && e->interrupting != (want_interrupting == 1)) continue;
        (trigger_key(*b).empty() ? unnamed : named) = true;
      }
      return named && unnamed;
    };
    if (mixed(TriggerKind::Error, -1)) c.add("FC-34", n);
    if (mixed(TriggerKind::Escalation, 1)) c.add("FC-39", n);
    if (mixed(TriggerKind::Escalation, 0)) c.add("FC-40", n);
  }
}

void check_signal(Ctx& c) {
  std::vector<const FlowNode*> throws, catches;
  for (const FlowNode& n : c.m.nodes) {
    const Event* e = n.event();
    if (e == nullptr || e->trigger != TriggerKind::Signal) continue;
    if (is_throw_event(*e)) throws.push_back(&n);
    if (is_catch_event(*e)) catches.push_back(&n);
  }
  for (const FlowNode* t : throws) {
    std::string key = trigger_key(*t);
    bool matched = std::any_of(catches.begin(), catches.end(), [&](const FlowNode* cat) {
      std::string ck = trigger_key(*cat);
      return ck.empty() || ck == key;
    });
    if (!matched) c.add("FC-44", *t, key.empty() ? "" : "'" + key + "' uncaught");
  }
  for (const FlowNode* cat : catches) {
    std::string key = trigger_key(*cat);
    if (key.empty()) continue;
    bool matched = std::any_of(throws.begin(), throws.end(), [&](const FlowNode* t) {
      return trigger_key(*t) == key;
    });
    if (!matched) c.add("FC-45", *cat, "'" + key + "' never thrown");
  }
}

// ---------------------------------------------------------------------------
// Transactions and compensation
// ---------------------------------------------------------------------------

void check_transaction_compensation(Ctx& c) {
  std::vector<CompLink> links = compensation_links(c.m);

  for (const FlowNode& n : c.m.nodes) {
    const Event* e = n.event();
    if (e != nullptr) {
      bool on_transaction = is_boundary(n) && e->attached_to != nullptr &&
                            e->attached_to->activity() != nullptr &&
                            e->attached_to->activity()->kind == ActivityKind::Transaction;

      // FC-46 both ways: Cancel catches only on transaction boundaries, and
      // transaction boundaries carry only Cancel (or Compensation handlers).
      if (e->trigger == TriggerKind::Cancel && (is_icatch(n) || is_boundary(n)) &&
          !on_transaction) {
        c.add("FC-46", n, "Cancel catch outside a transaction boundary");
      }
      if (on_transaction && e->trigger != TriggerKind::Cancel &&
          e->trigger != TriggerKind::Compensation) {
        c.add("FC-46", n, std::string(trigger_name_str(e->trigger)) + " boundary on a transaction");
      }

      // FC-47(a): a Cancel boundary needs a Cancel end somewhere inside.
      if (on_transaction && e->trigger == TriggerKind::Cancel) {
        const Container* body = e->attached_to->activity()->body;
        bool found = false;
        if (body != nullptr) {
          for (const FlowNode* d : c.g.descendants(*body, true)) {
            if (is_end(*d) && d->event()->trigger == TriggerKind::Cancel) { found = true; break; }
          }
        }
        if (!found) c.add("FC-47", n, "no Cancel end event inside the transaction");
      }

      // FC-47(b): Cancel ends only inside transactions.
      if (is_end(n) && e->trigger == TriggerKind::Cancel) {
        bool inside = false;
        for (const Container* cc = n.container; cc != nullptr; cc = cc->parent) {
          if (cc->owner != nullptr && cc->owner->activity() != nullptr &&
              cc->owner->activity()->kind == ActivityKind::Transaction) {
            inside = true;
            break;
          }
        }
        if (!inside) c.add("FC-47", n, "Cancel end outside any transaction");
      }

      // FC-49: no compensation throws inside transactions.
      if ((is_end(n) || is_ithrow(n)) && e->trigger == TriggerKind::Compensation) {
        for (const Container* cc = n.container; cc != nullptr; cc = cc->parent) {
          if (cc->owner != nullptr && cc->owner->activity() != nullptr &&
              cc->owner->activity()->kind == ActivityKind::Transaction) {
            c.add("FC-49", n);
            break;
          }
        }
      }

      // FC-51: a named compensation throw must match a compensated activity.
      if ((is_end(n) || is_ithrow(n)) && e->trigger == TriggerKind::Compensation) {
        std::string key = trimmed(n.name);
        bool resolved_ok = false, any_target = false;
        if (!e->activity_ref.empty()) {
          any_target = true;
          auto ref = resolve(c.m, e->activity_ref);
          if (ref.has_value()) {
            if (auto* const* fn = std::get_if<FlowNode*>(&*ref)) {
              const Activity* a = (*fn)->activity();
              if (a != nullptr) {
                resolved_ok = std::any_of(
                    a->boundary_events.begin(), a->boundary_events.end(),
                    [](const FlowNode* b) {
                      return b->event()->trigger == TriggerKind::Compensation;
                    });
              }
            }
          }
        } else if (!key.empty()) {
          any_target = true;
          for (const Container* cc = n.container; cc != nullptr && !resolved_ok;
               cc = cc->parent) {
            for (const FlowNode* cand : cc->nodes) {
              const Activity* a = cand->activity();
              if (a == nullptr || trimmed(cand->name) != key) continue;
              if (std::any_of(a->boundary_events.begin(), a->boundary_events.end(),
                              [](const FlowNode* b) {
                                return b->event()->trigger == TriggerKind::Compensation;
                              })) {
                resolved_ok = true;
                break;
              }
            }
          }
        }
        if (any_target && !resolved_ok) {
          c.add("FC-51", n, key.empty() ? "" : "'" + key + "' has no compensation handler");
        }
      }
    }

    // FC-48: several ends in a transaction require a Terminate end.
    const Activity* a = n.activity();
    if (a != nullptr && a->kind == ActivityKind::Transaction && a->body != nullptr) {
      int ends = 0;
      bool terminate = false;
      for (const FlowNode* d : a->body->nodes) {
        if (!is_end(*d)) continue;
        ++ends;
        if (d->event()->trigger == TriggerKind::Terminate) terminate = true;
      }
      if (ends > 1 && !terminate) c.add("FC-48", n);
    }

    // FC-50/FC-73: compensation activities.
    if (a != nullptr && a->is_for_compensation) {
      int assoc = 0;
      for (const CompLink& l : links) {
        if (l.handler == &n) ++assoc;
      }
      bool in_comp_esp = false;
      for (const Container* cc = n.container; cc != nullptr; cc = cc->parent) {
        if (cc->owner == nullptr || !is_event_subprocess(*cc->owner)) continue;
        const Container* body = cc->owner->activity()->body;
        for (const FlowNode* s : body->nodes) {
          if (is_start(*s) && s->event()->trigger == TriggerKind::Compensation) {
            in_comp_esp = true;
          }
        }
      }
      if (assoc == 0 && !in_comp_esp) c.add("FC-50", n, "no compensation hookup");
      if (!n.incoming.empty() || !n.outgoing.empty()) {
        c.add("FC-73", n, "sequence flows on a compensation activity");
      }
      if (assoc > 1) c.add("FC-73", n, std::to_string(assoc) + " compensation associations");
    }
  }

  // FC-74: handler and compensated activity share a process.
  for (const CompLink& l : links) {
    const Event* be = l.boundary->event();
    if (be->attached_to == nullptr) continue;
    const Container* hc = effective_container(*l.handler);
    const Container* ac = effective_container(*be->attached_to);
    if (hc == nullptr || ac == nullptr) continue;
    if (root_process(*hc) != root_process(*ac)) {
      c.add("FC-74", *l.handler, "handler in a different process");
    }
  }
}

// ---------------------------------------------------------------------------
// Exception-flow merges
// ---------------------------------------------------------------------------

void check_exception_merge(Ctx& c) {
  if (!c.on("FC-52") && !c.on("FC-53")) return;
  for (const FlowNode& b : c.m.nodes) {
    if (!is_boundary(b) || b.outgoing.empty()) continue;
    bool interrupting = b.event()->interrupting;
    std::set<const FlowNode*> visited, reported;
    std::vector<const SequenceFlow*> stack(b.outgoing.begin(), b.outgoing.end());
    while (!stack.empty()) {
      const SequenceFlow* f = stack.back();
      stack.pop_back();
      if (f->target == nullptr || c.g.flow_class(*f) != FlowClass::Exception) continue;
      const FlowNode* t = f->target;
      bool merges_normal = std::any_of(
          t->incoming.begin(), t->incoming.end(), [&](const SequenceFlow* other) {
            return other != f && c.g.flow_class(*other) == FlowClass::Normal;
          });
      if (merges_normal) {
        const Gateway* gw = t->gateway();
        GatewayKind want = interrupting ? GatewayKind::Exclusive : GatewayKind::Inclusive;
        if (gw != nullptr && gw->kind != want && reported.insert(t).second) {
          c.add(interrupting ? "FC-52" : "FC-53", *t,
                "exception path from '" + (trimmed(b.name).empty() ? b.id : trimmed(b.name)) +
                    "'");
        }
        continue;  // past the merge the flow is normal again
      }
      if (visited.insert(t).second) {
        for (const SequenceFlow* nf : t->outgoing) stack.push_back(nf);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Conditional flows
// ---------------------------------------------------------------------------

void check_conditional_flows(Ctx& c) {
  for (const SequenceFlow& f : c.m.flows) {
    if (f.source == nullptr) continue;
    if (has_cond(f)) {
      if (f.source->event() != nullptr) c.add("FC-54", f);
      const Gateway* gw = f.source->gateway();
      if (gw != nullptr && gw->kind == GatewayKind::EventBased) c.add("FC-65", f);
      if (gw != nullptr &&
          (gw->kind == GatewayKind::Parallel || gw->kind == GatewayKind::Complex)) {
        c.add("FC-71", f);
      }
      if (f.source->outgoing.size() == 1) c.add("FC-78", f);
    }
  }

  // FC-66: exclusive/inclusive splits need conditions on non-default branches.
  for (const FlowNode& n : c.m.nodes) {
    const Gateway* gw = n.gateway();
    if (gw == nullptr || n.outgoing.size() < 2) continue;
    if (gw->kind != GatewayKind::Exclusive && gw->kind != GatewayKind::Inclusive) continue;
    for (const SequenceFlow* f : n.outgoing) {
      if (!f->is_default && !f->condition_expression.has_value()) c.add("FC-66", *f);
    }
  }
}

// ---------------------------------------------------------------------------
// Gateway structure
// ---------------------------------------------------------------------------

void check_gateway_structure(Ctx& c) {
  for (const FlowNode& n : c.m.nodes) {
    const Gateway* gw = n.gateway();
    if (gw == nullptr) continue;
    size_t in = n.incoming.size();
    size_t out = n.outgoing.size();

    if (in <= 1 && out <= 1) c.add("FC-61", n);
    if (gw->direction == GatewayDirection::Converging && in <= 1) c.add("FC-62", n);
    if (gw->direction == GatewayDirection::Diverging && out <= 1) c.add("FC-63", n);

    // FC-58/FC-59: join classification against the token analysis.
    if (in >= 2 && (c.on("FC-58") || c.on("FC-59")) &&
        (gw->kind == GatewayKind::Parallel || gw->kind == GatewayKind::Exclusive)) {
      JoinClassification cls = c.g.classify_incoming(n);
      if (!cls.skipped) {
        if (gw->kind == GatewayKind::Parallel && cls.decided &&
            cls.has_non_co_markable_pair()) {
          c.add("FC-58", n, "some incoming flows can never be marked together");
        }
        if (gw->kind == GatewayKind::Exclusive &&
            (!cls.decided || cls.has_co_markable_pair())) {
          c.add("FC-59", n, "incoming flows can carry tokens concurrently");
        }
      }
    }

    // FC-60: data-based exclusive split shape.
    if (gw->kind == GatewayKind::Exclusive && out >= 2) {
      bool all_cond = true, any_cond = false, all_event_style = true;
      for (const SequenceFlow* f : n.outgoing) {
        if (f->is_default) continue;
        if (f->condition_expression.has_value()) any_cond = true;
        else all_cond = false;
        const FlowNode* t = f->target;
        bool event_target =
            t != nullptr && (is_icatch(*t) || (t->activity() != nullptr &&
                                               t->activity()->kind == ActivityKind::ReceiveTask));
        if (!event_target || f->condition_expression.has_value()) all_event_style = false;
      }
      if (!all_cond && !all_event_style) {
        c.add("FC-60", n, any_cond ? "conditional and unconditional branches mixed"
                                   : "branches carry no conditions");
      }
    }

    if (gw->kind == GatewayKind::EventBased) {
      if (out < 2) c.add("FC-64", n);
      bool has_receive = false, has_msg_event = false, has_timer = false;
      for (const SequenceFlow* f : n.outgoing) {
        const FlowNode* t = f->target;
        if (t == nullptr) continue;
        const Activity* ta = t->activity();
        bool receive = ta != nullptr && ta->kind == ActivityKind::ReceiveTask;
        static const std::set<TriggerKind> ok_triggers = {
            TriggerKind::Message, TriggerKind::Timer, TriggerKind::Signal,
            TriggerKind::Conditional, TriggerKind::Multiple};
        bool catch_ok = is_icatch(*t) && ok_triggers.count(t->event()->trigger) > 0;
        if (!receive && !catch_ok) c.add("FC-67", *t);
        if (receive) {
          has_receive = true;
          if (!ta->boundary_events.empty()) c.add("FC-68", *t);
        }
        if (is_icatch(*t) && t->event()->trigger == TriggerKind::Message) has_msg_event = true;
        if (is_icatch(*t) && t->event()->trigger == TriggerKind::Timer) has_timer = true;
        if (t->incoming.size() > 1) c.add("FC-70", *t);
      }
      if (has_receive && has_msg_event) c.add("FC-69", n);
      if (out >= 1 && !has_timer) c.add("BP-06", n);
    }
  }
}

// ---------------------------------------------------------------------------
// Activities and flows
// ---------------------------------------------------------------------------

void check_activities(Ctx& c) {
  for (const FlowNode& n : c.m.nodes) {
    const Activity* a = n.activity();
    if (a == nullptr) continue;
    size_t in_msgs = c.g.incoming_messages(n).size();
    size_t out_msgs = c.g.outgoing_messages(n).size();

    if (a->kind == ActivityKind::ReceiveTask && out_msgs > 0) c.add("FC-75", n);
    if (a->kind == ActivityKind::SendTask && in_msgs > 0) c.add("FC-76", n);
    if ((a->kind == ActivityKind::ScriptTask || a->kind == ActivityKind::ManualTask) &&
        (in_msgs > 0 || out_msgs > 0)) {
      c.add("FC-77", n);
    }

    // FC-72: a default flow next to an unconditional flow is dead.
    if (a->default_flow != nullptr) {
      bool unconditional = std::any_of(
          n.outgoing.begin(), n.outgoing.end(), [](const SequenceFlow* f) {
            return !f->is_default && !f->condition_expression.has_value();
          });
      if (unconditional) c.add("FC-72", n, "default flow would never be selected");
    }
  }
}

void check_sequence_flows(Ctx& c) {
  for (const SequenceFlow& f : c.m.flows) {
    if (f.source == nullptr || f.target == nullptr) continue;
    if (f.source == f.target) c.add("FC-80", f);
    const Container* sc = effective_container(*f.source);
    const Container* tc = effective_container(*f.target);
    if (sc != nullptr && tc != nullptr && sc != tc) c.add("FC-79", f);
  }
}

void check_message_flows(Ctx& c) {
  for (const MessageFlow& f : c.m.message_flows) {
    // FC-83: white-box pool borders.
    if (f.source.pool != nullptr && !f.source.pool->is_black_box()) {
      c.add("FC-83", f, "source pool '" + f.source.pool->name + "' is white box");
    }
    if (f.target.pool != nullptr && !f.target.pool->is_black_box()) {
      c.add("FC-83", f, "target pool '" + f.target.pool->name + "' is white box");
    }

    // FC-81/FC-82: activity endpoints against the whitelists (event endpoints
    // are governed by FC-15..FC-20, pools by FC-83).
    auto activity_ok = [](const FlowNode* n, bool source) {
      const Activity* a = n->activity();
      if (a == nullptr) return true;  // gateways never resolve as endpoints
      switch (a->kind) {
        case ActivityKind::UserTask:
        case ActivityKind::ServiceTask:
        case ActivityKind::SubProcess:
        case ActivityKind::Transaction:
        case ActivityKind::AdHocSubProcess:
        case ActivityKind::CallActivity:
          return true;
        case ActivityKind::SendTask: return source;
        case ActivityKind::ReceiveTask: return !source;
        default: return false;
      }
    };
    if (f.source.node != nullptr && is_activity(*f.source.node) &&
        !activity_ok(f.source.node, true)) {
      c.add("FC-81", f, activity_kind_name(f.source.node->activity()->kind));
    }
    if (f.target.node != nullptr && is_activity(*f.target.node) &&
        !activity_ok(f.target.node, false)) {
      c.add("FC-82", f, activity_kind_name(f.target.node->activity()->kind));
    }
  }

  // FC-84: every message definition is referenced somewhere.
  for (const Definition& d : c.m.definitions) {
    if (d.kind != DefKind::Message) continue;
    bool used = std::any_of(c.m.message_flows.begin(), c.m.message_flows.end(),
                            [&](const MessageFlow& f) { return f.message_ref == d.id; });
    if (!used) {
      used = std::any_of(c.m.nodes.begin(), c.m.nodes.end(), [&](const FlowNode& n) {
        const Event* e = n.event();
        return e != nullptr && e->def_ref == d.id;
      });
    }
    if (!used) c.add("FC-84", d);
  }
}

void check_artifacts(Ctx& c) {
  for (const Artifact& a : c.m.artifacts) {
    if (a.kind != ArtifactKind::Association) continue;
    bool s_anno = a.source.artifact != nullptr &&
                  a.source.artifact->kind == ArtifactKind::TextAnnotation;
    bool t_anno = a.target.artifact != nullptr &&
                  a.target.artifact->kind == ArtifactKind::TextAnnotation;
    if (s_anno && t_anno) c.add("FC-85", a);
    if ((s_anno || t_anno) && a.direction != AssocDirection::None) c.add("BP-32", a);
  }

  // BP-31: annotations want an association.
  for (const Artifact& a : c.m.artifacts) {
    if (a.kind != ArtifactKind::TextAnnotation) continue;
    bool connected = std::any_of(
        c.m.artifacts.begin(), c.m.artifacts.end(), [&](const Artifact& assoc) {
          return assoc.kind == ArtifactKind::Association &&
                 (assoc.source.artifact == &a || assoc.target.artifact == &a);
        });
    if (!connected) c.add("BP-31", a);
  }
}

// ---------------------------------------------------------------------------
// Data flow
// ---------------------------------------------------------------------------

void check_data(Ctx& c) {
  // Collect associations once.
  std::vector<const DataElement*> assocs;
  for (const DataElement& d : c.m.data_elements) {
    if (d.kind == DataKind::Association) assocs.push_back(&d);
  }
  auto touches = [&](const DataElement& target) {
    return std::any_of(assocs.begin(), assocs.end(), [&](const DataElement* a) {
      if (a->data_endpoint == &target) return true;
      const DataElement* ep = a->data_endpoint;
      return ep != nullptr &&
             ((ep->kind == DataKind::ObjectReference && ep->object == &target) ||
              (ep->kind == DataKind::StoreReference && ep->store == &target));
    });
  };

  std::set<const ProcessDef*> called;
  for (const FlowNode& n : c.m.nodes) {
    const Activity* a = n.activity();
    if (a != nullptr && a->called_process != nullptr) called.insert(a->called_process);
  }

  for (const DataElement& d : c.m.data_elements) {
    switch (d.kind) {
      case DataKind::Object:
        if (!touches(d)) c.add("DF-02", d);
        break;
      case DataKind::Store: {
        bool referenced = std::any_of(
            c.m.data_elements.begin(), c.m.data_elements.end(), [&](const DataElement& r) {
              return r.kind == DataKind::StoreReference && r.store == &d;
            });
        if (!touches(d) && !referenced) c.add("DF-03", d);
        break;
      }
      case DataKind::ObjectReference: {
        if (d.object == nullptr || d.container == nullptr) break;
        bool visible = false;
        for (const Container* cc = d.container; cc != nullptr; cc = cc->parent) {
          if (d.object->container == cc) { visible = true; break; }
        }
        if (!visible) c.add("DF-04", d);
        break;
      }
      case DataKind::Association: {
        // DF-01: called processes stay self-contained.
        if (d.owner == nullptr || d.owner->container == nullptr) break;
        const ProcessDef* p = root_process(*d.owner->container);
        if (p == nullptr || called.count(p) == 0) break;
        const DataElement* ep = d.data_endpoint;
        if (ep == nullptr) break;
        bool outside = ep->container == nullptr || root_process(*ep->container) != p;
        if (outside) c.add("DF-01", *d.owner, "data outside the called process");
        break;
      }
      default: break;
    }
  }
}

// ---------------------------------------------------------------------------
// Best practices
// ---------------------------------------------------------------------------

void check_best_practices(Ctx& c) {
  for (const Container* cc : c.g.all_containers()) {
    if (cc->nodes.size() > 9) {
      c.add("BP-01", *cc, std::to_string(cc->nodes.size()) + " flow nodes");
    }

    bool adhoc_body = cc->owner != nullptr && cc->owner->activity() != nullptr &&
                      cc->owner->activity()->kind == ActivityKind::AdHocSubProcess;
    int starts = 0, ends = 0;
    std::vector<const FlowNode*> end_events;
    for (const FlowNode* n : cc->nodes) {
      if (is_start(*n)) ++starts;
      if (is_end(*n)) {
        ++ends;
        end_events.push_back(n);
      }
    }
    if (!cc->nodes.empty() && !adhoc_body && (starts == 0 || ends == 0)) {
      c.add("BP-03", *cc, starts == 0 ? "no explicit start event" : "no explicit end event");
    }
    if (starts > 1) c.add("BP-04", *cc, std::to_string(starts) + " start events");
    if (ends >= 2) {
      for (const FlowNode* n : end_events) {
        if (trimmed(n->name).empty()) c.add("BP-13", *n);
      }
    }

    // BP-18/BP-19: split/join flow counts per container.
    auto match_counts = [&](GatewayKind kind, const char* rule) {
      std::vector<size_t> split_outs;
      std::vector<const FlowNode*> joins;
      for (const FlowNode* n : cc->nodes) {
        const Gateway* gw = n->gateway();
        if (gw == nullptr || gw->kind != kind) continue;
        if (n->outgoing.size() >= 2) split_outs.push_back(n->outgoing.size());
        if (n->incoming.size() >= 2) joins.push_back(n);
      }
      if (split_outs.empty()) return;
      for (const FlowNode* j : joins) {
        bool matched = std::any_of(split_outs.begin(), split_outs.end(),
                                   [&](size_t s) { return s == j->incoming.size(); });
        if (!matched) c.add(rule, *j, "no split with matching flow count");
      }
    };
    match_counts(GatewayKind::Parallel, "BP-18");
    match_counts(GatewayKind::Inclusive, "BP-19");
  }

  // Per-process advisories.
  for (const ProcessDef& p : c.m.processes) {
    if (p.root == nullptr) continue;
    bool has_tasks = false, has_msg_events = false;
    std::map<std::string, std::vector<const FlowNode*>> activity_names;
    for (const Container* cc : c.g.containers_of(p)) {
      for (const FlowNode* n : cc->nodes) {
        const Activity* a = n->activity();
        if (a != nullptr &&
            (a->kind == ActivityKind::SendTask || a->kind == ActivityKind::ReceiveTask)) {
          has_tasks = true;
        }
        const Event* e = n->event();
        if (e != nullptr && (is_icatch(*n) || is_ithrow(*n)) &&
            e->trigger == TriggerKind::Message) {
          has_msg_events = true;
        }
        if (a != nullptr && !trimmed(n->name).empty()) {
          activity_names[trimmed(n->name)].push_back(n);
        }
      }
    }
    if (has_tasks && has_msg_events) {
      c.add("BP-02", p, "send/receive tasks mixed with message intermediate events");
    }
    for (const auto& [name, group] : activity_names) {
      if (group.size() < 2) continue;
      for (const FlowNode* n : group) c.add("BP-26", *n, "duplicate name '" + name + "'");
    }
  }

  for (const FlowNode& n : c.m.nodes) {
    const Event* e = n.event();
    const Activity* a = n.activity();
    const Gateway* gw = n.gateway();

    if (e != nullptr) {
      if (!is_end(n) && n.outgoing.size() >= 2) c.add("BP-07", n);
      if (is_start(n) && trimmed(n.name).empty()) c.add("BP-08", n);
      if (is_start(n) && e->trigger == TriggerKind::Message &&
          c.g.incoming_messages(n).empty()) {
        c.add("BP-09", n);
      }
      if (is_icatch(n) && e->trigger == TriggerKind::Message &&
          c.g.incoming_messages(n).empty()) {
        c.add("BP-10", n);
      }
      if (is_ithrow(n) && e->trigger == TriggerKind::Message &&
          c.g.outgoing_messages(n).empty()) {
        c.add("BP-11", n);
      }
      if ((is_icatch(n) || is_ithrow(n)) && trimmed(n.name).empty()) c.add("BP-12", n);
      if (!is_gateway(n) && n.incoming.size() >= 2) c.add("BP-20", n);
    }

    if (a != nullptr) {
      if (trimmed(n.name).empty()) c.add("BP-25", n);
      if (a->kind == ActivityKind::SendTask && c.g.outgoing_messages(n).empty()) {
        c.add("BP-27", n);
      }
      if (a->kind == ActivityKind::ReceiveTask && c.g.incoming_messages(n).empty()) {
        c.add("BP-28", n);
      }
      // BP-05: conditional branches deserve a default.
      if (n.outgoing.size() >= 2 && a->default_flow == nullptr) {
        bool any_cond = std::any_of(n.outgoing.begin(), n.outgoing.end(),
                                    [](const SequenceFlow* f) { return has_cond(*f); });
        if (any_cond) c.add("BP-05", n);
      }

      // BP-14/24/29: sub-process followed by a question gateway.
      if (is_subprocess_kind(a->kind) && a->body != nullptr && !is_event_subprocess(n)) {
        for (const SequenceFlow* f : n.outgoing) {
          const FlowNode* t = f->target;
          if (t == nullptr || t->gateway() == nullptr) continue;
          std::string gname = trimmed(t->name);
          if (gname.empty() || gname.back() != '?') continue;
          std::vector<std::string> end_names;
          for (const FlowNode* d : a->body->nodes) {
            if (is_end(*d) && !trimmed(d->name).empty()) end_names.push_back(lower(d->name));
          }
          size_t body_ends = std::count_if(a->body->nodes.begin(), a->body->nodes.end(),
                                           [](const FlowNode* d) { return is_end(*d); });
          if (body_ends <= 1) c.add("BP-29", n, "question gateway after a single end state");
          std::vector<std::string> labels;
          for (const SequenceFlow* bf : t->outgoing) {
            if (!trimmed(bf->name).empty()) labels.push_back(lower(bf->name));
          }
          bool any_match = std::any_of(labels.begin(), labels.end(), [&](const std::string& l) {
            return std::find(end_names.begin(), end_names.end(), l) != end_names.end();
          });
          if (!labels.empty() && !any_match) {
            c.add("BP-14", n, "no end state matches a branch label");
          }
          bool all_matched = std::all_of(labels.begin(), labels.end(), [&](const std::string& l) {
            return std::find(end_names.begin(), end_names.end(), l) != end_names.end();
          });
          if (!labels.empty() && !all_matched) {
            c.add("BP-24", *t, "branch label without a matching end state");
          }
        }
      }
    }

    if (gw != nullptr) {
      size_t out = n.outgoing.size();
      if (out >= 2 && gw->default_flow == nullptr) {
        if (gw->kind == GatewayKind::Exclusive) c.add("BP-15", n);
        if (gw->kind == GatewayKind::Inclusive) c.add("BP-16", n);
        if (gw->kind == GatewayKind::Complex) c.add("BP-17", n);
      }
      if (n.incoming.size() >= 2 && out >= 2) c.add("BP-21", n);
      if (out >= 2 && gw->kind == GatewayKind::Exclusive) {
        size_t unnamed = std::count_if(n.outgoing.begin(), n.outgoing.end(),
                                       [](const SequenceFlow* f) {
                                         return trimmed(f->name).empty();
                                       });
        if (unnamed > 1) c.add("BP-22", n);
      }
      if (out >= 2 && gw->kind == GatewayKind::Inclusive) {
        bool any_unnamed = std::any_of(n.outgoing.begin(), n.outgoing.end(),
                                       [](const SequenceFlow* f) {
                                         return trimmed(f->name).empty();
                                       });
        if (any_unnamed) c.add("BP-23", n);
      }
    }
  }

  // BP-30: message flows named after their message.
  for (const MessageFlow& f : c.m.message_flows) {
    std::string fname = trimmed(f.name);
    if (fname.empty()) {
      c.add("BP-30", f, "unnamed message flow");
      continue;
    }
    if (!f.message_ref.empty()) {
      auto ref = resolve(c.m, f.message_ref);
      if (ref.has_value()) {
        if (auto* const* def = std::get_if<Definition*>(&*ref)) {
          if ((*def)->kind == DefKind::Message && trimmed((*def)->name) != fname) {
            c.add("BP-30", f, "name differs from message '" + trimmed((*def)->name) + "'");
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<Diagnostic> evaluate_rules(
    const BpmnModel& model, const GraphIndex& graph, const RuleOptions& options,
    const std::function<bool(const std::string&)>& enabled) {
  Ctx c{model, graph, options, enabled, {}};
  check_collaboration(c);
  check_process(c);
  check_subprocess(c);
  check_connectivity(c);
  check_event_typing(c);
  check_event_message_flows(c);
  check_link_events(c);
  check_error_escalation(c);
  check_signal(c);
  check_transaction_compensation(c);
  check_exception_merge(c);
  check_conditional_flows(c);
  check_gateway_structure(c);
  check_activities(c);
  check_sequence_flows(c);
  check_message_flows(c);
  check_artifacts(c);
  check_data(c);
  check_best_practices(c);
  return std::move(c.out);
}

}  // namespace bpmnlint
