#include "bpmnlint/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace bpmnlint {

namespace {

// Budgets for the marking exploration.  Exceeding them flips the analysis to
// the conservative default (every edge NonExclusive).
constexpr size_t kMaxMarkings = 60000;
constexpr size_t kMaxChoices = 64;

bool is_start_event(const FlowNode& n) {
  const Event* e = n.event();
  return e != nullptr && e->position == EventPosition::Start;
}

bool is_boundary_event(const FlowNode& n) {
  const Event* e = n.event();
  return e != nullptr && e->position == EventPosition::Boundary;
}

}  // namespace

TokenMode JoinClassification::mode_of(const SequenceFlow* f) const {
  for (const auto& [flow, mode] : modes) {
    if (flow == f) return mode;
  }
  return TokenMode::NonExclusive;
}

bool JoinClassification::any_exclusive() const {
  return std::any_of(modes.begin(), modes.end(), [](const auto& m) {
    return m.second == TokenMode::Exclusive;
  });
}

bool JoinClassification::any_non_exclusive() const {
  return std::any_of(modes.begin(), modes.end(), [](const auto& m) {
    return m.second == TokenMode::NonExclusive;
  });
}

bool JoinClassification::co_markable(const SequenceFlow* a,
                                     const SequenceFlow* b) const {
  if (a == b) return false;
  const SequenceFlow* lo = std::min(a, b);
  const SequenceFlow* hi = std::max(a, b);
  return co_pairs.count({lo, hi}) > 0;
}

bool JoinClassification::has_non_co_markable_pair() const {
  for (size_t i = 0; i < modes.size(); ++i) {
    for (size_t j = i + 1; j < modes.size(); ++j) {
      if (!co_markable(modes[i].first, modes[j].first)) return true;
    }
  }
  return false;
}

bool JoinClassification::has_co_markable_pair() const {
  for (size_t i = 0; i < modes.size(); ++i) {
    for (size_t j = i + 1; j < modes.size(); ++j) {
      if (co_markable(modes[i].first, modes[j].first)) return true;
    }
  }
  return false;
}

GraphIndex::GraphIndex(const BpmnModel& model) : model_(&model) {
  // Message-flow indices.
  for (const MessageFlow& f : model.message_flows) {
    if (f.source.node != nullptr) node_out_msgs_[f.source.node].push_back(&f);
    if (f.source.pool != nullptr) pool_out_msgs_[f.source.pool].push_back(&f);
    if (f.target.node != nullptr) node_in_msgs_[f.target.node].push_back(&f);
    if (f.target.pool != nullptr) pool_in_msgs_[f.target.pool].push_back(&f);
  }

  // Normal/exception flow classes, per container.  A flow is Exception iff it
  // is forward-reachable from a boundary event's outgoing edge and not
  // forward-reachable from the container's sources along normal edges;
  // reconverged paths count as normal again.
  for (const Container& c : model.containers) {
    std::set<const FlowNode*> normal_heads;
    std::set<const FlowNode*> exception_heads;
    for (const FlowNode* n : c.nodes) {
      if (is_boundary_event(*n)) {
        exception_heads.insert(n);
      } else if (is_start_event(*n) ||
                 (n->incoming.empty() && !is_event_subprocess(*n) &&
                  !is_compensation_activity(*n))) {
        normal_heads.insert(n);
      }
    }
    auto closure = [&](std::set<const FlowNode*> frontier,
                       std::set<const SequenceFlow*>& flows_seen) {
      std::deque<const FlowNode*> queue(frontier.begin(), frontier.end());
      std::set<const FlowNode*> seen = frontier;
      while (!queue.empty()) {
        const FlowNode* n = queue.front();
        queue.pop_front();
        for (const SequenceFlow* f : n->outgoing) {
          if (f->container != &c) continue;
          flows_seen.insert(f);
          if (f->target != nullptr && seen.insert(f->target).second) {
            queue.push_back(f->target);
          }
        }
      }
    };
    std::set<const SequenceFlow*> normal_flows, exception_flows;
    closure(normal_heads, normal_flows);
    closure(exception_heads, exception_flows);
    for (const SequenceFlow* f : c.flows) {
      bool exceptional =
          exception_flows.count(f) > 0 && normal_flows.count(f) == 0;
      flow_class_[f] = exceptional ? FlowClass::Exception : FlowClass::Normal;
    }
  }
}

std::vector<const Container*> GraphIndex::all_containers() const {
  std::vector<const Container*> out;
  for (const Container& c : model_->containers) out.push_back(&c);
  return out;
}

std::vector<const Container*> GraphIndex::containers_of(const ProcessDef& p) const {
  std::vector<const Container*> out;
  std::deque<const Container*> queue;
  if (p.root != nullptr) queue.push_back(p.root);
  while (!queue.empty()) {
    const Container* c = queue.front();
    queue.pop_front();
    out.push_back(c);
    for (const FlowNode* n : c->nodes) {
      const Activity* a = n->activity();
      if (a != nullptr && a->body != nullptr) queue.push_back(a->body);
    }
  }
  return out;
}

std::vector<const FlowNode*> GraphIndex::descendants(const Container& c,
                                                     bool recursive) const {
  std::vector<const FlowNode*> out;
  for (const FlowNode* n : c.nodes) {
    out.push_back(n);
    const Activity* a = n->activity();
    if (recursive && a != nullptr && a->body != nullptr) {
      std::vector<const FlowNode*> inner = descendants(*a->body, true);
      out.insert(out.end(), inner.begin(), inner.end());
    }
  }
  return out;
}

Degrees GraphIndex::degrees(const FlowNode& n) const {
  return {static_cast<int>(n.incoming.size()), static_cast<int>(n.outgoing.size())};
}

std::map<std::string, std::vector<const FlowNode*>> GraphIndex::name_index(
    const Container& c,
    const std::function<bool(const FlowNode&)>& predicate) const {
  std::map<std::string, std::vector<const FlowNode*>> out;
  for (const FlowNode* n : c.nodes) {
    if (predicate && !predicate(*n)) continue;
    std::string key = trimmed(n->name);
    if (key.empty()) continue;
    out[key].push_back(n);
  }
  return out;
}

std::vector<const MessageFlow*> GraphIndex::incoming_messages(const FlowNode& n) const {
  auto it = node_in_msgs_.find(&n);
  return it != node_in_msgs_.end() ? it->second : std::vector<const MessageFlow*>{};
}

std::vector<const MessageFlow*> GraphIndex::outgoing_messages(const FlowNode& n) const {
  auto it = node_out_msgs_.find(&n);
  return it != node_out_msgs_.end() ? it->second : std::vector<const MessageFlow*>{};
}

std::vector<const MessageFlow*> GraphIndex::incoming_messages(const Participant& p) const {
  auto it = pool_in_msgs_.find(&p);
  return it != pool_in_msgs_.end() ? it->second : std::vector<const MessageFlow*>{};
}

std::vector<const MessageFlow*> GraphIndex::outgoing_messages(const Participant& p) const {
  auto it = pool_out_msgs_.find(&p);
  return it != pool_out_msgs_.end() ? it->second : std::vector<const MessageFlow*>{};
}

namespace {

// Partner id of the opposite endpoint, resolved to the owning participant
// when the endpoint node's process is bound to one.
std::string partner_id(const BpmnModel& m, const MsgEndpoint& ep) {
  if (ep.pool != nullptr) return ep.pool->id;
  if (ep.node != nullptr) {
    const ProcessDef* p = root_process(*ep.node->container);
    if (p != nullptr) {
      const Participant* part = participant_of(m, *p);
      if (part != nullptr) return part->id;
    }
    return ep.node->id;
  }
  return ep.ref;
}

}  // namespace

MessagePartners GraphIndex::message_partners(const FlowNode& n) const {
  MessagePartners out;
  for (const MessageFlow* f : incoming_messages(n)) {
    out.in_partners.insert(partner_id(*model_, f->source));
  }
  for (const MessageFlow* f : outgoing_messages(n)) {
    out.out_partners.insert(partner_id(*model_, f->target));
  }
  return out;
}

FlowClass GraphIndex::flow_class(const SequenceFlow& f) const {
  auto it = flow_class_.find(&f);
  return it != flow_class_.end() ? it->second : FlowClass::Normal;
}

SplitKind GraphIndex::split_kind(const FlowNode& n) const {
  if (n.outgoing.size() <= 1) return SplitKind::NotASplit;
  if (const Gateway* g = n.gateway()) {
    switch (g->kind) {
      case GatewayKind::Exclusive:
        return SplitKind::ExclusiveSplit;
      case GatewayKind::EventBased:
        return g->parallel_event_based ? SplitKind::NonExclusiveSplit
                                       : SplitKind::ExclusiveSplit;
      default:
        return SplitKind::NonExclusiveSplit;
    }
  }
  if (const Activity* a = n.activity()) {
    // All outgoing conditional (one default allowed) -> exclusive branching.
    for (const SequenceFlow* f : n.outgoing) {
      if (f->is_default) continue;
      if (!f->condition_expression.has_value()) return SplitKind::NonExclusiveSplit;
    }
    return SplitKind::ExclusiveSplit;
  }
  // Events with several outgoing flows start all of them.
  return SplitKind::NonExclusiveSplit;
}

// ---------------------------------------------------------------------------
// Token-flow exploration
// ---------------------------------------------------------------------------

namespace {

using Marking = std::vector<uint8_t>;  // tokens per flow, saturating at 2

void add_tokens(Marking& m, const std::vector<int>& flows) {
  for (int i : flows) {
    if (m[i] < 2) ++m[i];
  }
}

// Appends all subsets of `items` to `out`, including the empty one, up to the
// choice cap; beyond the cap only the empty and full subsets are used.
void subsets_of(const std::vector<int>& items,
                std::vector<std::vector<int>>& out) {
  if (items.size() > 4) {
    out.push_back({});
    out.push_back(items);
    for (int i : items) out.push_back({i});
    return;
  }
  size_t n = items.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<int> s;
    for (size_t b = 0; b < n; ++b) {
      if (mask & (size_t{1} << b)) s.push_back(items[b]);
    }
    out.push_back(std::move(s));
  }
}

}  // namespace

const GraphIndex::ContainerTokens& GraphIndex::tokens_of(const Container& c) const {
  auto it = tokens_cache_.find(&c);
  if (it == tokens_cache_.end()) {
    ContainerTokens info;
    explore_container(c, info);
    it = tokens_cache_.emplace(&c, std::move(info)).first;
  }
  return it->second;
}

void GraphIndex::explore_container(const Container& c, ContainerTokens& out) const {
  std::map<const SequenceFlow*, int> fidx;
  for (const SequenceFlow* f : c.flows) {
    fidx.emplace(f, static_cast<int>(fidx.size()));
  }
  const size_t F = fidx.size();
  auto idx_of = [&](const SequenceFlow* f) -> int {
    auto it = fidx.find(f);
    return it != fidx.end() ? it->second : -1;
  };

  // Sources: start events always; other nodes when they have no incoming flow
  // and are not boundary events, event subprocesses or compensation handlers.
  std::vector<const FlowNode*> starts, implicit;
  for (const FlowNode* n : c.nodes) {
    if (is_start_event(*n)) {
      starts.push_back(n);
    } else if (n->incoming.empty() && !is_boundary_event(*n) &&
               !is_event_subprocess(*n) && !is_compensation_activity(*n)) {
      implicit.push_back(n);
    }
  }
  if (starts.empty() && implicit.empty()) {
    out.skipped = true;
    return;
  }

  // Output choices per node: lists of flow indices receiving a token when the
  // node completes.  Independent of the current marking.
  std::map<const FlowNode*, std::vector<std::vector<int>>> outputs;
  for (const FlowNode* n : c.nodes) {
    std::vector<int> all_out;
    for (const SequenceFlow* f : n->outgoing) {
      int i = idx_of(f);
      if (i >= 0) all_out.push_back(i);
    }
    std::vector<std::vector<int>>& choices = outputs[n];

    if (const Gateway* g = n->gateway()) {
      switch (g->kind) {
        case GatewayKind::Parallel:
          choices.push_back(all_out);
          break;
        case GatewayKind::EventBased:
          if (g->parallel_event_based) {
            choices.push_back(all_out);
            break;
          }
          [[fallthrough]];
        case GatewayKind::Exclusive:
          for (int i : all_out) choices.push_back({i});
          if (all_out.empty()) choices.push_back({});
          break;
        case GatewayKind::Inclusive:
        case GatewayKind::Complex: {
          std::vector<std::vector<int>> subs;
          subsets_of(all_out, subs);
          for (auto& s : subs) {
            if (!s.empty()) choices.push_back(std::move(s));
          }
          if (choices.empty()) choices.push_back({});
          break;
        }
      }
    } else if (const Event* e = n->event()) {
      if (e->position == EventPosition::End) {
        choices.push_back({});
      } else {
        choices.push_back(all_out);
      }
    } else {
      const Activity* a = n->activity();
      // Unconditional flows always fire; conditional subsets are
      // nondeterministic; the default fires iff every conditional declined.
      std::vector<int> uncond, cond;
      int def = -1;
      for (const SequenceFlow* f : n->outgoing) {
        int i = idx_of(f);
        if (i < 0) continue;
        if (f->is_default) def = i;
        else if (f->condition_expression.has_value()) cond.push_back(i);
        else uncond.push_back(i);
      }
      std::vector<std::vector<int>> cond_subs;
      subsets_of(cond, cond_subs);
      std::vector<std::vector<int>> base;
      for (const auto& s : cond_subs) {
        std::vector<int> o = uncond;
        o.insert(o.end(), s.begin(), s.end());
        if (s.empty() && def >= 0) o.push_back(def);
        base.push_back(std::move(o));
      }
      // Boundary events: an interrupting one replaces the normal outcome; a
      // non-interrupting one optionally adds its own outgoing tokens.
      std::vector<std::vector<int>> ni_outs;
      std::vector<std::vector<int>> int_outs;
      if (a != nullptr) {
        for (const FlowNode* b : a->boundary_events) {
          const Event* be = b->event();
          std::vector<int> bo;
          for (const SequenceFlow* f : b->outgoing) {
            int i = idx_of(f);
            if (i >= 0) bo.push_back(i);
          }
          if (bo.empty()) continue;
          if (be != nullptr && !be->interrupting) ni_outs.push_back(bo);
          else int_outs.push_back(bo);
        }
      }
      for (const auto& b : base) {
        // Without / with each combination of non-interrupting boundaries.
        size_t combos = std::min<size_t>(size_t{1} << ni_outs.size(), 16);
        for (size_t mask = 0; mask < combos; ++mask) {
          std::vector<int> o = b;
          for (size_t k = 0; k < ni_outs.size(); ++k) {
            if (mask & (size_t{1} << k)) {
              o.insert(o.end(), ni_outs[k].begin(), ni_outs[k].end());
            }
          }
          choices.push_back(std::move(o));
          if (choices.size() >= kMaxChoices) break;
        }
        if (choices.size() >= kMaxChoices) break;
      }
      for (const auto& io : int_outs) choices.push_back(io);
    }
    if (choices.empty()) choices.push_back({});
    if (choices.size() > kMaxChoices) {
      choices.resize(kMaxChoices);
      out.decided = false;
    }
  }

  // Pairs worth tracking: incoming-edge pairs of every node with >=2
  // in-container incoming flows.
  std::vector<std::pair<int, int>> watch;
  std::map<int, const SequenceFlow*> rev;
  for (const auto& [f, i] : fidx) rev[i] = f;
  for (const FlowNode* n : c.nodes) {
    std::vector<int> ins;
    for (const SequenceFlow* f : n->incoming) {
      int i = idx_of(f);
      if (i >= 0) ins.push_back(i);
    }
    for (size_t i = 0; i < ins.size(); ++i) {
      for (size_t j = i + 1; j < ins.size(); ++j) {
        watch.emplace_back(std::min(ins[i], ins[j]), std::max(ins[i], ins[j]));
      }
    }
  }
  std::sort(watch.begin(), watch.end());
  watch.erase(std::unique(watch.begin(), watch.end()), watch.end());

  // Seed markings: each explicit start alone; all implicit sources together.
  std::vector<Marking> seeds;
  for (const FlowNode* s : starts) {
    for (const auto& choice : outputs[s]) {
      Marking m(F, 0);
      add_tokens(m, choice);
      seeds.push_back(std::move(m));
    }
  }
  if (!implicit.empty()) {
    Marking m(F, 0);
    for (const FlowNode* s : implicit) {
      add_tokens(m, outputs[s].front());
    }
    seeds.push_back(std::move(m));
  }

  // Breadth-first exploration over markings.
  std::unordered_set<std::string> visited;
  std::deque<Marking> queue;
  std::set<std::pair<int, int>> co;
  auto visit = [&](Marking m) {
    std::string key(m.begin(), m.end());
    if (visited.count(key) > 0) return;
    if (visited.size() >= kMaxMarkings) {
      out.decided = false;
      return;
    }
    for (const auto& [i, j] : watch) {
      if (m[i] > 0 && m[j] > 0) co.insert({i, j});
    }
    visited.insert(std::move(key));
    queue.push_back(std::move(m));
  };
  for (Marking& m : seeds) visit(std::move(m));

  while (!queue.empty() && out.decided) {
    Marking m = std::move(queue.front());
    queue.pop_front();
    for (const FlowNode* n : c.nodes) {
      std::vector<int> ins;
      for (const SequenceFlow* f : n->incoming) {
        int i = idx_of(f);
        if (i >= 0) ins.push_back(i);
      }
      if (ins.empty()) continue;
      const Gateway* g = n->gateway();
      bool parallel_join =
          g != nullptr && (g->kind == GatewayKind::Parallel ||
                           (g->kind == GatewayKind::EventBased &&
                            g->parallel_event_based));
      bool subset_join = g != nullptr && (g->kind == GatewayKind::Inclusive ||
                                          g->kind == GatewayKind::Complex);
      std::vector<std::vector<int>> consumptions;
      if (parallel_join) {
        bool all_marked = std::all_of(ins.begin(), ins.end(),
                                      [&](int i) { return m[i] > 0; });
        if (all_marked) consumptions.push_back(ins);
      } else if (subset_join) {
        std::vector<int> marked;
        for (int i : ins) {
          if (m[i] > 0) marked.push_back(i);
        }
        if (!marked.empty()) {
          std::vector<std::vector<int>> subs;
          subsets_of(marked, subs);
          for (auto& s : subs) {
            if (!s.empty()) consumptions.push_back(std::move(s));
          }
        }
      } else {
        for (int i : ins) {
          if (m[i] > 0) consumptions.push_back({i});
        }
      }
      for (const auto& consumed : consumptions) {
        for (const auto& produced : outputs[n]) {
          Marking next = m;
          for (int i : consumed) --next[i];
          add_tokens(next, produced);
          visit(std::move(next));
        }
      }
    }
  }

  if (!out.decided) {
    out.co_marked.clear();
    // Conservative default: treat every watched pair as co-markable.
    for (const auto& [i, j] : watch) {
      out.co_marked.insert({std::min(rev[i], rev[j]), std::max(rev[i], rev[j])});
    }
    return;
  }
  for (const auto& [i, j] : co) {
    const SequenceFlow* a = rev[i];
    const SequenceFlow* b = rev[j];
    out.co_marked.insert({std::min(a, b), std::max(a, b)});
  }
}

JoinClassification GraphIndex::classify_incoming(const FlowNode& join) const {
  JoinClassification result;
  const Container* c = effective_container(join);
  if (c == nullptr) c = join.container;
  const ContainerTokens& info = tokens_of(*c);
  result.skipped = info.skipped;
  result.decided = info.decided;
  result.co_pairs = info.co_marked;
  for (const SequenceFlow* f : join.incoming) {
    TokenMode mode = TokenMode::Exclusive;
    if (!info.decided) {
      mode = TokenMode::NonExclusive;  // budget exceeded: conservative default
    } else {
      for (const SequenceFlow* g : join.incoming) {
        if (g == f) continue;
        const SequenceFlow* lo = std::min(f, g);
        const SequenceFlow* hi = std::max(f, g);
        if (info.co_marked.count({lo, hi}) > 0) {
          mode = TokenMode::NonExclusive;
          break;
        }
      }
    }
    result.modes.emplace_back(f, mode);
  }
  return result;
}

}  // namespace bpmnlint
