// Copyright 2026 The propscpp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROPS_PROP_GRAPH_HPP_
#define PROPS_PROP_GRAPH_HPP_

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "props/features.hpp"
#include "props/relation.hpp"

namespace props {

enum class NodeKind {
  kPredicate,
  kNonPredicate,
  kSyntheticSameAs,
  kSyntheticExists,
};

inline bool is_synthetic(NodeKind k) {
  return k == NodeKind::kSyntheticSameAs || k == NodeKind::kSyntheticExists;
}

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::kPredicate: return "Predicate";
    case NodeKind::kNonPredicate: return "NonPredicate";
    case NodeKind::kSyntheticSameAs: return "SyntheticSameAs";
    case NodeKind::kSyntheticExists: return "SyntheticExists";
  }
  return "?";
}

inline std::optional<NodeKind> node_kind_from_string(const std::string& s) {
  if (s == "Predicate") return NodeKind::kPredicate;
  if (s == "NonPredicate") return NodeKind::kNonPredicate;
  if (s == "SyntheticSameAs") return NodeKind::kSyntheticSameAs;
  if (s == "SyntheticExists") return NodeKind::kSyntheticExists;
  return std::nullopt;
}

// A typed, possibly multi-word node. `span` holds source token indices in
// strictly increasing order (empty and non-contiguous spans are legal);
// `text` is the space-joined lemma rendering of the span; `head` is the
// syntactic head token inside the span (0 for synthetic nodes), used for
// display labels. Predicate copies created by relation propagation point to
// their original through `duplicate_of`.
struct PropNode {
  int id = 0;
  NodeKind kind = NodeKind::kNonPredicate;
  std::vector<int> span;
  std::string text;
  int head = 0;
  FeatureMap features;
  std::optional<int> duplicate_of;

  friend bool operator==(const PropNode&, const PropNode&) = default;
};

// Directed labeled edge. `attr` carries the preposition lemma on prep edges;
// `propagated` marks edges added by relation propagation so that the
// pre-propagation graph can be recovered exactly.
struct PropEdge {
  int source = 0;
  int target = 0;
  RelationLabel label;
  std::string attr;
  bool propagated = false;

  friend bool operator==(const PropEdge&, const PropEdge&) = default;
  friend auto operator<=>(const PropEdge& a, const PropEdge& b) {
    return std::tie(a.source, a.target, a.label, a.attr, a.propagated) <=>
           std::tie(b.source, b.target, b.label, b.attr, b.propagated);
  }
};

struct PropGraph {
  std::string sentence_id;
  std::vector<PropNode> nodes;
  std::vector<PropEdge> edges;

  const PropNode* find_node(int id) const {
    for (const auto& n : nodes)
      if (n.id == id) return &n;
    return nullptr;
  }

  const PropNode& node(int id) const {
    const PropNode* n = find_node(id);
    if (!n) throw std::out_of_range("no node " + std::to_string(id));
    return *n;
  }

  std::vector<const PropEdge*> out_edges(int id) const {
    std::vector<const PropEdge*> out;
    for (const auto& e : edges)
      if (e.source == id) out.push_back(&e);
    return out;
  }

  std::vector<const PropEdge*> in_edges(int id) const {
    std::vector<const PropEdge*> out;
    for (const auto& e : edges)
      if (e.target == id) out.push_back(&e);
    return out;
  }

  friend bool operator==(const PropGraph&, const PropGraph&) = default;
};

inline int first_span_index(const PropNode& n) {
  return n.span.empty() ? std::numeric_limits<int>::max() : n.span.front();
}

// The head word of a node in base form; "was elected" -> "elect".
inline std::string head_text(const PropNode& n) {
  if (n.kind == NodeKind::kSyntheticSameAs) return "SameAs";
  if (n.kind == NodeKind::kSyntheticExists) return "EXISTS";
  if (n.head != 0) {
    std::size_t word = 0;
    for (std::size_t i = 0; i < n.span.size(); ++i)
      if (n.span[i] == n.head) word = i;
    std::size_t begin = 0, seen = 0;
    for (std::size_t i = 0; i <= n.text.size(); ++i) {
      if (i == n.text.size() || n.text[i] == ' ') {
        if (seen == word) return n.text.substr(begin, i - begin);
        ++seen;
        begin = i + 1;
      }
    }
  }
  return n.text;
}

// Checks the structural invariants of a graph. `allow_raw_labels` relaxes
// the closed-label-set requirement for pass-through debugging graphs.
inline std::vector<std::string> validate_graph(const PropGraph& g,
                                               bool allow_raw_labels = false) {
  std::vector<std::string> problems;
  auto report = [&](const std::string& p) { problems.push_back(p); };

  std::set<int> ids;
  for (const auto& n : g.nodes) {
    if (!ids.insert(n.id).second)
      report("duplicate node id " + std::to_string(n.id));
    if (!std::is_sorted(n.span.begin(), n.span.end()) ||
        std::adjacent_find(n.span.begin(), n.span.end()) != n.span.end())
      report("span of node " + std::to_string(n.id) +
             " not strictly increasing");
    if (is_synthetic(n.kind) != n.span.empty())
      report("node " + std::to_string(n.id) +
             ": synthetic nodes and only synthetic nodes have empty spans");
    if (n.duplicate_of) {
      const PropNode* orig = g.find_node(*n.duplicate_of);
      if (!orig)
        report("node " + std::to_string(n.id) + " duplicates missing node " +
               std::to_string(*n.duplicate_of));
      else if (orig->span != n.span)
        report("node " + std::to_string(n.id) +
               " duplicates a node with a different span");
    }
  }

  // Every token belongs to at most one node, not counting duplicates.
  std::map<int, int> token_owner;
  for (const auto& n : g.nodes) {
    if (n.duplicate_of) continue;
    for (int t : n.span) {
      auto [it, fresh] = token_owner.emplace(t, n.id);
      if (!fresh)
        report("token " + std::to_string(t) + " appears in nodes " +
               std::to_string(it->second) + " and " + std::to_string(n.id));
    }
  }

  for (const auto& e : g.edges) {
    if (!ids.count(e.source) || !ids.count(e.target))
      report("edge " + std::to_string(e.source) + "->" +
             std::to_string(e.target) + " references a missing node");
    if (e.source == e.target)
      report("self-loop at node " + std::to_string(e.source));
    if (!allow_raw_labels && !e.label.is_core())
      report("unknown relation label '" + e.label.name() + "'");
    if (e.label.is_core() && proposition_forming(e.label)) {
      const PropNode* s = g.find_node(e.source);
      if (s && s->kind == NodeKind::kNonPredicate)
        report("non-predicate node " + std::to_string(e.source) +
               " has outgoing " + e.label.name() + " edge");
    }
  }
  return problems;
}

// Renumbers node ids into a deterministic order so that two graphs built
// with different id sequences compare equal when they describe the same
// structure. Nodes are keyed by span, kind and duplication fingerprint.
inline PropGraph canonical_form(const PropGraph& g) {
  auto edge_fingerprint = [&](const PropNode& n) {
    std::vector<std::string> parts;
    for (const auto& e : g.edges) {
      if (e.source != n.id && e.target != n.id) continue;
      const PropNode& other = g.node(e.source == n.id ? e.target : e.source);
      std::string p = (e.source == n.id ? ">" : "<") + e.label.name();
      for (int t : other.span) p += "," + std::to_string(t);
      parts.push_back(p);
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p + ";";
    return out;
  };

  std::vector<const PropNode*> order;
  for (const auto& n : g.nodes) order.push_back(&n);
  std::stable_sort(order.begin(), order.end(),
                   [&](const PropNode* a, const PropNode* b) {
                     auto key = [&](const PropNode* n) {
                       return std::tuple(first_span_index(*n), n->span,
                                         static_cast<int>(n->kind),
                                         n->duplicate_of.has_value(),
                                         edge_fingerprint(*n), n->id);
                     };
                     return key(a) < key(b);
                   });

  std::map<int, int> remap;
  for (std::size_t i = 0; i < order.size(); ++i)
    remap[order[i]->id] = static_cast<int>(i);

  PropGraph out;
  out.sentence_id = g.sentence_id;
  for (const PropNode* n : order) {
    PropNode c = *n;
    c.id = remap[n->id];
    if (c.duplicate_of) c.duplicate_of = remap[*c.duplicate_of];
    out.nodes.push_back(std::move(c));
  }
  for (const auto& e : g.edges) {
    PropEdge c = e;
    c.source = remap[e.source];
    c.target = remap[e.target];
    out.edges.push_back(std::move(c));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace props

#endif  // PROPS_PROP_GRAPH_HPP_
