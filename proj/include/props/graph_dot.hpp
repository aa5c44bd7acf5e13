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

#ifndef PROPS_GRAPH_DOT_HPP_
#define PROPS_GRAPH_DOT_HPP_

#include <sstream>
#include <string>
#include <vector>

#include "props/prop_graph.hpp"

namespace props {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Subscript-style feature suffix, e.g. "elect [past, passive]".
inline std::string feature_suffix(const FeatureMap& feats) {
  std::vector<std::string> parts;
  if (auto t = feats.get("tense")) parts.push_back(*t);
  if (feats.flag("passive")) parts.push_back("passive");
  if (feats.flag("negated")) parts.push_back("negated");
  if (auto m = feats.get("modal")) parts.push_back("modal=" + *m);
  if (auto d = feats.get("definite")) parts.push_back(*d);
  if (feats.flag("asserted")) parts.push_back("asserted");
  if (parts.empty()) return "";
  std::string out = " [";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + "]";
}

inline std::string display_label(const PropGraph& g, const PropNode& n) {
  (void)g;
  return head_text(n);
}

}  // namespace detail

// GraphViz rendering. Predicate and synthetic nodes are shaded; features
// appear as a bracketed suffix on the label.
inline std::string render_dot(const PropGraph& g) {
  std::ostringstream out;
  out << "digraph props {\n";
  out << "  rankdir=TB;\n";
  out << "  node [fontname=\"Helvetica\"];\n";

  std::vector<const PropNode*> order;
  for (const auto& n : g.nodes) order.push_back(&n);
  std::stable_sort(order.begin(), order.end(),
                   [](const PropNode* a, const PropNode* b) {
                     return std::pair(first_span_index(*a), a->id) <
                            std::pair(first_span_index(*b), b->id);
                   });

  for (const PropNode* n : order) {
    std::string label =
        detail::display_label(g, *n) + detail::feature_suffix(n->features);
    out << "  n" << n->id << " [label=\"" << detail::dot_escape(label) << "\"";
    if (n->kind != NodeKind::kNonPredicate)
      out << ", style=filled, fillcolor=lightgray";
    if (n->duplicate_of) out << ", peripheries=2";
    out << "];\n";
  }

  std::vector<PropEdge> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    std::string label = e.label.name();
    if (!e.attr.empty()) label += "[" + e.attr + "]";
    out << "  n" << e.source << " -> n" << e.target << " [label=\""
        << detail::dot_escape(label) << "\"";
    if (e.propagated) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace props

#endif  // PROPS_GRAPH_DOT_HPP_
