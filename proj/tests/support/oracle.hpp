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

#ifndef PROPS_TESTS_SUPPORT_ORACLE_HPP_
#define PROPS_TESTS_SUPPORT_ORACLE_HPP_

// Brute-force reference implementation of the attachment and feature
// metrics, kept independent of the library path: triplets are spelled out
// as strings and counted in maps; the intersection of two multisets is the
// sum of per-key count minima.

#include <map>
#include <string>
#include <vector>

#include "props/prop_graph.hpp"

namespace props::testing {

namespace oracle_detail {

inline std::string spell_span(const PropGraph& g, const PropNode& n) {
  if (n.kind == NodeKind::kSyntheticSameAs ||
      n.kind == NodeKind::kSyntheticExists) {
    // Mirror the sentinel convention: kind plus the span of the argument
    // with the smallest span vector.
    std::vector<int> anchor;
    bool have = false;
    for (const auto& e : g.edges) {
      if (e.source != n.id) continue;
      const std::string l = e.label.name();
      if (l != "SameAs_arg" && l != "subj") continue;
      const PropNode& t = g.node(e.target);
      if (t.span.empty()) continue;
      if (!have || t.span < anchor) {
        anchor = t.span;
        have = true;
      }
    }
    std::string s;
    for (int tok : anchor) s += (s.empty() ? "" : ",") + std::to_string(tok);
    return std::string("SYN:") +
           (n.kind == NodeKind::kSyntheticSameAs ? "SameAs" : "EXISTS") + ":" + s;
  }
  std::string s = "[";
  for (int t : n.span) s += std::to_string(t) + ",";
  return s + "]";
}

inline std::map<std::string, int> edge_bag(const PropGraph& g, bool set_sem) {
  std::map<std::string, int> bag;
  for (const auto& e : g.edges) {
    std::string key = spell_span(g, g.node(e.source)) + "->" +
                      spell_span(g, g.node(e.target)) + ":" + e.label.name();
    if (set_sem) bag[key] = 1;
    else bag[key] += 1;
  }
  return bag;
}

inline std::map<std::string, int> feature_bag(const PropGraph& g, bool set_sem) {
  std::map<std::string, int> bag;
  for (const auto& n : g.nodes)
    for (const auto& [k, v] : n.features) {
      std::string key = spell_span(g, n) + ":" + k + "=" + v;
      if (set_sem) bag[key] = 1;
      else bag[key] += 1;
    }
  return bag;
}

inline long long bag_intersection(const std::map<std::string, int>& a,
                                  const std::map<std::string, int>& b) {
  long long total = 0;
  for (const auto& [k, c] : a) {
    auto it = b.find(k);
    if (it != b.end()) total += std::min(c, it->second);
  }
  return total;
}

inline long long bag_size(const std::map<std::string, int>& a) {
  long long total = 0;
  for (const auto& [k, c] : a) total += c;
  return total;
}

}  // namespace oracle_detail

struct OracleScores {
  double las_p = 1.0, las_r = 1.0, feat_p = 1.0, feat_r = 1.0;
};

inline OracleScores oracle_scores(const std::vector<PropGraph>& gold,
                                  const std::vector<PropGraph>& pred,
                                  bool set_semantics = false) {
  using namespace oracle_detail;
  long long ei = 0, eg = 0, ep = 0, fi = 0, fg = 0, fp = 0;
  std::map<std::string, const PropGraph*> by_id;
  for (const auto& g : pred) by_id[g.sentence_id] = &g;
  for (const auto& g : gold) {
    const PropGraph& p = *by_id.at(g.sentence_id);
    auto ge = edge_bag(g, set_semantics), pe = edge_bag(p, set_semantics);
    auto gf = feature_bag(g, set_semantics), pf = feature_bag(p, set_semantics);
    ei += bag_intersection(ge, pe);
    eg += bag_size(ge);
    ep += bag_size(pe);
    fi += bag_intersection(gf, pf);
    fg += bag_size(gf);
    fp += bag_size(pf);
  }
  OracleScores s;
  s.las_p = ep ? double(ei) / ep : 1.0;
  s.las_r = eg ? double(ei) / eg : 1.0;
  s.feat_p = fp ? double(fi) / fp : 1.0;
  s.feat_r = fg ? double(fi) / fg : 1.0;
  return s;
}

}  // namespace props::testing

#endif  // PROPS_TESTS_SUPPORT_ORACLE_HPP_
