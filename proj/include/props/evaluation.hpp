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

#ifndef PROPS_EVALUATION_HPP_
#define PROPS_EVALUATION_HPP_

// Span-based attachment and feature metrics. An edge counts as a triplet
// (head-span, mod-span, label); a feature as (span, key, value). Precision
// and recall are micro-averaged over the corpus: intersection sums divided
// by total sums, not means of per-sentence ratios. Intersections are
// multiset intersections by default so that duplicated propagated material
// is not over-credited; set semantics are available as an option.
//
// Synthetic nodes carry no tokens; they enter the triplet space through a
// sentinel key built from their kind and the span of their first argument,
// so that two graphs' synthetic nodes align exactly when their arguments
// align.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "props/errors.hpp"
#include "props/prop_graph.hpp"

namespace props {

struct SpanKey {
  std::vector<int> tokens;    // empty for synthetic nodes
  std::string sentinel;       // "SYN:<kind>:<anchor>" for synthetic nodes

  friend bool operator==(const SpanKey&, const SpanKey&) = default;
  friend auto operator<=>(const SpanKey& a, const SpanKey& b) {
    return std::tie(a.tokens, a.sentinel) <=> std::tie(b.tokens, b.sentinel);
  }
};

struct EdgeTriplet {
  SpanKey head;
  SpanKey mod;
  std::string label;

  friend bool operator==(const EdgeTriplet&, const EdgeTriplet&) = default;
  friend auto operator<=>(const EdgeTriplet& a, const EdgeTriplet& b) {
    return std::tie(a.head, a.mod, a.label) <=> std::tie(b.head, b.mod, b.label);
  }
};

struct FeatureTuple {
  SpanKey span;
  std::string key;
  std::string value;

  friend bool operator==(const FeatureTuple&, const FeatureTuple&) = default;
  friend auto operator<=>(const FeatureTuple& a, const FeatureTuple& b) {
    return std::tie(a.span, a.key, a.value) <=> std::tie(b.span, b.key, b.value);
  }
};

namespace eval_detail {

inline SpanKey span_key(const PropGraph& g, const PropNode& n) {
  SpanKey key;
  if (!is_synthetic(n.kind)) {
    key.tokens = n.span;
    return key;
  }
  // Anchor the synthetic node to its first argument's span.
  std::vector<int> anchor;
  bool found = false;
  for (const auto& e : g.edges) {
    if (e.source != n.id) continue;
    if (e.label != rel::kSameAsArg && e.label != rel::kSubj) continue;
    const PropNode& t = g.node(e.target);
    if (t.span.empty()) continue;
    if (!found || t.span < anchor) {
      anchor = t.span;
      found = true;
    }
  }
  std::string kind = n.kind == NodeKind::kSyntheticSameAs ? "SameAs" : "EXISTS";
  std::string spelled;
  for (int t : anchor) spelled += (spelled.empty() ? "" : ",") + std::to_string(t);
  key.sentinel = "SYN:" + kind + ":" + spelled;
  return key;
}

// Multiset intersection size of two sorted ranges.
template <typename T>
long long multiset_intersection(const std::vector<T>& a,
                                const std::vector<T>& b) {
  long long count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

template <typename T>
void dedupe(std::vector<T>* v) {
  v->erase(std::unique(v->begin(), v->end()), v->end());
}

}  // namespace eval_detail

// One triplet per edge, sorted (multiset as sorted vector).
inline std::vector<EdgeTriplet> edge_set(const PropGraph& g) {
  std::vector<EdgeTriplet> out;
  for (const auto& e : g.edges) {
    EdgeTriplet t;
    t.head = eval_detail::span_key(g, g.node(e.source));
    t.mod = eval_detail::span_key(g, g.node(e.target));
    t.label = e.label.name();
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// One tuple per node feature, sorted.
inline std::vector<FeatureTuple> feature_set(const PropGraph& g) {
  std::vector<FeatureTuple> out;
  for (const auto& n : g.nodes) {
    SpanKey key = eval_detail::span_key(g, n);
    for (const auto& [k, v] : n.features) out.push_back({key, k, v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact rational score; the decimal form is derived on demand.
struct Ratio {
  long long num = 0;
  long long den = 0;
  double value() const { return den == 0 ? 1.0 : double(num) / double(den); }
};

struct MetricScores {
  Ratio precision;
  Ratio recall;
  double f1() const {
    double p = precision.value(), r = recall.value();
    return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  }
};

struct LabelCounts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
};

struct EvalReport {
  MetricScores las;
  MetricScores feat;
  std::map<std::string, LabelCounts> per_label;
  int sentences = 0;
};

// Micro-averaged corpus evaluation; corpora align by sentence_id.
inline EvalReport evaluate_corpora(const std::vector<PropGraph>& gold,
                                   const std::vector<PropGraph>& pred,
                                   bool set_semantics = false) {
  std::map<std::string, const PropGraph*> gold_by_id, pred_by_id;
  for (const auto& g : gold) {
    if (!gold_by_id.emplace(g.sentence_id, &g).second)
      throw StructureError("duplicate sentence_id in gold: " + g.sentence_id);
  }
  for (const auto& g : pred) {
    if (!pred_by_id.emplace(g.sentence_id, &g).second)
      throw StructureError("duplicate sentence_id in system: " + g.sentence_id);
  }
  std::vector<std::string> missing, spurious;
  for (const auto& [id, _] : gold_by_id)
    if (!pred_by_id.count(id)) missing.push_back(id);
  for (const auto& [id, _] : pred_by_id)
    if (!gold_by_id.count(id)) spurious.push_back(id);
  if (!missing.empty() || !spurious.empty()) {
    std::string msg = "corpora are not aligned;";
    if (!missing.empty()) {
      msg += " missing from system:";
      for (const auto& id : missing) msg += " " + id;
    }
    if (!spurious.empty()) {
      msg += " absent from gold:";
      for (const auto& id : spurious) msg += " " + id;
    }
    throw StructureError(msg);
  }

  EvalReport report;
  report.sentences = static_cast<int>(gold.size());
  long long las_inter = 0, las_gold = 0, las_pred = 0;
  long long feat_inter = 0, feat_gold = 0, feat_pred = 0;

  for (const auto& [id, gptr] : gold_by_id) {
    const PropGraph& gg = *gptr;
    const PropGraph& pg = *pred_by_id.at(id);

    std::vector<EdgeTriplet> ge = edge_set(gg);
    std::vector<EdgeTriplet> pe = edge_set(pg);
    std::vector<FeatureTuple> gf = feature_set(gg);
    std::vector<FeatureTuple> pf = feature_set(pg);
    if (set_semantics) {
      eval_detail::dedupe(&ge);
      eval_detail::dedupe(&pe);
      eval_detail::dedupe(&gf);
      eval_detail::dedupe(&pf);
    }

    las_inter += eval_detail::multiset_intersection(ge, pe);
    las_gold += static_cast<long long>(ge.size());
    las_pred += static_cast<long long>(pe.size());
    feat_inter += eval_detail::multiset_intersection(gf, pf);
    feat_gold += static_cast<long long>(gf.size());
    feat_pred += static_cast<long long>(pf.size());

    // Per-label intersection counts.
    std::map<std::string, std::vector<EdgeTriplet>> gl, pl;
    for (const auto& t : ge) gl[t.label].push_back(t);
    for (const auto& t : pe) pl[t.label].push_back(t);
    std::set<std::string> labels;
    for (const auto& [l, _] : gl) labels.insert(l);
    for (const auto& [l, _] : pl) labels.insert(l);
    for (const auto& l : labels) {
      long long tp = eval_detail::multiset_intersection(gl[l], pl[l]);
      report.per_label[l].tp += tp;
      report.per_label[l].fp += static_cast<long long>(pl[l].size()) - tp;
      report.per_label[l].fn += static_cast<long long>(gl[l].size()) - tp;
    }
  }

  report.las.precision = {las_inter, las_pred};
  report.las.recall = {las_inter, las_gold};
  report.feat.precision = {feat_inter, feat_pred};
  report.feat.recall = {feat_inter, feat_gold};
  return report;
}

inline std::string report_table(const EvalReport& r) {
  char buf[256];
  std::ostringstream out;
  out << "              P        R        F1\n";
  std::snprintf(buf, sizeof buf, "Features      %.4f   %.4f   %.4f\n",
                r.feat.precision.value(), r.feat.recall.value(), r.feat.f1());
  out << buf;
  std::snprintf(buf, sizeof buf, "Modified LAS  %.4f   %.4f   %.4f\n",
                r.las.precision.value(), r.las.recall.value(), r.las.f1());
  out << buf;
  out << "sentences: " << r.sentences << "\n";
  return out.str();
}

}  // namespace props

#endif  // PROPS_EVALUATION_HPP_
