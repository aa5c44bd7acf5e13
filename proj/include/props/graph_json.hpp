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

#ifndef PROPS_GRAPH_JSON_HPP_
#define PROPS_GRAPH_JSON_HPP_

// Canonical JSON form of a proposition graph, format_version 1.
//
// {"format_version":"1","sentence_id":"...",
//  "nodes":[{"id":0,"kind":"Predicate","span":[8,9],"text":"be elect",
//            "head":9,"features":{"passive":"true","tense":"past"},
//            "duplicate_of":3}, ...],
//  "edges":[{"source":0,"target":1,"label":"prep","attr":"in",
//            "propagated":true}, ...]}
//
// Nodes are sorted by (first span index, id) with synthetic nodes last,
// edges lexicographically; serialization is therefore byte-deterministic.
// "head", "duplicate_of", "attr" and "propagated" are omitted when absent.

#include <string>
#include <vector>

#include <json.hpp>

#include "props/errors.hpp"
#include "props/prop_graph.hpp"

namespace props {

inline std::string serialize_json(const PropGraph& g) {
  using json = nlohmann::ordered_json;
  json root;
  root["format_version"] = "1";
  root["sentence_id"] = g.sentence_id;

  std::vector<const PropNode*> order;
  for (const auto& n : g.nodes) order.push_back(&n);
  std::stable_sort(order.begin(), order.end(),
                   [](const PropNode* a, const PropNode* b) {
                     return std::pair(first_span_index(*a), a->id) <
                            std::pair(first_span_index(*b), b->id);
                   });

  root["nodes"] = json::array();
  for (const PropNode* n : order) {
    json jn;
    jn["id"] = n->id;
    jn["kind"] = to_string(n->kind);
    jn["span"] = n->span;
    jn["text"] = n->text;
    if (n->head != 0) jn["head"] = n->head;
    json feats = json::object();
    for (const auto& [k, v] : n->features) feats[k] = v;
    jn["features"] = feats;
    if (n->duplicate_of) jn["duplicate_of"] = *n->duplicate_of;
    root["nodes"].push_back(std::move(jn));
  }

  std::vector<PropEdge> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  root["edges"] = json::array();
  for (const auto& e : edges) {
    json je;
    je["source"] = e.source;
    je["target"] = e.target;
    je["label"] = e.label.name();
    if (!e.attr.empty()) je["attr"] = e.attr;
    if (e.propagated) je["propagated"] = true;
    root["edges"].push_back(std::move(je));
  }
  return root.dump();
}

inline PropGraph deserialize_json(const std::string& text) {
  using json = nlohmann::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }

  auto require = [&](const json& obj, const char* key, const char* where) -> const json& {
    auto it = obj.find(key);
    if (it == obj.end())
      throw SchemaError(std::string(where) + ": missing \"" + key + "\"");
    return *it;
  };

  if (!root.is_object()) throw SchemaError("$: expected an object");
  if (require(root, "format_version", "$").get<std::string>() != "1")
    throw SchemaError("$.format_version: unsupported version");

  PropGraph g;
  g.sentence_id = require(root, "sentence_id", "$").get<std::string>();

  const json& nodes = require(root, "nodes", "$");
  if (!nodes.is_array()) throw SchemaError("$.nodes: expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const json& jn = nodes[i];
    const std::string where = "$.nodes[" + std::to_string(i) + "]";
    if (!jn.is_object()) throw SchemaError(where + ": expected an object");
    PropNode n;
    n.id = require(jn, "id", where.c_str()).get<int>();
    std::string kind = require(jn, "kind", where.c_str()).get<std::string>();
    auto k = node_kind_from_string(kind);
    if (!k) throw SchemaError(where + ".kind: unknown kind '" + kind + "'");
    n.kind = *k;
    for (const auto& t : require(jn, "span", where.c_str()))
      n.span.push_back(t.get<int>());
    n.text = require(jn, "text", where.c_str()).get<std::string>();
    if (jn.contains("head")) n.head = jn["head"].get<int>();
    const json& feats = require(jn, "features", where.c_str());
    for (auto it = feats.begin(); it != feats.end(); ++it) {
      if (!FeatureMap::valid_entry(it.key(), it.value().get<std::string>()))
        throw SchemaError(where + ".features." + it.key() + ": bad value");
      n.features.set(it.key(), it.value().get<std::string>());
    }
    if (jn.contains("duplicate_of"))
      n.duplicate_of = jn["duplicate_of"].get<int>();
    g.nodes.push_back(std::move(n));
  }

  const json& edges = require(root, "edges", "$");
  if (!edges.is_array()) throw SchemaError("$.edges: expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& je = edges[i];
    const std::string where = "$.edges[" + std::to_string(i) + "]";
    PropEdge e;
    e.source = require(je, "source", where.c_str()).get<int>();
    e.target = require(je, "target", where.c_str()).get<int>();
    std::string label = require(je, "label", where.c_str()).get<std::string>();
    auto core = RelationLabel::core(label);
    if (!core)
      throw SchemaError(where + ".label: unknown relation label '" + label + "'");
    e.label = *core;
    if (je.contains("attr")) e.attr = je["attr"].get<std::string>();
    if (je.contains("propagated")) e.propagated = je["propagated"].get<bool>();
    g.edges.push_back(std::move(e));
  }

  std::vector<std::string> problems = validate_graph(g);
  if (!problems.empty()) {
    std::string msg = "structural error: ";
    for (std::size_t i = 0; i < problems.size(); ++i) {
      if (i) msg += "; ";
      msg += problems[i];
    }
    throw StructureError(msg);
  }
  return g;
}

}  // namespace props

#endif  // PROPS_GRAPH_JSON_HPP_
