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

// Regression corpus: each .conll sentence must convert to exactly the graph
// stored next to it (node kinds, spans, features, edges).

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "props/conll.hpp"
#include "props/converter.hpp"
#include "props/graph_json.hpp"

using namespace props;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("every regression sentence converts to its expected graph") {
  fs::path dir = fs::path(PROPS_DATA_DIR) / "regression";
  int cases = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".conll") continue;
    ++cases;
    INFO("case: " << entry.path().stem().string());
    auto trees = parse_conll(slurp(entry.path()));
    REQUIRE(trees.size() == 1);

    fs::path gold_path = entry.path();
    gold_path.replace_extension(".expected.json");
    PropGraph expected = deserialize_json(slurp(gold_path));

    auto result = convert(trees[0]);
    CHECK(serialize_json(canonical_form(result.graph)) ==
          serialize_json(canonical_form(expected)));

    // Conversion must be byte-deterministic.
    auto again = convert(trees[0]);
    CHECK(serialize_json(again.graph) == serialize_json(result.graph));
  }
  CHECK(cases == 27);
}

TEST_CASE("node count never exceeds tokens plus synthetic and duplicates") {
  fs::path dir = fs::path(PROPS_DATA_DIR) / "regression";
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".conll") continue;
    auto trees = parse_conll(slurp(entry.path()));
    auto g = convert(trees[0]).graph;
    int extra = 0;
    for (const auto& n : g.nodes)
      if (is_synthetic(n.kind) || n.duplicate_of) ++extra;
    CHECK(static_cast<int>(g.nodes.size()) <=
          static_cast<int>(trees[0].tokens.size()) + extra);
  }
}

TEST_CASE("regression outputs use only the closed label set") {
  fs::path dir = fs::path(PROPS_DATA_DIR) / "regression";
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".conll") continue;
    auto trees = parse_conll(slurp(entry.path()));
    auto g = convert(trees[0]).graph;
    for (const auto& e : g.edges) CHECK(e.label.is_core());
    CHECK(validate_graph(g).empty());
  }
}
