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

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>

#include "props/conll.hpp"

using namespace props;

TEST_CASE("one-token sentence parses to a single root tree") {
  auto trees = parse_conll(std::string("1\tdogs\tdog\tNNS\tNNS\t_\t0\troot\n\n"));
  REQUIRE(trees.size() == 1);
  const DepTree& t = trees[0];
  CHECK(t.sentence_id == "0");
  REQUIRE(t.tokens.size() == 1);
  CHECK(t.tokens[0].surface == "dogs");
  CHECK(t.tokens[0].lemma == "dog");
  CHECK(t.tokens[0].pos == "NNS");
  REQUIRE(t.arcs.size() == 1);
  CHECK(t.arcs[0].head == 0);
  CHECK(t.arcs[0].dependent == 1);
  CHECK(t.arcs[0].relation == "root");
}

TEST_CASE("blank lines separate sentences, order preserved") {
  std::string text =
      "1\ta\ta\tDT\t_\t_\t2\tdet\n"
      "2\tdog\tdog\tNN\t_\t_\t0\troot\n"
      "\n"
      "# sent_id = second\n"
      "1\tcats\tcat\tNNS\t_\t_\t0\troot\n"
      "\n";
  auto trees = parse_conll(text);
  REQUIRE(trees.size() == 2);
  CHECK(trees[0].sentence_id == "0");
  CHECK(trees[0].tokens.size() == 2);
  CHECK(trees[1].sentence_id == "second");
}

TEST_CASE("lemma underscore falls back to lowercased surface") {
  auto trees = parse_conll(std::string("1\tObama\t_\tNNP\tNNP\t_\t0\troot\n"));
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].tokens[0].lemma == "obama");
}

TEST_CASE("CRLF and space-separated hand files are accepted") {
  auto trees = parse_conll(std::string("1 dogs dog NNS NNS _ 0 root\r\n\r\n"));
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].tokens[0].lemma == "dog");
}

TEST_CASE("malformed lines report the line number") {
  CHECK_THROWS_AS(parse_conll(std::string("1\tdog\n")), ParseError);
  try {
    parse_conll(std::string("# ok\n1\tdogs\tdog\tNNS\tNNS\t_\tx\troot\n"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("structural violations are rejected at parse time") {
  // 1 <-> 2 cycle under a detached root.
  std::string cyclic =
      "1\ta\ta\tNN\t_\t_\t2\tdobj\n"
      "2\tb\tb\tNN\t_\t_\t1\tnsubj\n"
      "3\tc\tc\tNN\t_\t_\t0\troot\n";
  CHECK_THROWS_AS(parse_conll(cyclic), StructureError);

  std::string two_roots =
      "1\ta\ta\tNN\t_\t_\t0\troot\n"
      "2\tb\tb\tNN\t_\t_\t0\troot\n";
  CHECK_THROWS_AS(parse_conll(two_roots), StructureError);

  std::string dangling = "1\ta\ta\tNN\t_\t_\t7\tdep\n";
  CHECK_THROWS_AS(parse_conll(dangling), StructureError);
}

TEST_CASE("validate reports violations instead of throwing") {
  DepTree t;
  t.tokens = {{1, "a", "a", "NN", ""}, {2, "b", "b", "NN", ""}};
  t.arcs = {{2, 1, "dobj"}, {1, 2, "nsubj"}};
  ValidationResult r = validate(t);
  REQUIRE_FALSE(r.ok());
  bool mentions_cycle = false;
  for (const auto& v : r.violations)
    if (v.find("cycle") != std::string::npos) mentions_cycle = true;
  CHECK(mentions_cycle);

  DepTree good;
  good.tokens = {{1, "a", "a", "NN", ""}};
  good.arcs = {{0, 1, "root"}};
  CHECK(validate(good).ok());
}

// Independent well-formedness check used to vet the hand-authored tree
// below: one root, every head reachable from the root, all indices covered.
static bool independently_well_formed(const DepTree& t) {
  int n = static_cast<int>(t.tokens.size());
  std::map<int, std::vector<int>> deps;
  int root = -1, arcs = 0;
  for (const auto& a : t.arcs) {
    ++arcs;
    if (a.head == 0) {
      if (root != -1) return false;
      root = a.dependent;
    } else {
      if (a.head < 1 || a.head > n) return false;
      deps[a.head].push_back(a.dependent);
    }
    if (a.dependent < 1 || a.dependent > n) return false;
  }
  if (root == -1 || arcs != n) return false;
  std::vector<int> stack = {root};
  std::set<int> visited;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!visited.insert(v).second) return false;
    for (int d : deps[v]) stack.push_back(d);
  }
  return static_cast<int>(visited.size()) == n;
}

TEST_CASE("hand-authored Obama tree parses and round-trips") {
  // "Barack Obama the-less variant: Barack Obama , young candidate elided"
  // Seven tokens following Stanford conventions.
  std::string text =
      "# sent_id = obama\n"
      "1\tBarack\tBarack\tNNP\tNNP\t_\t2\tnn\n"
      "2\tObama\tObama\tNNP\tNNP\t_\t6\tnsubjpass\n"
      "3\tyoung\tyoung\tJJ\tJJ\t_\t4\tamod\n"
      "4\tcandidate\tcandidate\tNN\tNN\t_\t2\tappos\n"
      "5\twas\tbe\tVBD\tVBD\t_\t6\tauxpass\n"
      "6\telected\telect\tVBN\tVBN\t_\t0\troot\n"
      "7\tpresident\tpresident\tNN\tNN\t_\t6\tdobj\n"
      "\n";
  auto trees = parse_conll(text);
  REQUIRE(trees.size() == 1);
  CHECK(independently_well_formed(trees[0]));
  CHECK(validate(trees[0]).ok());

  std::string dumped = serialize_conll(trees[0]);
  auto reparsed = parse_conll(dumped);
  REQUIRE(reparsed.size() == 1);
  CHECK(reparsed[0].sentence_id == trees[0].sentence_id);
  REQUIRE(reparsed[0].tokens.size() == trees[0].tokens.size());
  for (std::size_t i = 0; i < trees[0].tokens.size(); ++i) {
    CHECK(reparsed[0].tokens[i].surface == trees[0].tokens[i].surface);
    CHECK(reparsed[0].tokens[i].lemma == trees[0].tokens[i].lemma);
    CHECK(reparsed[0].tokens[i].pos == trees[0].tokens[i].pos);
    CHECK(reparsed[0].tokens[i].fine_pos == trees[0].tokens[i].fine_pos);
  }
  for (std::size_t i = 0; i < trees[0].arcs.size(); ++i) {
    CHECK(reparsed[0].arcs[i].head == trees[0].arcs[i].head);
    CHECK(reparsed[0].arcs[i].dependent == trees[0].arcs[i].dependent);
    CHECK(reparsed[0].arcs[i].relation == trees[0].arcs[i].relation);
  }
}

TEST_CASE("parsing is deterministic") {
  std::string text =
      "1\tKim\tKim\tNNP\tNNP\t_\t2\tnsubj\n"
      "2\truns\trun\tVBZ\tVBZ\t_\t0\troot\n\n";
  auto a = parse_conll(text);
  auto b = parse_conll(text);
  CHECK(serialize_conll(a) == serialize_conll(b));
}
