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

#include "props/converter.hpp"
#include "props/graph_json.hpp"
#include "support/graph_query.hpp"
#include "support/iso.hpp"

using namespace props;
using namespace props::testing;

namespace {

// "She saw a tall boy"
const char* kTallBoySeen =
    "1\tShe\tshe\tPRP\tPRP\t_\t2\tnsubj\n"
    "2\tsaw\tsee\tVBD\tVBD\t_\t0\troot\n"
    "3\ta\ta\tDT\tDT\t_\t5\tdet\n"
    "4\ttall\ttall\tJJ\tJJ\t_\t5\tamod\n"
    "5\tboy\tboy\tNN\tNN\t_\t2\tdobj\n";

// "She said that the boy is tall"
const char* kBoyIsTall =
    "1\tShe\tshe\tPRP\tPRP\t_\t2\tnsubj\n"
    "2\tsaid\tsay\tVBD\tVBD\t_\t0\troot\n"
    "3\tthat\tthat\tIN\tIN\t_\t7\tcomplm\n"
    "4\tthe\tthe\tDT\tDT\t_\t5\tdet\n"
    "5\tboy\tboy\tNN\tNN\t_\t7\tnsubj\n"
    "6\tis\tbe\tVBZ\tVBZ\t_\t7\tcop\n"
    "7\ttall\ttall\tJJ\tJJ\t_\t2\tccomp\n";

}  // namespace

TEST_CASE("prenominal adjective is both modifier and predicate") {
  auto g = convert_text(kTallBoySeen);
  // see(she, a tall boy)
  CHECK(edge_between(g, {2}, {1}, "subj"));
  CHECK(edge_between(g, {2}, {3, 5}, "dobj"));
  // tall(boy), restrictively bound
  CHECK(edge_between(g, {4}, {3, 5}, "prop_of"));
  CHECK(edge_between(g, {3, 5}, {4}, "mod"));
  const PropNode* tall = find_node(g, {4});
  REQUIRE(tall);
  CHECK(tall->kind == NodeKind::kPredicate);
  const PropNode* boy = find_node(g, {3, 5});
  REQUIRE(boy);
  CHECK(boy->features.get("definite") == "indefinite");
}

TEST_CASE("copular adjective predicates over the subject") {
  auto g = convert_text(kBoyIsTall);
  CHECK(edge_between(g, {2}, {1}, "subj"));
  // say -> comp -> tall
  CHECK(edge_between(g, {2}, {6, 7}, "comp"));
  CHECK(edge_between(g, {6, 7}, {4, 5}, "prop_of"));
  const PropNode* tall = find_node(g, {6, 7});
  REQUIRE(tall);
  CHECK(tall->kind == NodeKind::kPredicate);
  CHECK(tall->features.get("tense") == "present");
  const PropNode* boy = find_node(g, {4, 5});
  REQUIRE(boy);
  CHECK(boy->features.get("definite") == "definite");
  // "that" disappears entirely.
  for (const auto& n : g.nodes)
    for (int t : n.span) CHECK(t != 3);
}

TEST_CASE("nice man triple: copula, apposition and relative clause agree") {
  // (a) John, who is a nice man
  auto a = convert_text(
      "1\tJohn\tJohn\tNNP\tNNP\t_\t0\troot\n"
      "2\t,\t,\t,\t,\t_\t1\tpunct\n"
      "3\twho\twho\tWP\tWP\t_\t7\tnsubj\n"
      "4\tis\tbe\tVBZ\tVBZ\t_\t7\tcop\n"
      "5\ta\ta\tDT\tDT\t_\t7\tdet\n"
      "6\tnice\tnice\tJJ\tJJ\t_\t7\tamod\n"
      "7\tman\tman\tNN\tNN\t_\t1\trcmod\n");
  // (b) John is a nice man
  auto b = convert_text(
      "1\tJohn\tJohn\tNNP\tNNP\t_\t5\tnsubj\n"
      "2\tis\tbe\tVBZ\tVBZ\t_\t5\tcop\n"
      "3\ta\ta\tDT\tDT\t_\t5\tdet\n"
      "4\tnice\tnice\tJJ\tJJ\t_\t5\tamod\n"
      "5\tman\tman\tNN\tNN\t_\t0\troot\n");
  // (c) John, a nice man
  auto c = convert_text(
      "1\tJohn\tJohn\tNNP\tNNP\t_\t0\troot\n"
      "2\t,\t,\t,\t,\t_\t1\tpunct\n"
      "3\ta\ta\tDT\tDT\t_\t5\tdet\n"
      "4\tnice\tnice\tJJ\tJJ\t_\t5\tamod\n"
      "5\tman\tman\tNN\tNN\t_\t1\tappos\n");

  // All three: man(John) membership plus nice(man) restrictive.
  CHECK(edge_between(b, {2, 3, 5}, {1}, "prop_of"));
  CHECK(edge_between(b, {2, 3, 5}, {4}, "mod"));
  CHECK(edge_between(b, {4}, {2, 3, 5}, "prop_of"));
  CHECK(isomorphic_modulo_spans(a, b));
  CHECK(isomorphic_modulo_spans(b, c));
  // The appositive and relative variants assert the membership.
  const PropNode* man_a = find_node(a, {3, 4, 5, 7});
  REQUIRE(man_a);
  CHECK(man_a->features.flag("asserted"));
  const PropNode* man_c = find_node(c, {3, 5});
  REQUIRE(man_c);
  CHECK(man_c->features.flag("asserted"));
}

TEST_CASE("definite apposition synthesizes SameAs and propagates") {
  // "Barack Obama, the U.S. president, lives in Washington"
  auto g = convert_text(
      "1\tBarack\tBarack\tNNP\tNNP\t_\t2\tnn\n"
      "2\tObama\tObama\tNNP\tNNP\t_\t8\tnsubj\n"
      "3\t,\t,\t,\t,\t_\t2\tpunct\n"
      "4\tthe\tthe\tDT\tDT\t_\t6\tdet\n"
      "5\tU.S.\tU.S.\tNNP\tNNP\t_\t6\tnn\n"
      "6\tpresident\tpresident\tNN\tNN\t_\t2\tappos\n"
      "7\t,\t,\t,\t,\t_\t2\tpunct\n"
      "8\tlives\tlive\tVBZ\tVBZ\t_\t0\troot\n"
      "9\tin\tin\tIN\tIN\t_\t8\tprep\n"
      "10\tWashington\tWashington\tNNP\tNNP\t_\t9\tpobj\n");
  const PropNode* sameas = find_synthetic(g, NodeKind::kSyntheticSameAs);
  REQUIRE(sameas);
  CHECK(sameas->features.flag("asserted"));
  CHECK(has_edge(g, sameas->id, find_node(g, {1, 2})->id, "SameAs_arg"));
  CHECK(has_edge(g, sameas->id, find_node(g, {4, 5, 6})->id, "SameAs_arg"));
  CHECK(edge_between(g, {8}, {1, 2}, "subj"));
  CHECK(edge_between(g, {8}, {10}, "prep", "in"));
  // live propagates across the equivalence onto the president side.
  auto lives = find_nodes(g, {8});
  REQUIRE(lives.size() == 2);
  const PropNode* dup = lives[0]->duplicate_of ? lives[0] : lives[1];
  REQUIRE(dup->duplicate_of);
  CHECK(has_edge(g, dup->id, find_node(g, {4, 5, 6})->id, "subj"));
  CHECK(has_edge(g, dup->id, find_node(g, {10})->id, "prep", "in"));
  CHECK(dup->features.flag("asserted"));
}

TEST_CASE("indefinite apposition is membership, no SameAs") {
  // "Obama, an american citizen"
  auto g = convert_text(
      "1\tObama\tObama\tNNP\tNNP\t_\t0\troot\n"
      "2\t,\t,\t,\t,\t_\t1\tpunct\n"
      "3\tan\tan\tDT\tDT\t_\t5\tdet\n"
      "4\tamerican\tamerican\tJJ\tJJ\t_\t5\tamod\n"
      "5\tcitizen\tcitizen\tNN\tNN\t_\t1\tappos\n");
  CHECK(find_synthetic(g, NodeKind::kSyntheticSameAs) == nullptr);
  CHECK(edge_between(g, {3, 5}, {1}, "prop_of"));
  const PropNode* citizen = find_node(g, {3, 5});
  REQUIRE(citizen);
  CHECK(citizen->kind == NodeKind::kPredicate);
  CHECK(citizen->features.flag("asserted"));
}

TEST_CASE("existential there becomes EXISTS") {
  // "She says that there are signs for rain"
  auto g = convert_text(
      "1\tShe\tshe\tPRP\tPRP\t_\t2\tnsubj\n"
      "2\tsays\tsay\tVBZ\tVBZ\t_\t0\troot\n"
      "3\tthat\tthat\tIN\tIN\t_\t5\tcomplm\n"
      "4\tthere\tthere\tEX\tEX\t_\t5\texpl\n"
      "5\tare\tbe\tVBP\tVBP\t_\t2\tccomp\n"
      "6\tsigns\tsign\tNNS\tNNS\t_\t5\tnsubj\n"
      "7\tfor\tfor\tIN\tIN\t_\t6\tprep\n"
      "8\train\train\tNN\tNN\t_\t7\tpobj\n");
  const PropNode* ex = find_synthetic(g, NodeKind::kSyntheticExists);
  REQUIRE(ex);
  CHECK(ex->span.empty());
  CHECK(ex->features.get("tense") == "present");
  CHECK(has_edge(g, find_node(g, {2})->id, ex->id, "comp"));
  CHECK(has_edge(g, ex->id, find_node(g, {6})->id, "subj"));
  CHECK(edge_between(g, {6}, {8}, "prep", "for"));
}

TEST_CASE("conditional marker predicates over both clauses") {
  // (5a) "If you build it, they will come"
  auto a = convert_text(
      "1\tIf\tif\tIN\tIN\t_\t3\tmark\n"
      "2\tyou\tyou\tPRP\tPRP\t_\t3\tnsubj\n"
      "3\tbuild\tbuild\tVBP\tVBP\t_\t8\tadvcl\n"
      "4\tit\tit\tPRP\tPRP\t_\t3\tdobj\n"
      "5\t,\t,\t,\t,\t_\t8\tpunct\n"
      "6\tthey\tthey\tPRP\tPRP\t_\t8\tnsubj\n"
      "7\twill\twill\tMD\tMD\t_\t8\taux\n"
      "8\tcome\tcome\tVB\tVB\t_\t0\troot\n");

  const PropNode* marker = find_node(a, {1});
  REQUIRE(marker);
  CHECK(marker->kind == NodeKind::kPredicate);
  const PropNode* build = find_node(a, {3});
  REQUIRE(build);
  CHECK(has_edge(a, marker->id, build->id, "condition"));
  const PropNode* come = find_node(a, {7, 8});
  REQUIRE(come);
  CHECK(has_edge(a, marker->id, come->id, "outcome"));
  CHECK(come->features.get("tense") == "future");
  // if is non-factive: nothing asserted
  for (const auto& n : a.nodes) CHECK_FALSE(n.features.flag("asserted"));
}

TEST_CASE("clause order does not matter for conditionals") {
  auto a = convert_text(
      "1\tIf\tif\tIN\tIN\t_\t3\tmark\n"
      "2\tyou\tyou\tPRP\tPRP\t_\t3\tnsubj\n"
      "3\tbuild\tbuild\tVBP\tVBP\t_\t8\tadvcl\n"
      "4\tit\tit\tPRP\tPRP\t_\t3\tdobj\n"
      "5\t,\t,\t,\t,\t_\t8\tpunct\n"
      "6\tthey\tthey\tPRP\tPRP\t_\t8\tnsubj\n"
      "7\twill\twill\tMD\tMD\t_\t8\taux\n"
      "8\tcome\tcome\tVB\tVB\t_\t0\troot\n");
  auto b = convert_text(
      "1\tThey\tthey\tPRP\tPRP\t_\t3\tnsubj\n"
      "2\twill\twill\tMD\tMD\t_\t3\taux\n"
      "3\tcome\tcome\tVB\tVB\t_\t0\troot\n"
      "4\t,\t,\t,\t,\t_\t3\tpunct\n"
      "5\tif\tif\tIN\tIN\t_\t7\tmark\n"
      "6\tyou\tyou\tPRP\tPRP\t_\t7\tnsubj\n"
      "7\tbuild\tbuild\tVBP\tVBP\t_\t3\tadvcl\n"
      "8\tit\tit\tPRP\tPRP\t_\t7\tdobj\n");
  CHECK(isomorphic_modulo_spans(a, b));
}

TEST_CASE("because asserts both clauses") {
  // "Glaciers are melting because temperature rises"
  auto g = convert_text(
      "1\tGlaciers\tglacier\tNNS\tNNS\t_\t3\tnsubj\n"
      "2\tare\tbe\tVBP\tVBP\t_\t3\taux\n"
      "3\tmelting\tmelt\tVBG\tVBG\t_\t0\troot\n"
      "4\tbecause\tbecause\tIN\tIN\t_\t6\tmark\n"
      "5\ttemperature\ttemperature\tNN\tNN\t_\t6\tnsubj\n"
      "6\trises\trise\tVBZ\tVBZ\t_\t3\tadvcl\n");
  const PropNode* because = find_node(g, {4});
  REQUIRE(because);
  CHECK(because->kind == NodeKind::kPredicate);
  const PropNode* melt = find_node(g, {2, 3});
  const PropNode* rise = find_node(g, {6});
  REQUIRE(melt);
  REQUIRE(rise);
  CHECK(has_edge(g, because->id, melt->id, "outcome"));
  CHECK(has_edge(g, because->id, rise->id, "condition"));
  CHECK(melt->features.flag("asserted"));
  CHECK(rise->features.flag("asserted"));
  CHECK_FALSE(because->features.flag("asserted"));
}
