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

#ifndef PROPS_EXTRACTION_HPP_
#define PROPS_EXTRACTION_HPP_

// Flattening a proposition graph into an enumerable listing: one
// proposition per predicate or synthetic node, arguments ordered, nested
// propositions referenced by ordinal.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "props/dep_tree.hpp"
#include "props/errors.hpp"
#include "props/prop_graph.hpp"

namespace props {

struct PropositionArg {
  RelationLabel label;
  std::string attr;
  int node = -1;    // argument node id
  int nested = 0;   // nested proposition ordinal (1-based), 0 if plain
};

struct Proposition {
  int id = 0;  // 1-based listing ordinal
  int predicate = -1;
  std::string predicate_text;
  std::vector<PropositionArg> args;
  bool asserted = false;
};

inline bool proposition_node(const PropNode& n) {
  return n.kind == NodeKind::kPredicate || is_synthetic(n.kind);
}

namespace detail {

inline int proposition_sort_key(const PropGraph& g, const PropNode& n) {
  if (!n.span.empty()) return n.span.front();
  int best = std::numeric_limits<int>::max();
  for (const auto& e : g.edges) {
    if (e.source != n.id) continue;
    if (e.label != rel::kSameAsArg && e.label != rel::kSubj) continue;
    best = std::min(best, first_span_index(g.node(e.target)));
  }
  return best;
}

inline int arg_priority(const RelationLabel& l) {
  const std::string& n = l.name();
  if (n == "subj") return 0;
  if (n == "prop_of") return 1;
  if (n == "SameAs_arg") return 2;
  if (n == "dobj") return 3;
  if (n == "iobj") return 4;
  if (n == "prep") return 5;
  if (n == "time") return 6;
  if (n == "comp") return 7;
  if (n == "condition") return 8;
  if (n == "outcome") return 9;
  return 10;
}

}  // namespace detail

// One proposition per predicate/synthetic node, ordered by first span index
// (synthetic nodes take their first argument's span). Arguments pointing at
// other proposition nodes become nested references.
inline std::vector<Proposition> enumerate_propositions(const PropGraph& g) {
  std::vector<const PropNode*> preds;
  for (const auto& n : g.nodes)
    if (proposition_node(n)) preds.push_back(&n);
  std::stable_sort(preds.begin(), preds.end(),
                   [&](const PropNode* a, const PropNode* b) {
                     return std::pair(detail::proposition_sort_key(g, *a), a->id) <
                            std::pair(detail::proposition_sort_key(g, *b), b->id);
                   });

  std::map<int, int> ordinal;  // node id -> 1-based proposition id
  for (std::size_t i = 0; i < preds.size(); ++i)
    ordinal[preds[i]->id] = static_cast<int>(i) + 1;

  // Nested references must be acyclic.
  {
    std::map<int, int> state;
    std::vector<int> stack;
    for (const auto* p : preds) {
      if (state[p->id]) continue;
      stack.push_back(p->id);
      std::vector<std::pair<int, bool>> dfs = {{p->id, false}};
      while (!dfs.empty()) {
        auto [id, done] = dfs.back();
        dfs.pop_back();
        if (done) {
          state[id] = 2;
          continue;
        }
        if (state[id] == 2) continue;
        if (state[id] == 1)
          throw StructureError("cyclic predicate nesting at node " +
                               std::to_string(id));
        state[id] = 1;
        dfs.push_back({id, true});
        for (const auto& e : g.edges) {
          if (e.source != id || !predicate_argument(e.label)) continue;
          if (ordinal.count(e.target) && state[e.target] != 2) {
            if (state[e.target] == 1)
              throw StructureError("cyclic predicate nesting at node " +
                                   std::to_string(e.target));
            dfs.push_back({e.target, false});
          }
        }
      }
    }
  }

  std::vector<Proposition> out;
  for (const auto* pn : preds) {
    Proposition p;
    p.id = ordinal[pn->id];
    p.predicate = pn->id;
    p.asserted = pn->features.flag("asserted");

    // Coordinated predicates render joined by the coordinator.
    std::vector<const PropNode*> conjuncts;
    for (const auto& e : g.edges)
      if (e.source == pn->id && e.label == rel::kConj)
        conjuncts.push_back(&g.node(e.target));
    if (!conjuncts.empty() && pn->kind == NodeKind::kPredicate) {
      std::stable_sort(conjuncts.begin(), conjuncts.end(),
                       [](const PropNode* a, const PropNode* b) {
                         return first_span_index(*a) < first_span_index(*b);
                       });
      std::string joined;
      for (std::size_t i = 0; i < conjuncts.size(); ++i) {
        if (i) joined += "_" + head_text(*pn) + "_";
        joined += head_text(*conjuncts[i]);
      }
      p.predicate_text = joined;
    } else {
      p.predicate_text = head_text(*pn);
    }

    for (const auto& e : g.edges) {
      if (e.source != pn->id || !predicate_argument(e.label)) continue;
      PropositionArg a;
      a.label = e.label;
      a.attr = e.attr;
      a.node = e.target;
      // Clausal arguments of predicate nodes nest; everything else stays a
      // plain node reference even when the target happens to predicate.
      const std::string& l = e.label.name();
      bool clausal = l == "comp" || l == "condition" || l == "outcome";
      if (clausal && ordinal.count(e.target)) a.nested = ordinal[e.target];
      p.args.push_back(std::move(a));
    }
    std::stable_sort(p.args.begin(), p.args.end(),
                     [&](const PropositionArg& a, const PropositionArg& b) {
                       return std::tuple(detail::arg_priority(a.label),
                                         first_span_index(g.node(a.node)),
                                         a.attr) <
                              std::tuple(detail::arg_priority(b.label),
                                         first_span_index(g.node(b.node)),
                                         b.attr);
                     });
    out.push_back(std::move(p));
  }
  return out;
}

namespace detail {

// Ordered rendering pieces of a bound argument: token words plus the
// preposition words that live on prep edges rather than in any span.
struct BoundPiece {
  double position;
  std::string word;
  int token = 0;  // 0 for edge-borne words
};

inline void collect_bound(const PropGraph& g, int node_id, int exclude,
                          bool in_mod, std::set<int>& visited,
                          std::vector<BoundPiece>& out) {
  if (node_id == exclude || !visited.insert(node_id).second) return;
  const PropNode& n = g.node(node_id);
  for (int t : n.span) out.push_back({static_cast<double>(t), "", t});
  for (const auto& e : g.edges) {
    if (e.source != node_id) continue;
    const std::string& l = e.label.name();
    bool follow = l == "mod" || l == "prep" || l == "poss" || l == "conj";
    bool arg_of_bound_clause =
        in_mod && (l == "subj" || l == "dobj" || l == "iobj" || l == "time");
    if (!follow && !arg_of_bound_clause) continue;
    if (l == "prep" && !e.attr.empty() && e.target != exclude &&
        !visited.count(e.target)) {
      int anchor = first_span_index(g.node(e.target));
      out.push_back({anchor - 0.5, e.attr, 0});
    }
    collect_bound(g, e.target, exclude, l == "mod" ? true : in_mod, visited,
                  out);
  }
}

}  // namespace detail

// The full surface scope an argument node covers: its own span plus bound
// modifiers (mod, prep, poss, conj subtrees, and the arguments of bound
// relative-clause predicates). `exclude` keeps a predicate from appearing
// inside the rendering of its own argument.
inline std::vector<int> bound_span(const PropGraph& g, int node_id,
                                   int exclude = -1) {
  std::set<int> visited;
  std::vector<detail::BoundPiece> pieces;
  detail::collect_bound(g, node_id, exclude, false, visited, pieces);
  std::set<int> tokens;
  for (const auto& p : pieces)
    if (p.token != 0) tokens.insert(p.token);
  return std::vector<int>(tokens.begin(), tokens.end());
}

namespace detail {

inline std::string join_bound(const PropGraph& g, const DepTree* tree,
                              int node_id, int exclude) {
  std::set<int> visited;
  std::vector<BoundPiece> pieces;
  collect_bound(g, node_id, exclude, false, visited, pieces);
  for (auto& p : pieces) {
    if (p.token == 0) continue;
    if (tree) {
      p.word = tree->token(p.token).surface;
    } else {
      // Look the lemma up in the owning node's text.
      for (const auto& n : g.nodes) {
        if (n.duplicate_of) continue;
        auto it = std::find(n.span.begin(), n.span.end(), p.token);
        if (it == n.span.end()) continue;
        std::size_t word = static_cast<std::size_t>(it - n.span.begin());
        std::size_t begin = 0, seen = 0;
        for (std::size_t i = 0; i <= n.text.size(); ++i) {
          if (i == n.text.size() || n.text[i] == ' ') {
            if (seen == word) {
              p.word = n.text.substr(begin, i - begin);
              break;
            }
            ++seen;
            begin = i + 1;
          }
        }
        break;
      }
    }
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const BoundPiece& a, const BoundPiece& b) {
                     return a.position < b.position;
                   });
  std::string out;
  for (const auto& p : pieces) {
    if (p.word.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p.word;
  }
  return out;
}

}  // namespace detail

// Renders one argument: the bound scope of the node, lemmas when no tree is
// supplied, surfaces otherwise.
inline std::string render_argument(const PropGraph& g, int node_id,
                                   int exclude_pred = -1,
                                   const DepTree* tree = nullptr) {
  const PropNode& n = g.node(node_id);
  if (is_synthetic(n.kind)) return head_text(n);
  return detail::join_bound(g, tree, node_id, exclude_pred);
}

// "pred(arg1, arg2, ...) [asserted]" with nested propositions as "(n)".
// SameAs renders as "X is Y"; conditionals label their clauses. `pretty`
// switches conditionals to the prose form and arguments to surface forms.
inline std::string render_proposition(const PropGraph& g,
                                      const Proposition& p,
                                      const DepTree* tree = nullptr,
                                      bool pretty = false) {
  const DepTree* t = pretty ? tree : nullptr;
  auto arg_text = [&](const PropositionArg& a) -> std::string {
    if (a.nested > 0) return "(" + std::to_string(a.nested) + ")";
    // A non-clausal argument that is itself a predicate (stacked
    // predication) reads best as its head word.
    if (proposition_node(g.node(a.node)) && !g.node(a.node).span.empty() &&
        a.label != rel::kSameAsArg) {
      bool coordination = false;
      for (const auto& e : g.edges)
        if (e.source == a.node && e.label == rel::kConj) coordination = true;
      if (!coordination) return head_text(g.node(a.node));
    }
    return render_argument(g, a.node, p.predicate, t);
  };

  const PropNode& pred = g.node(p.predicate);
  std::ostringstream out;
  if (pred.kind == NodeKind::kSyntheticSameAs) {
    std::vector<std::string> sides;
    for (const auto& a : p.args)
      if (a.label == rel::kSameAsArg) sides.push_back(arg_text(a));
    if (sides.size() == 2) {
      out << sides[0] << " is " << sides[1];
    } else {
      out << "SameAs(";
      for (std::size_t i = 0; i < sides.size(); ++i)
        out << (i ? ", " : "") << sides[i];
      out << ")";
    }
  } else {
    bool conditional = false;
    for (const auto& a : p.args)
      if (a.label == rel::kCondition || a.label == rel::kOutcome)
        conditional = true;
    if (conditional && pretty && p.predicate_text == "because") {
      std::string c, o;
      for (const auto& a : p.args) {
        if (a.label == rel::kCondition) c = arg_text(a);
        if (a.label == rel::kOutcome) o = arg_text(a);
      }
      out << o << " happens because of " << c;
    } else {
      out << p.predicate_text << "(";
      bool first = true;
      for (const auto& a : p.args) {
        if (!first) out << ", ";
        first = false;
        const std::string& l = a.label.name();
        if (l == "condition" || l == "outcome") {
          out << l << "=" << arg_text(a);
        } else if (l == "prep") {
          out << "prep_" << a.attr << "=" << arg_text(a);
        } else if (l == "time") {
          out << "time=" << arg_text(a);
        } else {
          out << arg_text(a);
        }
      }
      out << ")";
    }
  }
  if (p.asserted) out << " [asserted]";
  return out.str();
}

inline std::string render_listing(const PropGraph& g,
                                  const DepTree* tree = nullptr,
                                  bool pretty = false) {
  std::ostringstream out;
  for (const Proposition& p : enumerate_propositions(g))
    out << "(" << p.id << ") " << render_proposition(g, p, tree, pretty)
        << "\n";
  return out.str();
}

}  // namespace props

#endif  // PROPS_EXTRACTION_HPP_
