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

#ifndef PROPS_CONVERTER_HPP_
#define PROPS_CONVERTER_HPP_

// Rule-based conversion of Stanford dependency trees into proposition
// graphs. The pipeline is fixed:
//
//   masking          merge nn/mwe/prt chains, fold auxiliaries and negation
//                    into features, fold determiners into definiteness
//   predication      adjectival predication, SameAs / EXISTS synthesis,
//                    conditional markers as predicates
//   canonicalization argument label mapping, preposition collapse, passive
//                    normalization, adjectival complements
//   boundaries       restrictive vs. non-restrictive modification
//   heuristics       raising-to-subject, coordination restructuring,
//                    relation propagation, assertedness
//
// Rules communicate through a mutable workspace of nodes and labeled edges;
// labels start as Stanford relations and end in the closed output set.

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "props/config.hpp"
#include "props/dep_tree.hpp"
#include "props/errors.hpp"
#include "props/prop_graph.hpp"

namespace props {

struct TraceEntry {
  std::string rule;
  std::vector<int> tokens;
  std::string note;
};
using RuleTrace = std::vector<TraceEntry>;

struct ConversionResult {
  PropGraph graph;
  RuleTrace trace;
};

enum class CoordinationKind { kDistributive, kJoint };

namespace convert_detail {

inline std::string lc(std::string s) {
  for (char& c : s)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct WorkNode {
  int id = 0;
  NodeKind kind = NodeKind::kNonPredicate;
  std::set<int> span;
  FeatureMap feats;
  int head_token = 0;  // 0 for synthetic
  std::optional<int> duplicate_of;
  bool alive = true;

  // Construction bookkeeping read by later rules.
  bool demoted = false;            // modifier verb (source target); stays non-predicate
  bool copular_nominal = false;    // membership predication
  bool apposition_origin = false;
  bool detached = false;           // non-restrictive detachment
  bool clause_asserted = false;    // clause of a factive marker
  bool sameas_asserted = false;    // copy minted by appositive SameAs propagation
  bool coordination = false;
};

struct WorkEdge {
  int src = 0;
  int dst = 0;
  std::string label;
  std::string attr;
  bool propagated = false;
  bool from_xcomp = false;
  bool copular = false;  // prop_of evoked by copula/apposition/relative
  bool alive = true;
};

class Workspace {
 public:
  Workspace(const DepTree& tree, const ConverterConfig& cfg, RuleTrace& trace)
      : tree_(tree), cfg_(cfg), trace_(trace) {
    token_node_.assign(tree.tokens.size() + 1, -1);
    for (const Token& t : tree.tokens) {
      WorkNode n;
      n.id = next_id_++;
      n.span = {t.index};
      n.head_token = t.index;
      token_node_[t.index] = n.id;
      nodes_.push_back(std::move(n));
    }
    for (const DepArc& a : tree.arcs) {
      if (a.head == 0) {
        root_ = token_node_[a.dependent];
        continue;
      }
      WorkEdge e;
      e.src = token_node_[a.head];
      e.dst = token_node_[a.dependent];
      e.label = a.relation;
      edges_.push_back(std::move(e));
    }
  }

  const DepTree& tree() const { return tree_; }
  const ConverterConfig& cfg() const { return cfg_; }
  int root() const { return root_; }
  void set_root(int id) { root_ = id; }

  WorkNode& node(int id) { return nodes_[id]; }
  const WorkNode& node(int id) const { return nodes_[id]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int node_of(int token) const { return token_node_[token]; }

  WorkEdge& edge(int i) { return edges_[i]; }
  const WorkEdge& edge(int i) const { return edges_[i]; }

  std::vector<int> alive_edges() const {
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
      if (edges_[i].alive) ids.push_back(i);
    return ids;
  }

  std::vector<int> alive_nodes() const {
    std::vector<int> ids;
    for (const auto& n : nodes_)
      if (n.alive) ids.push_back(n.id);
    return ids;
  }

  std::vector<int> out(int node, const std::string& label = "") const {
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
      if (edges_[i].alive && edges_[i].src == node &&
          (label.empty() || edges_[i].label == label))
        ids.push_back(i);
    return ids;
  }

  std::vector<int> in(int node, const std::string& label = "") const {
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
      if (edges_[i].alive && edges_[i].dst == node &&
          (label.empty() || edges_[i].label == label))
        ids.push_back(i);
    return ids;
  }

  int first_out(int node, const std::string& label) const {
    auto ids = out(node, label);
    return ids.empty() ? -1 : ids[0];
  }

  int add_edge(int src, int dst, const std::string& label,
               const std::string& attr = "", bool propagated = false) {
    WorkEdge e;
    e.src = src;
    e.dst = dst;
    e.label = label;
    e.attr = attr;
    e.propagated = propagated;
    edges_.push_back(std::move(e));
    return static_cast<int>(edges_.size()) - 1;
  }

  void kill_edge(int i) { edges_[i].alive = false; }

  int new_node(NodeKind kind) {
    WorkNode n;
    n.id = next_id_++;
    n.kind = kind;
    nodes_.push_back(std::move(n));
    return nodes_.back().id;
  }

  // Token lookups go through the head token of a node.
  const Token& head_tok(int node_id) const {
    return tree_.token(nodes_[node_id].head_token);
  }
  std::string head_lemma(int node_id) const {
    return lc(head_tok(node_id).lemma);
  }
  std::string head_pos(int node_id) const {
    const Token& t = head_tok(node_id);
    return t.fine_pos.empty() ? t.pos : t.fine_pos;
  }

  // Folds `from` into `keep`: spans merge, edges re-point, self-loops die.
  // Features of `from` are dropped; callers move what they need first.
  void merge(int keep, int from) {
    if (keep == from) return;
    WorkNode& k = nodes_[keep];
    WorkNode& f = nodes_[from];
    for (int t : f.span) {
      k.span.insert(t);
      token_node_[t] = keep;
    }
    f.span.clear();
    f.alive = false;
    for (auto& e : edges_) {
      if (!e.alive) continue;
      if (e.src == from) e.src = keep;
      if (e.dst == from) e.dst = keep;
      if (e.src == e.dst) e.alive = false;
    }
    if (root_ == from) root_ = keep;
  }

  // Removes a node entirely; its tokens are released and incident edges die.
  void drop_node(int id) {
    WorkNode& n = nodes_[id];
    for (int t : n.span) token_node_[t] = -1;
    n.span.clear();
    n.alive = false;
    for (auto& e : edges_) {
      if (e.alive && (e.src == id || e.dst == id)) e.alive = false;
    }
    if (root_ == id) root_ = -1;
  }

  // Moves clause-level incoming edges (complements, adverbial clauses,
  // conjuncts) from one node to another when a construction changes heads.
  void repoint_clausal_incoming(int from, int to) {
    static const std::set<std::string> kClausal = {
        "ccomp", "xcomp", "comp",      "advcl", "conj", "cc",
        "dep",   "rcmod", "parataxis", "condition", "outcome"};
    for (auto& e : edges_) {
      if (!e.alive || e.dst != from) continue;
      if (kClausal.count(e.label)) {
        e.dst = to;
        if (e.src == e.dst) e.alive = false;
      }
    }
    if (root_ == from) root_ = to;
  }

  void trace(const std::string& rule, std::vector<int> tokens,
             const std::string& note) {
    trace_.push_back({rule, std::move(tokens), note});
  }

  std::vector<int> span_tokens(int node_id) const {
    const WorkNode& n = nodes_[node_id];
    return std::vector<int>(n.span.begin(), n.span.end());
  }

 private:
  const DepTree& tree_;
  const ConverterConfig& cfg_;
  RuleTrace& trace_;
  std::vector<WorkNode> nodes_;
  std::vector<WorkEdge> edges_;
  std::vector<int> token_node_;
  int next_id_ = 0;
  int root_ = -1;
};

inline bool pos_verb(const std::string& p) { return p.rfind("VB", 0) == 0; }
inline bool pos_noun(const std::string& p) { return p.rfind("NN", 0) == 0; }
inline bool pos_proper(const std::string& p) { return p == "NNP" || p == "NNPS"; }
inline bool pos_adjective(const std::string& p) {
  return p == "JJ" || p == "JJR" || p == "JJS";
}
inline bool pos_wh(const std::string& p) {
  return p == "WP" || p == "WDT" || p == "WP$" || p == "WRB";
}

inline bool definite_marked(const WorkNode& n, const char* value) {
  return n.feats.get("definite") == value;
}

inline void maybe_tense_from(Workspace& w, int node_id, const Token& t) {
  WorkNode& n = w.node(node_id);
  if (n.feats.has("tense")) return;
  const std::string& p = t.fine_pos.empty() ? t.pos : t.fine_pos;
  if (p == "VBD") n.feats.set("tense", "past");
  else if (p == "VBZ" || p == "VBP") n.feats.set("tense", "present");
}

// ---------------------------------------------------------------------------
// Masking

// Noun compounds (nn), multi-word expressions (mwe) and verb particles (prt)
// collapse into their governor's node.
inline void merge_multiword(Workspace& w) {
  for (const DepArc& a : w.tree().arcs) {
    if (a.head == 0) continue;
    if (a.relation != "nn" && a.relation != "mwe" && a.relation != "prt")
      continue;
    int hd = w.node_of(a.head);
    int dp = w.node_of(a.dependent);
    if (hd < 0 || dp < 0 || hd == dp) continue;
    w.merge(hd, dp);
    w.trace("M1.merge", {a.head, a.dependent}, a.relation);
  }
}

// Auxiliaries, negation and possessive clitics fold into the governor's
// feature map and span; tense falls back to the head's own morphology.
inline void extract_features(Workspace& w) {
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    const std::string& label = e.label;
    if (label != "aux" && label != "auxpass" && label != "neg" &&
        label != "possessive")
      continue;
    WorkNode& gov = w.node(e.src);
    const Token& tk = w.head_tok(e.dst);
    if (label == "neg") {
      gov.feats.set("negated", "true");
    } else if (label == "auxpass") {
      gov.feats.set("passive", "true");
      maybe_tense_from(w, e.src, tk);
    } else if (label == "aux") {
      const std::string fine = tk.fine_pos.empty() ? tk.pos : tk.fine_pos;
      const std::string lemma = lc(tk.lemma);
      if (fine == "MD") {
        if (lemma == "will" || lemma == "shall" || lemma == "wo" ||
            lemma == "'ll") {
          if (!gov.feats.has("tense")) gov.feats.set("tense", "future");
        } else {
          gov.feats.set("modal", lemma);
        }
      } else if (fine != "TO") {
        maybe_tense_from(w, e.src, tk);
      }
    }
    int src = e.src, dst = e.dst;
    w.merge(src, dst);
    w.trace("M2.fold", {w.node(src).head_token, tk.index}, label);
  }

  // going to + verb reduces to the verb with future tense.
  for (int ni : w.alive_nodes()) {
    if (!w.node(ni).alive) continue;
    if (w.head_lemma(ni) != "go" || w.head_pos(ni) != "VBG") continue;
    int xi = w.first_out(ni, "xcomp");
    if (xi < 0) continue;
    int target = w.edge(xi).dst;
    w.merge(target, ni);
    WorkNode& v = w.node(target);
    v.feats.erase("tense");
    v.feats.set("tense", "future");
    w.trace("M2.going_to", w.span_tokens(target), "future");
  }

  for (int ni : w.alive_nodes()) {
    const WorkNode& n = w.node(ni);
    if (!n.alive || n.head_token == 0) continue;
    if (pos_verb(w.head_pos(ni))) maybe_tense_from(w, ni, w.head_tok(ni));
  }
}

// Determiners fold into a definiteness feature; bare proper nouns count as
// definite.
inline void assign_definiteness(Workspace& w) {
  static const std::set<std::string> kDefinite = {"the", "this", "that",
                                                  "these", "those"};
  static const std::set<std::string> kIndefinite = {"a", "an", "some"};
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    if (e.label != "det") continue;
    WorkNode& gov = w.node(e.src);
    const std::string lemma = lc(w.head_tok(e.dst).lemma);
    if (kDefinite.count(lemma)) gov.feats.set("definite", "definite");
    else if (kIndefinite.count(lemma)) gov.feats.set("definite", "indefinite");
    int src = e.src, dst = e.dst;
    w.merge(src, dst);
    w.trace("M3.det", w.span_tokens(src), lemma);
  }
  for (int ni : w.alive_nodes()) {
    WorkNode& n = w.node(ni);
    if (!n.alive || n.head_token == 0) continue;
    if (!n.feats.has("definite") && pos_proper(w.head_pos(ni)))
      n.feats.set("definite", "definite");
  }
}

// ---------------------------------------------------------------------------
// Uniform predication

// Prenominal adjectives evoke a 1-ary predication over their noun. Only
// plain adjectives predicate; comparatives and superlatives stay modifiers.
// The restrictive mod edge is decided later, with the boundary rules.
inline void predicate_adjectives(Workspace& w,
                                 std::vector<std::pair<int, int>>* pending_mod) {
  for (int ei : w.alive_edges()) {
    WorkEdge& e = w.edge(ei);
    if (!e.alive || e.label != "amod") continue;
    int noun = e.src, adj = e.dst;
    if (w.head_pos(adj) != "JJ") continue;
    w.node(adj).kind = NodeKind::kPredicate;
    e.src = adj;
    e.dst = noun;
    e.label = "prop_of";
    pending_mod->push_back({noun, adj});
    w.trace("U1.amod", {w.node(adj).head_token, w.node(noun).head_token},
            "adjectival predication");
  }
}

// Copular constructions. Adjectival predicates take prop_of directly;
// nominal predicates split into equivalence (synthetic SameAs) and
// class-membership (prop_of), cued by explicit indefiniteness and by the
// syntactic category of both sides.
inline void predicate_copulas(Workspace& w) {
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    if (!e.alive || e.label != "cop") continue;
    int pred = e.src;
    const Token& be = w.head_tok(e.dst);
    maybe_tense_from(w, pred, be);
    w.merge(pred, e.dst);

    int sidx = w.first_out(pred, "nsubj");
    if (sidx < 0) {
      w.trace("U1.cop", w.span_tokens(pred), "no subject; left in place");
      continue;
    }
    int subj = w.edge(sidx).dst;
    const std::string ppos = w.head_pos(pred);
    const std::string spos = w.head_pos(subj);

    bool nominal_pair = pos_noun(ppos) && (pos_noun(spos) || spos == "PRP");
    bool wh_subject = pos_wh(spos);
    bool either_indefinite = definite_marked(w.node(pred), "indefinite") ||
                             definite_marked(w.node(subj), "indefinite");

    if (nominal_pair && !wh_subject && !either_indefinite) {
      // Equivalence: synthesize SameAs over both sides.
      int sa = w.new_node(NodeKind::kSyntheticSameAs);
      if (auto t = w.node(pred).feats.get("tense")) {
        w.node(sa).feats.set("tense", *t);
        w.node(pred).feats.erase("tense");
      }
      w.kill_edge(sidx);
      w.repoint_clausal_incoming(pred, sa);
      w.add_edge(sa, subj, "SameAs_arg");
      w.add_edge(sa, pred, "SameAs_arg");
      w.trace("U2.cop_equiv", w.span_tokens(pred), "SameAs");
    } else if (pos_noun(ppos)) {
      // Membership: the predicate nominal heads a prop_of predication.
      WorkNode& p = w.node(pred);
      p.kind = NodeKind::kPredicate;
      p.copular_nominal = true;
      WorkEdge& s = w.edge(sidx);
      s.label = "prop_of";
      s.copular = true;
      w.trace("U1.cop_member", w.span_tokens(pred), "prop_of");
    } else {
      // Adjectival (or other predicative) copula.
      w.node(pred).kind = NodeKind::kPredicate;
      WorkEdge& s = w.edge(sidx);
      s.label = "prop_of";
      s.copular = true;
      w.trace("U1.cop_adj", w.span_tokens(pred), "prop_of");
    }
  }
}

// Appositions mirror the copular split: equivalence becomes SameAs,
// membership an apposition-derived prop_of predication.
inline void predicate_appositions(Workspace& w) {
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    if (!e.alive || e.label != "appos") continue;
    int left = e.src, right = e.dst;
    bool either_indefinite = definite_marked(w.node(left), "indefinite") ||
                             definite_marked(w.node(right), "indefinite");
    bool nominal_pair = pos_noun(w.head_pos(left)) && pos_noun(w.head_pos(right));

    if (nominal_pair && !either_indefinite) {
      int sa = w.new_node(NodeKind::kSyntheticSameAs);
      w.node(sa).apposition_origin = true;
      w.kill_edge(ei);
      w.add_edge(sa, left, "SameAs_arg");
      w.add_edge(sa, right, "SameAs_arg");
      w.trace("U2.appos_equiv",
              {w.node(left).head_token, w.node(right).head_token}, "SameAs");
    } else {
      WorkNode& r = w.node(right);
      r.kind = NodeKind::kPredicate;
      r.copular_nominal = true;
      r.apposition_origin = true;
      WorkEdge& edge = w.edge(ei);
      edge.src = right;
      edge.dst = left;
      edge.label = "prop_of";
      edge.copular = true;
      w.trace("U1.appos_member",
              {w.node(left).head_token, w.node(right).head_token}, "prop_of");
    }
  }
}

// Existentials: "there is/are X" becomes a synthetic EXISTS predicate whose
// subject is the logical subject.
inline void synthesize_existentials(Workspace& w) {
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    if (!e.alive || e.label != "expl") continue;
    int be = e.src, there = e.dst;
    int ex = w.new_node(NodeKind::kSyntheticExists);
    if (auto t = w.node(be).feats.get("tense"))
      w.node(ex).feats.set("tense", *t);
    w.kill_edge(ei);
    w.drop_node(there);
    for (auto idx : w.out(be)) w.edge(idx).src = ex;
    for (auto idx : w.in(be)) w.edge(idx).dst = ex;
    if (w.root() == be) w.set_root(ex);
    w.drop_node(be);
    w.trace("U2.exists", {}, "EXISTS");
  }
}

// Conditional constructions: the marker word becomes a predicate over both
// clauses. Factive markers assert both clauses.
inline void mark_conditionals(Workspace& w) {
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    if (!e.alive || e.label != "advcl") continue;
    int main = e.src, clause = e.dst;
    int mi = w.first_out(clause, "mark");
    if (mi < 0) continue;
    int marker = w.edge(mi).dst;
    const std::string lemma = w.head_lemma(marker);
    bool asserting = w.cfg().asserting_markers.count(lemma) > 0;
    if (!asserting && !w.cfg().nonasserting_markers.count(lemma)) continue;

    w.node(marker).kind = NodeKind::kPredicate;
    w.kill_edge(mi);
    w.kill_edge(ei);
    w.repoint_clausal_incoming(main, marker);
    w.add_edge(marker, clause, "condition");
    w.add_edge(marker, main, "outcome");
    if (asserting) {
      w.node(clause).clause_asserted = true;
      w.node(main).clause_asserted = true;
    }
    w.trace("U3.conditional", {w.node(marker).head_token}, lemma);
  }
}

// ---------------------------------------------------------------------------
// Canonicalization

// Argument mapping: Stanford argument relations onto the output label set,
// prepositions collapsed into attributed prep edges, temporal expressions
// routed to time, passives normalized.
inline void map_arguments(Workspace& w) {
  // Non-content material drops out entirely.
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    if (!e.alive) continue;
    if (e.label == "punct" || e.label == "complm" || e.label == "mark" ||
        e.label == "expl") {
      int dep = e.dst;
      w.kill_edge(ei);
      if (w.in(dep).empty() && w.out(dep).empty()) {
        w.trace("C1.drop", w.span_tokens(dep), e.label);
        w.drop_node(dep);
      }
    }
  }

  for (int ei : w.alive_edges()) {
    WorkEdge& e = w.edge(ei);
    if (!e.alive) continue;
    const std::string label = e.label;
    if (label == "nsubj" || label == "csubj") {
      e.label = "subj";
    } else if (label == "nsubjpass" || label == "csubjpass") {
      e.label = "dobj";
      w.node(e.src).feats.set("passive", "true");
    } else if (label == "dobj" || label == "iobj" || label == "poss") {
      // already the output label
    } else if (label == "ccomp") {
      e.label = "comp";
    } else if (label == "xcomp") {
      e.label = "comp";
      e.from_xcomp = true;
    } else if (label == "tmod") {
      e.label = "time";
    } else if (label == "advmod") {
      e.label = w.cfg().temporal_words.count(w.head_lemma(e.dst)) ? "time" : "mod";
    } else if (label == "amod") {
      e.label = "mod";  // comparatives and leftovers
    } else if (label == "prep") {
      int pnode = e.dst;
      int pobj = w.first_out(pnode, "pobj");
      if (pobj < 0) pobj = w.first_out(pnode, "pcomp");
      if (pobj < 0) {
        w.trace("C1.warn", w.span_tokens(pnode), "stranded preposition dropped");
        w.kill_edge(ei);
        w.drop_node(pnode);
        continue;
      }
      int obj = w.edge(pobj).dst;
      const std::string plemma = w.head_lemma(pnode);
      bool temporal = w.cfg().temporal_words.count(w.head_lemma(obj)) > 0;
      int src = e.src;
      w.kill_edge(ei);
      w.kill_edge(pobj);
      w.drop_node(pnode);
      w.add_edge(src, obj, temporal ? "time" : "prep", plemma);
    } else if (label == "pobj") {
      w.trace("C1.warn", w.span_tokens(e.dst), "orphaned pobj dropped");
      w.kill_edge(ei);
    }
  }

  // Passive agent: a by-phrase on a passive predicate is its subject.
  for (int ni : w.alive_nodes()) {
    if (!w.node(ni).alive || !w.node(ni).feats.flag("passive")) continue;
    for (int ei : w.out(ni, "prep")) {
      WorkEdge& e = w.edge(ei);
      if (e.attr == "by") {
        e.label = "subj";
        e.attr.clear();
        w.trace("C1.agent", w.span_tokens(e.dst), "by-phrase to subj");
      }
    }
  }
}

// Adjectival complements: the adjective takes over as predicate; the verb
// becomes a source modifier keeping its own features.
inline void adjectival_complements(Workspace& w) {
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    if (!e.alive || e.label != "acomp") continue;
    int verb = e.src, adj = e.dst;
    w.node(adj).kind = NodeKind::kPredicate;
    for (int oi : w.out(verb)) {
      if (oi == ei) continue;
      WorkEdge& oe = w.edge(oi);
      if (oe.label == "subj") {
        oe.src = adj;
        oe.label = "prop_of";
        oe.copular = true;
      } else {
        oe.src = adj;
      }
    }
    w.repoint_clausal_incoming(verb, adj);
    w.kill_edge(ei);
    w.add_edge(adj, verb, "source");
    WorkNode& v = w.node(verb);
    v.kind = NodeKind::kNonPredicate;
    v.demoted = true;
    w.trace("C2.acomp", {w.node(adj).head_token, v.head_token},
            "adjective predicates, verb is source");
  }
}

// Modification boundaries. Relative clauses are gap-filled with their
// antecedent; properness of the modified entity decides restrictive
// (mod-bound) versus non-restrictive (detached predication). Pending
// prenominal predications from U1 get their mod edge under the same test.
inline void modification_boundaries(
    Workspace& w, const std::vector<std::pair<int, int>>& pending_mod) {
  for (int ei : w.alive_edges()) {
    WorkEdge& e = w.edge(ei);
    if (!e.alive || e.label != "rcmod") continue;
    int ant = e.src, cpred = e.dst;

    // Fill the relativized gap with the antecedent.
    static const std::set<std::string> kGapLabels = {"subj", "dobj", "iobj",
                                                     "prop_of", "prep"};
    bool filled = false;
    for (int oi : w.out(cpred)) {
      WorkEdge& oe = w.edge(oi);
      if (!oe.alive || !kGapLabels.count(oe.label)) continue;
      int t = oe.dst;
      if (t == ant) continue;
      const WorkNode& tn = w.node(t);
      if (tn.head_token == 0) continue;
      const std::string lemma = w.head_lemma(t);
      if (pos_wh(w.head_pos(t)) || lemma == "that") {
        oe.dst = ant;
        w.merge(cpred, t);  // relative pronoun joins the clause span
        filled = true;
        break;
      }
    }
    if (!filled) {
      bool has_subject = !w.out(cpred, "subj").empty() ||
                         !w.out(cpred, "prop_of").empty();
      w.add_edge(cpred, ant, has_subject ? "dobj" : "subj");
    }

    if (pos_proper(w.head_pos(ant))) {
      w.kill_edge(ei);
      w.node(cpred).detached = true;
      w.trace("C4.rcmod", {w.node(ant).head_token}, "non-restrictive, detached");
    } else {
      e.label = "mod";
      w.trace("C4.rcmod", {w.node(ant).head_token}, "restrictive, mod-bound");
    }
  }

  for (auto [noun, adj] : pending_mod) {
    if (!w.node(noun).alive || !w.node(adj).alive) continue;
    if (pos_proper(w.head_pos(noun))) {
      w.node(adj).detached = true;
      w.trace("C4.amod", {w.node(noun).head_token}, "non-restrictive, detached");
    } else {
      w.add_edge(noun, adj, "mod");
      w.trace("C4.amod", {w.node(noun).head_token}, "restrictive, mod-bound");
    }
  }
}

// ---------------------------------------------------------------------------
// Heuristics

// Raising-to-subject: for lexicon verbs the complement becomes the main
// predicate and the verb turns into a source modifier. Everything else
// keeps the nested comp representation; those complements then inherit a
// controlled subject from their governor (object if present, else subject).
inline void raising_and_control(Workspace& w) {
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    if (!e.alive || e.label != "comp" || !e.from_xcomp) continue;
    int gov = e.src, comp = e.dst;
    if (w.node(gov).demoted || w.node(gov).head_token == 0) continue;
    if (!pos_verb(w.head_pos(gov))) continue;
    if (!w.cfg().raising_verbs.count(w.head_lemma(gov))) continue;

    bool comp_adjectival = pos_adjective(w.head_pos(comp));
    for (int oi : w.out(gov)) {
      if (oi == ei) continue;
      WorkEdge& oe = w.edge(oi);
      if (!oe.alive) continue;
      if (oe.label == "subj") {
        bool has = !w.out(comp, "subj").empty() || !w.out(comp, "prop_of").empty();
        if (has) {
          w.kill_edge(oi);
        } else {
          oe.src = comp;
          if (comp_adjectival) {
            oe.label = "prop_of";
            oe.copular = true;
          }
        }
      } else {
        oe.src = comp;
      }
    }
    w.repoint_clausal_incoming(gov, comp);
    w.kill_edge(ei);
    w.add_edge(comp, gov, "source");
    WorkNode& g = w.node(gov);
    g.kind = NodeKind::kNonPredicate;
    g.demoted = true;
    w.trace("H1.raising", {w.node(comp).head_token, g.head_token},
            w.head_lemma(gov));
  }

  // Control: remaining open complements share their governor's argument.
  for (int ei : w.alive_edges()) {
    const WorkEdge e = w.edge(ei);
    if (!e.alive || e.label != "comp" || !e.from_xcomp) continue;
    int gov = e.src, comp = e.dst;
    if (!w.out(comp, "subj").empty() || !w.out(comp, "prop_of").empty())
      continue;
    int controller = -1;
    if (int d = w.first_out(gov, "dobj"); d >= 0) controller = w.edge(d).dst;
    else if (int s = w.first_out(gov, "subj"); s >= 0) controller = w.edge(s).dst;
    else if (int p = w.first_out(gov, "prop_of"); p >= 0) controller = w.edge(p).dst;
    if (controller < 0 || controller == comp) continue;
    bool comp_adjectival =
        w.node(comp).head_token != 0 && pos_adjective(w.head_pos(comp));
    int ne = w.add_edge(comp, controller, comp_adjectival ? "prop_of" : "subj");
    w.edge(ne).copular = comp_adjectival;
    w.trace("H1.control",
            {w.node(comp).head_token == 0 ? 0 : w.node(comp).head_token},
            "controlled subject");
  }
}

// Prague-style coordination: the coordinator becomes the structure's main
// node, conjuncts hang off it with conj edges, and the first conjunct's
// external relations move to the coordination node.
inline void restructure_coordination(Workspace& w) {
  static const std::set<std::string> kArgIncoming = {
      "subj", "dobj", "iobj", "comp",      "prep",
      "time", "poss", "condition", "outcome", "SameAs_arg"};
  static const std::set<std::string> kArgOutgoing = {
      "subj", "dobj", "iobj", "comp", "prep", "time", "poss",
      "condition", "outcome"};

  std::vector<int> governors;
  for (int ni : w.alive_nodes())
    if (!w.out(ni, "cc").empty()) governors.push_back(ni);

  for (int g : governors) {
    if (!w.node(g).alive) continue;
    std::vector<int> ccs = w.out(g, "cc");
    std::vector<int> conjs = w.out(g, "conj");
    if (conjs.empty()) {
      for (int ci : ccs) {
        int coord = w.edge(ci).dst;
        w.kill_edge(ci);
        w.trace("H2.warn", w.span_tokens(coord), "cc without conjunct");
        if (w.in(coord).empty() && w.out(coord).empty()) w.drop_node(coord);
      }
      continue;
    }
    int coord = w.edge(ccs.back()).dst;
    for (int ci : ccs) {
      int c = w.edge(ci).dst;
      w.kill_edge(ci);
      if (c != coord && w.in(c).empty() && w.out(c).empty()) w.drop_node(c);
    }

    std::vector<int> members = {g};
    for (int ci : conjs) {
      members.push_back(w.edge(ci).dst);
      w.kill_edge(ci);
    }
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      auto sa = w.node(a).span.empty() ? std::numeric_limits<int>::max()
                                       : *w.node(a).span.begin();
      auto sb = w.node(b).span.empty() ? std::numeric_limits<int>::max()
                                       : *w.node(b).span.begin();
      return std::tuple(sa, a) < std::tuple(sb, b);
    });

    bool predicate_members = false;
    for (int m : members) {
      const WorkNode& mn = w.node(m);
      if (mn.kind == NodeKind::kPredicate ||
          (mn.head_token != 0 && pos_verb(w.head_pos(m)) && !mn.demoted))
        predicate_members = true;
    }
    WorkNode& c = w.node(coord);
    c.coordination = true;
    if (predicate_members) {
      c.kind = NodeKind::kPredicate;
      for (int m : members)
        if (!w.node(m).demoted && !is_synthetic(w.node(m).kind))
          w.node(m).kind = NodeKind::kPredicate;
    }

    for (int ii : w.in(g)) {
      WorkEdge& e = w.edge(ii);
      if (kArgIncoming.count(e.label) ||
          (e.label == "prop_of" && e.copular)) {
        e.dst = coord;
        if (e.src == e.dst) e.alive = false;
      }
    }
    for (int oi : w.out(g)) {
      WorkEdge& e = w.edge(oi);
      if (kArgOutgoing.count(e.label) ||
          (e.label == "prop_of" && e.copular)) {
        e.src = coord;
        if (e.src == e.dst) e.alive = false;
      }
    }
    for (int m : members) w.add_edge(coord, m, "conj");
    if (w.root() == g) w.set_root(coord);
    w.trace("H2.coordination", {w.node(coord).head_token},
            std::to_string(members.size()) + " conjuncts");
  }
}

inline bool predicate_like(const Workspace& w, int ni) {
  const WorkNode& n = w.node(ni);
  if (n.kind == NodeKind::kPredicate || is_synthetic(n.kind)) return true;
  if (n.demoted || n.head_token == 0) return false;
  return pos_verb(w.head_pos(ni));
}

// Relation propagation over coordination and SameAs structures. Works on a
// snapshot of the pre-propagation edges: propagated edges never propagate
// again. New edges carry the propagated flag; predicate copies carry
// duplicate_of, so stripping both restores the input graph exactly.
inline void propagate_relations(Workspace& w) {
  static const std::set<std::string> kArgLabels = {
      "subj", "dobj", "iobj", "comp",      "prep",   "time",
      "poss", "prop_of", "condition", "outcome"};

  struct Snap {
    int idx, src, dst;
    std::string label, attr;
  };
  std::vector<Snap> snapshot;
  for (int ei : w.alive_edges()) {
    const WorkEdge& e = w.edge(ei);
    if (!e.propagated)
      snapshot.push_back({ei, e.src, e.dst, e.label, e.attr});
  }

  auto duplicate_with_edges = [&](int pid, int skip_idx) {
    const WorkNode p = w.node(pid);  // copy: new_node may reallocate
    int d = w.new_node(p.kind);
    WorkNode& dn = w.node(d);
    dn.span = p.span;
    dn.head_token = p.head_token;
    dn.feats = p.feats;
    dn.duplicate_of = p.duplicate_of ? *p.duplicate_of : pid;
    dn.copular_nominal = p.copular_nominal;
    dn.apposition_origin = p.apposition_origin;
    dn.detached = p.detached;
    dn.clause_asserted = p.clause_asserted;
    for (const Snap& s : snapshot) {
      if (s.idx == skip_idx || s.src != pid) continue;
      if (!w.edge(s.idx).alive) continue;
      w.add_edge(d, s.dst, s.label, s.attr, /*propagated=*/true);
    }
    return d;
  };

  // Coordination propagation.
  for (int ci : w.alive_nodes()) {
    WorkNode& cn = w.node(ci);
    if (!cn.alive || !cn.coordination) continue;

    std::vector<int> conjuncts;
    for (const Snap& s : snapshot)
      if (s.src == ci && s.label == "conj" && w.edge(s.idx).alive)
        conjuncts.push_back(s.dst);
    if (conjuncts.size() < 2) continue;

    // Joint coordination: the relation holds of the combination only.
    bool joint = false;
    for (const Snap& s : snapshot) {
      if (s.dst != ci || !w.edge(s.idx).alive) continue;
      if (s.label == "prop_of" && w.node(s.src).copular_nominal) {
        const std::string p = w.head_pos(s.src);
        if (p == "NN" || p == "NNP") joint = true;
      }
      if (s.label == "subj" &&
          w.cfg().collective_verbs.count(w.head_lemma(s.src)))
        joint = true;
    }
    if (joint) {
      w.trace("H3.joint", w.span_tokens(ci), "no propagation");
      continue;
    }

    int added = 0;
    std::vector<int> staged_edges;
    std::vector<int> staged_nodes;
    bool aborted = false;

    // Relations the coordination node holds distribute onto each conjunct.
    for (const Snap& s : snapshot) {
      if (aborted) break;
      if (s.src != ci || s.label == "conj" || !w.edge(s.idx).alive) continue;
      if (!kArgLabels.count(s.label) && s.label != "mod") continue;
      for (int m : conjuncts) {
        if (m == s.dst) continue;
        staged_edges.push_back(w.add_edge(m, s.dst, s.label, s.attr, true));
        if (++added > w.cfg().propagation_cap) aborted = true;
      }
    }
    // Predicates taking the coordination as an argument duplicate per
    // conjunct, keeping the combined reading on the original.
    for (const Snap& s : snapshot) {
      if (aborted) break;
      if (s.dst != ci || !w.edge(s.idx).alive) continue;
      if (!kArgLabels.count(s.label)) continue;
      if (!predicate_like(w, s.src)) continue;
      for (int m : conjuncts) {
        int d = duplicate_with_edges(s.src, s.idx);
        staged_nodes.push_back(d);
        staged_edges.push_back(w.add_edge(d, m, s.label, s.attr, true));
        added += 1 + static_cast<int>(w.out(d).size());
        if (added > w.cfg().propagation_cap) aborted = true;
      }
    }

    if (aborted) {
      for (int e : staged_edges) w.kill_edge(e);
      for (int n : staged_nodes) w.drop_node(n);
      w.trace("H3.abort", w.span_tokens(ci), "propagation cap exceeded");
    } else if (added > 0) {
      w.trace("H3.distribute", w.span_tokens(ci),
              std::to_string(added) + " propagated edges");
    }
  }

  // SameAs propagation: a relation held by one argument of an equivalence
  // holds of the other; the predicate is copied per new proposition.
  for (int si : w.alive_nodes()) {
    const WorkNode& sn = w.node(si);
    if (!sn.alive || sn.kind != NodeKind::kSyntheticSameAs || sn.duplicate_of)
      continue;
    std::vector<int> args;
    for (const Snap& s : snapshot)
      if (s.src == si && s.label == "SameAs_arg" && w.edge(s.idx).alive)
        args.push_back(s.dst);
    if (args.size() < 2) continue;

    int added = 0;
    std::vector<int> staged_edges;
    std::vector<int> staged_nodes;
    bool aborted = false;
    std::set<std::tuple<int, std::string, int>> minted;

    for (int a : args) {
      if (aborted) break;
      for (int b : args) {
        if (a == b || aborted) continue;
        for (const Snap& s : snapshot) {
          if (s.dst != a || !w.edge(s.idx).alive) continue;
          if (s.src == si || s.src == b) continue;
          if (!kArgLabels.count(s.label)) continue;
          if (!predicate_like(w, s.src)) continue;
          int orig = w.node(s.src).duplicate_of ? *w.node(s.src).duplicate_of
                                                : s.src;
          if (!minted.insert({orig, s.label, b}).second) continue;
          int d = duplicate_with_edges(s.src, s.idx);
          staged_nodes.push_back(d);
          w.node(d).sameas_asserted = sn.apposition_origin;
          staged_edges.push_back(w.add_edge(d, b, s.label, s.attr, true));
          added += 1 + static_cast<int>(w.out(d).size());
          if (added > w.cfg().propagation_cap) {
            aborted = true;
            break;
          }
        }
      }
    }
    if (aborted) {
      for (int e : staged_edges) w.kill_edge(e);
      for (int n : staged_nodes) w.drop_node(n);
      w.trace("H3.abort", {}, "SameAs propagation cap exceeded");
    } else if (added > 0) {
      w.trace("H3.sameas", {}, std::to_string(added) + " propagated edges");
    }
  }
}

// Syntactic assertedness. Only constructions that syntactically guarantee
// assertion are marked: clauses of factive markers, predications detached
// from non-restrictive modification, apposition-derived equivalence and
// membership predications, and copies minted by propagating over an
// appositive SameAs. Marking is monotone.
inline void mark_assertedness(Workspace& w) {
  for (int ni : w.alive_nodes()) {
    WorkNode& n = w.node(ni);
    if (!n.alive) continue;
    bool asserted = n.clause_asserted || n.detached || n.sameas_asserted ||
                    (n.apposition_origin &&
                     (n.kind == NodeKind::kSyntheticSameAs || n.copular_nominal));
    if (asserted) n.feats.set("asserted", "true");
  }
}

}  // namespace convert_detail

// ---------------------------------------------------------------------------

inline ConversionResult convert(const DepTree& tree,
                                const ConverterConfig& cfg = {}) {
  using namespace convert_detail;
  ConversionResult result;
  Workspace w(tree, cfg, result.trace);

  std::vector<std::pair<int, int>> pending_mod;
  if (cfg.masking) {
    merge_multiword(w);
    extract_features(w);
    assign_definiteness(w);
  }
  if (cfg.predication) {
    predicate_adjectives(w, &pending_mod);
    predicate_copulas(w);
    predicate_appositions(w);
    synthesize_existentials(w);
    mark_conditionals(w);
  }
  if (cfg.canonicalization) {
    map_arguments(w);
    adjectival_complements(w);
  }
  if (cfg.boundaries) modification_boundaries(w, pending_mod);
  if (cfg.heuristics) {
    raising_and_control(w);
    restructure_coordination(w);
    propagate_relations(w);
    mark_assertedness(w);
  }

  // Freeze the workspace into an immutable graph.
  PropGraph& g = result.graph;
  g.sentence_id = tree.sentence_id;

  std::vector<int> order = w.alive_nodes();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    auto key = [&](int id) {
      const auto& n = w.node(id);
      int first = n.span.empty() ? std::numeric_limits<int>::max()
                                 : *n.span.begin();
      return std::tuple(first, id);
    };
    return key(a) < key(b);
  });
  std::map<int, int> remap;
  for (std::size_t i = 0; i < order.size(); ++i)
    remap[order[i]] = static_cast<int>(i);

  // Promote predicates: any node heading a proposition-forming edge.
  for (int ei : w.alive_edges()) {
    const WorkEdge& e = w.edge(ei);
    auto core = RelationLabel::core(e.label);
    if (!core || !proposition_forming(*core)) continue;
    WorkNode& src = w.node(e.src);
    if (src.kind == NodeKind::kNonPredicate && !src.demoted)
      src.kind = NodeKind::kPredicate;
  }

  for (int id : order) {
    const WorkNode& n = w.node(id);
    PropNode out;
    out.id = remap[id];
    out.kind = n.kind;
    out.span.assign(n.span.begin(), n.span.end());
    out.head = n.head_token;
    out.features = n.feats;
    if (n.kind == NodeKind::kSyntheticSameAs) {
      out.text = "SameAs";
    } else if (n.kind == NodeKind::kSyntheticExists) {
      out.text = "EXISTS";
    } else {
      for (int t : out.span) {
        if (!out.text.empty()) out.text += ' ';
        out.text += tree.token(t).lemma;
      }
    }
    if (n.duplicate_of && remap.count(*n.duplicate_of))
      out.duplicate_of = remap[*n.duplicate_of];
    g.nodes.push_back(std::move(out));
  }

  for (int ei : w.alive_edges()) {
    const WorkEdge& e = w.edge(ei);
    PropEdge out;
    out.source = remap[e.src];
    out.target = remap[e.dst];
    out.attr = e.attr;
    out.propagated = e.propagated;
    auto core = RelationLabel::core(e.label);
    if (core) {
      out.label = *core;
    } else if (cfg.canonicalization) {
      w.trace("freeze.fallback", w.span_tokens(e.dst),
              e.label + " mapped to mod");
      out.label = rel::kMod;
    } else {
      out.label = RelationLabel(e.label);
    }
    g.edges.push_back(std::move(out));
  }
  std::sort(g.edges.begin(), g.edges.end());

  std::vector<std::string> problems =
      validate_graph(g, /*allow_raw_labels=*/!cfg.canonicalization);
  if (!problems.empty()) {
    std::string msg = "conversion produced an invalid graph (sentence " +
                      tree.sentence_id + "): ";
    for (std::size_t i = 0; i < problems.size(); ++i) {
      if (i) msg += "; ";
      msg += problems[i];
    }
    msg += " | trace:";
    for (const auto& t : result.trace) msg += " " + t.rule;
    throw ConversionError(msg);
  }
  return result;
}

}  // namespace props

#endif  // PROPS_CONVERTER_HPP_
