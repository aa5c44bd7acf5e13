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

#ifndef PROPS_DEP_TREE_HPP_
#define PROPS_DEP_TREE_HPP_

#include <string>
#include <vector>

namespace props {

struct Token {
  int index = 0;  // 1-based sentence position
  std::string surface;
  std::string lemma;
  std::string pos;       // coarse tag
  std::string fine_pos;  // optional fine tag
};

// One labeled arc; head 0 designates the root.
struct DepArc {
  int head = 0;
  int dependent = 0;
  std::string relation;
};

// Immutable after construction. Stanford-typed basic dependencies are
// expected, but unknown relation labels are carried through untouched.
struct DepTree {
  std::string sentence_id;
  std::vector<Token> tokens;  // ordered by index
  std::vector<DepArc> arcs;   // one per token

  const Token& token(int index) const { return tokens.at(index - 1); }

  const DepArc* arc_for(int dependent) const {
    for (const auto& a : arcs)
      if (a.dependent == dependent) return &a;
    return nullptr;
  }

  // Dependents of a head token, in surface order.
  std::vector<int> children(int head) const {
    std::vector<int> out;
    for (const auto& a : arcs)
      if (a.head == head) out.push_back(a.dependent);
    return out;
  }

  std::vector<int> children(int head, const std::string& relation) const {
    std::vector<int> out;
    for (const auto& a : arcs)
      if (a.head == head && a.relation == relation) out.push_back(a.dependent);
    return out;
  }

  int root() const {
    for (const auto& a : arcs)
      if (a.head == 0) return a.dependent;
    return 0;
  }
};

struct ValidationResult {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Structural check: single root, one arc per token, indices in range,
// acyclicity. Violations are reported, not thrown.
inline ValidationResult validate(const DepTree& tree) {
  ValidationResult result;
  auto report = [&](const std::string& what) { result.violations.push_back(what); };

  const int n = static_cast<int>(tree.tokens.size());
  for (int i = 0; i < n; ++i) {
    if (tree.tokens[i].index != i + 1)
      report("token index " + std::to_string(tree.tokens[i].index) +
             " out of sequence at position " + std::to_string(i + 1));
    if (tree.tokens[i].surface.empty())
      report("empty surface at token " + std::to_string(i + 1));
  }
  if (static_cast<int>(tree.arcs.size()) != n)
    report("arc count " + std::to_string(tree.arcs.size()) +
           " does not match token count " + std::to_string(n));

  std::vector<int> seen(n + 1, 0);
  int roots = 0;
  for (const auto& a : tree.arcs) {
    if (a.dependent < 1 || a.dependent > n) {
      report("dangling dependent index " + std::to_string(a.dependent));
      continue;
    }
    if (++seen[a.dependent] > 1)
      report("duplicate arc for dependent " + std::to_string(a.dependent));
    if (a.head < 0 || a.head > n)
      report("dangling head index " + std::to_string(a.head));
    if (a.head == a.dependent)
      report("self-loop at token " + std::to_string(a.dependent));
    if (a.head == 0) ++roots;
  }
  for (int i = 1; i <= n; ++i)
    if (seen[i] == 0) report("no arc for token " + std::to_string(i));
  if (roots == 0 && n > 0) report("no root arc");
  if (roots > 1) report("multiple roots (" + std::to_string(roots) + ")");

  // Cycle detection by walking head chains; runs as long as indices are in
  // range so that cycles are reported alongside root violations.
  bool indices_ok = true;
  for (const auto& a : tree.arcs)
    if (a.dependent < 1 || a.dependent > n || a.head < 0 || a.head > n)
      indices_ok = false;
  if (indices_ok) {
    std::vector<int> head_of(n + 1, 0);
    for (const auto& a : tree.arcs)
      if (a.head != a.dependent) head_of[a.dependent] = a.head;
    std::vector<int> state(n + 1, 0);  // 0 unseen, 1 on path, 2 done
    for (int start = 1; start <= n; ++start) {
      int t = start;
      std::vector<int> path;
      while (t != 0 && state[t] == 0) {
        state[t] = 1;
        path.push_back(t);
        t = head_of[t];
      }
      if (t != 0 && state[t] == 1) {
        report("cycle through token " + std::to_string(t));
        break;
      }
      for (int p : path) state[p] = 2;
    }
  }
  return result;
}

}  // namespace props

#endif  // PROPS_DEP_TREE_HPP_
