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

#ifndef PROPS_RELATION_HPP_
#define PROPS_RELATION_HPP_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace props {

// The closed set of edge labels of a proposition graph. The first ten are
// predicate-argument relations, the last four head-modifier relations.
inline constexpr std::array<std::string_view, 14> kCoreLabels = {
    "subj", "dobj",       "iobj",    "comp",      "prep",
    "time", "prop_of",    "SameAs_arg", "outcome", "condition",
    "mod",  "source",     "poss",    "conj",
};

// Edge label. Normally one of the 14 core labels; raw pass-through labels
// occur only when conversion stages are switched off for debugging.
class RelationLabel {
 public:
  RelationLabel() = default;
  explicit RelationLabel(std::string name) : name_(std::move(name)) {}

  static std::optional<RelationLabel> core(std::string_view name) {
    for (auto c : kCoreLabels)
      if (c == name) return RelationLabel(std::string(name));
    return std::nullopt;
  }

  bool is_core() const {
    for (auto c : kCoreLabels)
      if (c == name_) return true;
    return false;
  }

  const std::string& name() const { return name_; }

  friend bool operator==(const RelationLabel&, const RelationLabel&) = default;
  friend auto operator<=>(const RelationLabel& a, const RelationLabel& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
};

namespace rel {
inline const RelationLabel kSubj{"subj"};
inline const RelationLabel kDobj{"dobj"};
inline const RelationLabel kIobj{"iobj"};
inline const RelationLabel kComp{"comp"};
inline const RelationLabel kPrep{"prep"};
inline const RelationLabel kTime{"time"};
inline const RelationLabel kPropOf{"prop_of"};
inline const RelationLabel kSameAsArg{"SameAs_arg"};
inline const RelationLabel kOutcome{"outcome"};
inline const RelationLabel kCondition{"condition"};
inline const RelationLabel kMod{"mod"};
inline const RelationLabel kSource{"source"};
inline const RelationLabel kPoss{"poss"};
inline const RelationLabel kConj{"conj"};
}  // namespace rel

// Labels whose outgoing edge contributes an argument slot to a proposition.
inline bool proposition_forming(const RelationLabel& label) {
  const std::string& n = label.name();
  return n == "subj" || n == "dobj" || n == "iobj" || n == "comp" ||
         n == "SameAs_arg" || n == "outcome" || n == "condition" ||
         n == "prop_of";
}

// Predicate-argument relations of the label set (upper part of the
// inventory); the remainder are head-modifier relations.
inline bool predicate_argument(const RelationLabel& label) {
  const std::string& n = label.name();
  return proposition_forming(label) || n == "prep" || n == "time";
}

}  // namespace props

#endif  // PROPS_RELATION_HPP_
