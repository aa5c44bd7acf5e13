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

#ifndef PROPS_CONFIG_HPP_
#define PROPS_CONFIG_HPP_

#include <string>

#include "props/lexicon.hpp"

namespace props {

// Conversion switches and lexicons. Rule families map to the pipeline
// stages: masking (multi-word merge, feature extraction, definiteness),
// predication (adjectival predication, SameAs/EXISTS, conditionals),
// canonicalization (argument mapping, adjectival complements), boundaries
// (restrictive vs. non-restrictive modification), heuristics (raising,
// coordination, propagation, assertedness).
struct ConverterConfig {
  bool masking = true;
  bool predication = true;
  bool canonicalization = true;
  bool boundaries = true;
  bool heuristics = true;

  // Guard against combinatorial blowup in nested coordinations: a single
  // construction may add at most this many propagated edges.
  int propagation_cap = 64;

  Lexicon raising_verbs = lexicons::raising_verbs();
  Lexicon collective_verbs = lexicons::collective_verbs();
  Lexicon asserting_markers = lexicons::asserting_markers();
  Lexicon nonasserting_markers = lexicons::nonasserting_markers();
  Lexicon temporal_words = lexicons::temporal_words();

  bool disable_family(const std::string& name) {
    if (name == "masking") masking = false;
    else if (name == "predication") predication = false;
    else if (name == "canonicalization") canonicalization = false;
    else if (name == "boundaries") boundaries = false;
    else if (name == "heuristics") heuristics = false;
    else return false;
    return true;
  }
};

}  // namespace props

#endif  // PROPS_CONFIG_HPP_
