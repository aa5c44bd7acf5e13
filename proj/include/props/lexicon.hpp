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

#ifndef PROPS_LEXICON_HPP_
#define PROPS_LEXICON_HPP_

#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>

#include "props/errors.hpp"

namespace props {

using Lexicon = std::set<std::string>;

// Lexicon files: one lemma per line, '#' comments, UTF-8. Lemmas are
// lowercased on load.
inline Lexicon load_lexicon(std::istream& in) {
  Lexicon out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string word;
    if (ss >> word) {
      for (char& c : word)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      out.insert(word);
    }
  }
  return out;
}

inline Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open lexicon file " + path);
  return load_lexicon(in);
}

namespace lexicons {

// Verbs frequently heading raising-to-subject constructions. This is a
// reconstruction of the usual raising inventory, not an annotated resource;
// replace it through configuration for serious use.
inline const Lexicon& raising_verbs() {
  static const Lexicon set = {
      "seem",    "appear",  "look",    "remain",   "become", "stay",
      "sound",   "feel",    "prove",   "turn",     "happen", "tend",
      "begin",   "continue", "start",  "cease",    "grow",   "keep",
      "fail",    "promise", "threaten", "chance",  "emerge", "loom",
      "persist", "stand",   "lie",     "sit",      "wind",   "end",
  };
  return set;
}

// Predicates whose coordinated subject acts as a single combined entity.
inline const Lexicon& collective_verbs() {
  static const Lexicon set = {"marry", "meet",  "merge", "combine",
                              "mix",   "gather", "unite", "collide"};
  return set;
}

// Clause markers that assert both of their clauses.
inline const Lexicon& asserting_markers() {
  static const Lexicon set = {"because", "although", "while",
                              "since",   "though",   "whereas"};
  return set;
}

// Clause markers that assert neither dependent clause.
inline const Lexicon& nonasserting_markers() {
  static const Lexicon set = {"if", "unless", "until", "once", "whether"};
  return set;
}

inline const Lexicon& temporal_words() {
  static const Lexicon set = {
      "yesterday", "today",    "tomorrow", "tonight",  "now",
      "later",     "soon",     "recently", "monday",   "tuesday",
      "wednesday", "thursday", "friday",   "saturday", "sunday",
      "january",   "february", "march",    "april",    "may",
      "june",      "july",     "august",   "september", "october",
      "november",  "december",
  };
  return set;
}

inline const Lexicon& stopwords() {
  static const Lexicon set = {
      "a",    "an",   "the",  "is",   "are",  "was", "were", "be",  "been",
      "am",   "do",   "does", "did",  "to",   "of",  "in",   "on",  "at",
      "for",  "with", "by",   "from", "and",  "or",  "but",  "that", "this",
      "it",   "its",  "he",   "she",  "they", "his", "her",  "their", "who",
      "what", "not",  "n't",  "will", "would", "as",
  };
  return set;
}

}  // namespace lexicons

}  // namespace props

#endif  // PROPS_LEXICON_HPP_
