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

#ifndef PROPS_MATCHER_HPP_
#define PROPS_MATCHER_HPP_

// Representation-unit matching for sentence-level multiple choice reading
// comprehension. A candidate answer (a pre-formed statement) is compared
// against each story sentence; the score is the number of identical
// (source-words, label, target-words) units, and the best candidate wins.
// The lexical baseline counts bag-of-words overlap under a sliding window
// instead.
//
// Two input formats:
//   - JSONL items ({"type":"story",...} / {"type":"question",...}) with a
//     side CoNLL file holding one parse per story sentence and candidate,
//     keyed "<story>.s<i>" and "<story>.q<j>.ca<k>" through sent_id.
//   - MCTest native .tsv/.ans; candidate statements default to the
//     question+answer concatenation fallback.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "props/config.hpp"
#include "props/conll.hpp"
#include "props/converter.hpp"
#include "props/dep_tree.hpp"
#include "props/errors.hpp"
#include "props/lexicon.hpp"
#include "props/prop_graph.hpp"

namespace props {

struct RepresentationUnit {
  std::string source;
  std::string label;
  std::string target;

  friend bool operator==(const RepresentationUnit&,
                         const RepresentationUnit&) = default;
  friend auto operator<=>(const RepresentationUnit& a,
                          const RepresentationUnit& b) {
    return std::tie(a.source, a.label, a.target) <=>
           std::tie(b.source, b.label, b.target);
  }
};

namespace match_detail {

inline std::string fold(std::string s) {
  for (char& c : s)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace match_detail

// One unit per edge; endpoints render as lowercased lemma text. Preposition
// attributes refine the label so "prep_in" and "prep_of" stay distinct.
inline std::vector<RepresentationUnit> units_of(const PropGraph& g) {
  std::vector<RepresentationUnit> out;
  for (const auto& e : g.edges) {
    RepresentationUnit u;
    u.source = match_detail::fold(g.node(e.source).text);
    u.label = e.label.name();
    if (!e.attr.empty()) u.label += "_" + e.attr;
    u.target = match_detail::fold(g.node(e.target).text);
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Dependency baseline: arcs as units, punctuation and the root arc left out.
inline std::vector<RepresentationUnit> units_of(const DepTree& t) {
  std::vector<RepresentationUnit> out;
  for (const auto& a : t.arcs) {
    if (a.head == 0 || a.relation == "punct") continue;
    RepresentationUnit u;
    u.source = match_detail::fold(t.token(a.head).lemma);
    u.label = a.relation;
    u.target = match_detail::fold(t.token(a.dependent).lemma);
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Multiset intersection size of two sorted unit lists.
inline int match_score(const std::vector<RepresentationUnit>& a,
                       const std::vector<RepresentationUnit>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

enum class MatchMode { kLexical, kDependency, kProps };

inline const char* to_string(MatchMode m) {
  switch (m) {
    case MatchMode::kLexical: return "lexical";
    case MatchMode::kDependency: return "dependencies";
    case MatchMode::kProps: return "props";
  }
  return "?";
}

struct MatcherConfig {
  int window = 0;              // 0: use the candidate's token count
  bool set_semantics = false;  // set instead of multiset unit intersection
  Lexicon stopwords = lexicons::stopwords();
  ConverterConfig converter;
};

struct QAItem {
  std::string story_id;
  int question_index = 0;  // per-story ordinal
  std::string question;
  std::vector<std::string> candidates;  // exactly 4 statements
  int gold = 0;
};

struct QACorpus {
  std::map<std::string, std::vector<std::string>> stories;  // id -> sentences
  std::map<std::string, DepTree> parses;  // "<story>.s<i>", "<story>.q<j>.ca<k>"
  std::vector<QAItem> items;
};

namespace match_detail {

inline std::vector<std::string> word_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'') {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::vector<std::string> content_tokens(const std::string& text,
                                               const Lexicon& stopwords) {
  std::vector<std::string> out;
  for (auto& w : word_tokens(text))
    if (!stopwords.count(w)) out.push_back(w);
  return out;
}

inline int bag_overlap(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

inline const DepTree& parse_for(const QACorpus& corpus, const std::string& key) {
  auto it = corpus.parses.find(key);
  if (it == corpus.parses.end())
    throw StructureError("missing parse for " + key);
  return it->second;
}

inline std::string story_key(const std::string& story, std::size_t i) {
  return story + ".s" + std::to_string(i);
}

inline std::string ca_key(const QAItem& item, int k) {
  return item.story_id + ".q" + std::to_string(item.question_index) + ".ca" +
         std::to_string(k);
}

}  // namespace match_detail

// Candidate scores for one item under one mode; the answer is the argmax,
// ties broken by the lowest index.
inline std::vector<int> candidate_scores(const QACorpus& corpus,
                                         const QAItem& item, MatchMode mode,
                                         const MatcherConfig& cfg = {}) {
  using namespace match_detail;
  auto story_it = corpus.stories.find(item.story_id);
  if (story_it == corpus.stories.end())
    throw StructureError("unknown story " + item.story_id);
  const auto& sentences = story_it->second;

  std::vector<int> scores;
  if (mode == MatchMode::kLexical) {
    // Sliding window over the full story token sequence.
    std::vector<std::string> story_tokens;
    for (const auto& s : sentences)
      for (auto& w : content_tokens(s, cfg.stopwords))
        story_tokens.push_back(std::move(w));
    for (const auto& ca : item.candidates) {
      std::vector<std::string> ca_tokens = content_tokens(ca, cfg.stopwords);
      int window = cfg.window > 0 ? cfg.window
                                  : static_cast<int>(ca_tokens.size());
      window = std::max(window, 1);
      int best = 0;
      if (static_cast<int>(story_tokens.size()) <= window) {
        best = bag_overlap(story_tokens, ca_tokens);
      } else {
        for (std::size_t start = 0;
             start + window <= story_tokens.size(); ++start) {
          std::vector<std::string> win(story_tokens.begin() + start,
                                       story_tokens.begin() + start + window);
          best = std::max(best, bag_overlap(std::move(win), ca_tokens));
        }
      }
      scores.push_back(best);
    }
    return scores;
  }

  // Unit modes: compare against each story sentence, take the maximum.
  auto units_for = [&](const std::string& key) {
    const DepTree& tree = parse_for(corpus, key);
    if (mode == MatchMode::kDependency) return units_of(tree);
    return units_of(convert(tree, cfg.converter).graph);
  };
  auto dedupe = [&](std::vector<RepresentationUnit> v) {
    if (cfg.set_semantics)
      v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };

  std::vector<std::vector<RepresentationUnit>> sentence_units;
  for (std::size_t i = 0; i < sentences.size(); ++i)
    sentence_units.push_back(dedupe(units_for(story_key(item.story_id, i))));

  for (int k = 0; k < static_cast<int>(item.candidates.size()); ++k) {
    std::vector<RepresentationUnit> ca_units = dedupe(units_for(ca_key(item, k)));
    int best = 0;
    for (const auto& su : sentence_units)
      best = std::max(best, match_score(ca_units, su));
    scores.push_back(best);
  }
  return scores;
}

inline int answer(const QACorpus& corpus, const QAItem& item, MatchMode mode,
                  const MatcherConfig& cfg = {}) {
  std::vector<int> scores = candidate_scores(corpus, item, mode, cfg);
  int best = 0;
  for (int k = 1; k < static_cast<int>(scores.size()); ++k)
    if (scores[k] > scores[best]) best = k;
  return best;
}

struct HarnessResult {
  // mode name -> (correct, chosen indices per item)
  std::map<std::string, int> correct;
  std::map<std::string, std::vector<int>> choices;
  int total = 0;

  double accuracy(const std::string& mode) const {
    auto it = correct.find(mode);
    return total == 0 || it == correct.end()
               ? 0.0
               : static_cast<double>(it->second) / total;
  }
};

inline HarnessResult run_matcher(const QACorpus& corpus,
                                 const std::vector<MatchMode>& modes,
                                 const MatcherConfig& cfg = {}) {
  HarnessResult result;
  result.total = static_cast<int>(corpus.items.size());
  for (MatchMode mode : modes) {
    const std::string name = to_string(mode);
    result.correct[name] = 0;
    for (const auto& item : corpus.items) {
      int choice = answer(corpus, item, mode, cfg);
      result.choices[name].push_back(choice);
      if (choice == item.gold) ++result.correct[name];
    }
  }
  return result;
}

// "Method / Correct" summary.
inline std::string accuracy_table(const HarnessResult& r) {
  std::ostringstream out;
  out << "Method        | Correct\n";
  out << "--------------+--------\n";
  for (const auto& [mode, correct] : r.correct) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-13s | %5.2f%%", mode.c_str(),
                  100.0 * (r.total ? double(correct) / r.total : 0.0));
    out << buf << "\n";
  }
  return out.str();
}

// --------------------------------------------------------------------------
// Loaders

inline QACorpus load_qa_jsonl(std::istream& items, std::istream* conll) {
  using json = nlohmann::json;
  QACorpus corpus;
  std::map<std::string, int> question_counter;
  std::string line;
  int line_no = 0;
  while (std::getline(items, line)) {
    ++line_no;
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad JSON: ") + e.what(), line_no);
    }
    const std::string type = obj.value("type", "");
    if (type == "story") {
      std::string id = obj.at("story_id").get<std::string>();
      for (const auto& s : obj.at("sentences"))
        corpus.stories[id].push_back(s.get<std::string>());
    } else if (type == "question") {
      QAItem item;
      item.story_id = obj.at("story_id").get<std::string>();
      item.question_index = question_counter[item.story_id]++;
      item.question = obj.at("question").get<std::string>();
      for (const auto& c : obj.at("candidates"))
        item.candidates.push_back(c.get<std::string>());
      if (item.candidates.size() != 4)
        throw ParseError("expected exactly 4 candidates", line_no);
      item.gold = obj.at("gold").get<int>();
      if (item.gold < 0 || item.gold > 3)
        throw ParseError("gold index out of range", line_no);
      corpus.items.push_back(std::move(item));
    } else {
      throw ParseError("unknown record type '" + type + "'", line_no);
    }
  }
  if (conll) {
    for (auto& tree : parse_conll(*conll)) {
      std::string id = tree.sentence_id;
      corpus.parses.emplace(id, std::move(tree));
    }
  }
  return corpus;
}

namespace match_detail {

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<std::string> split_sentences(std::string story) {
  // MCTest stories escape line breaks as "\newline".
  const std::string kNewline = "\\newline";
  std::size_t pos;
  while ((pos = story.find(kNewline)) != std::string::npos)
    story.replace(pos, kNewline.size(), " ");
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < story.size(); ++i) {
    cur += story[i];
    if (story[i] == '.' || story[i] == '?' || story[i] == '!') {
      std::size_t j = i + 1;
      while (j < story.size() && story[j] == ' ') ++j;
      bool eos = j >= story.size() ||
                 std::isupper(static_cast<unsigned char>(story[j])) ||
                 story[j] == '"';
      if (eos) {
        while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      }
    }
  }
  while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string strip_mc_prefix(const std::string& q, bool* single) {
  if (q.rfind("one: ", 0) == 0) {
    *single = true;
    return q.substr(5);
  }
  if (q.rfind("multiple: ", 0) == 0) {
    *single = false;
    return q.substr(10);
  }
  *single = true;
  return q;
}

}  // namespace match_detail

// MCTest .tsv/.ans reader. Candidate statements default to the trivial
// question + answer concatenation; callers that pre-form real statements
// can disable the fallback and supply parses only.
inline QACorpus load_mctest(std::istream& tsv, std::istream& ans,
                            std::istream* conll, bool concat_ca = true,
                            bool single_only = false) {
  using namespace match_detail;
  QACorpus corpus;
  std::string line, ans_line;
  int line_no = 0;
  while (std::getline(tsv, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!std::getline(ans, ans_line))
      throw ParseError("answer file shorter than story file", line_no);
    if (!ans_line.empty() && ans_line.back() == '\r') ans_line.pop_back();

    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() < 23)
      throw ParseError("expected 23 tab-separated fields, got " +
                           std::to_string(cols.size()),
                       line_no);
    std::vector<std::string> answers = split_tabs(ans_line);
    if (answers.size() < 4)
      throw ParseError("expected 4 answers per story", line_no);

    const std::string story_id = cols[0];
    corpus.stories[story_id] = split_sentences(cols[2]);

    for (int q = 0; q < 4; ++q) {
      bool single = true;
      QAItem item;
      item.story_id = story_id;
      item.question_index = q;
      item.question = strip_mc_prefix(cols[3 + q * 5], &single);
      if (single_only && !single) continue;
      for (int a = 0; a < 4; ++a) {
        std::string answer_text = cols[3 + q * 5 + 1 + a];
        item.candidates.push_back(
            concat_ca ? item.question + " " + answer_text : answer_text);
      }
      const std::string& letter = answers[q];
      if (letter.empty() || letter[0] < 'A' || letter[0] > 'D')
        throw ParseError("bad answer letter '" + letter + "'", line_no);
      item.gold = letter[0] - 'A';
      corpus.items.push_back(std::move(item));
    }
  }
  if (conll) {
    for (auto& tree : parse_conll(*conll)) {
      std::string id = tree.sentence_id;
      corpus.parses.emplace(id, std::move(tree));
    }
  }
  return corpus;
}

}  // namespace props

#endif  // PROPS_MATCHER_HPP_
