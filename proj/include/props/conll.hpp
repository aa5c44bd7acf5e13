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

#ifndef PROPS_CONLL_HPP_
#define PROPS_CONLL_HPP_

// CoNLL-X style reader and writer for dependency trees.
//
//   - Sentences are separated by blank lines.
//   - One token per line; columns are tab separated (runs of spaces are
//     accepted for hand-written files):
//       1 ID      token counter, starting at 1
//       2 FORM    surface form
//       3 LEMMA   lemma, or _ to fall back to the lowercased form
//       4 CPOSTAG coarse part-of-speech tag
//       5 POSTAG  fine part-of-speech tag, or _
//       6 FEATS   ignored
//       7 HEAD    head ID, or 0 for the root
//       8 DEPREL  relation to the head
//     Columns 9-10 (PHEAD, PDEPREL) may be present and are ignored.
//   - Lines starting with '#' are comments; "# sent_id = X" names the
//     following sentence. Unnamed sentences get their 0-based ordinal.
//   - UTF-8, LF or CRLF.
//
// Structurally invalid trees (cycles, multiple roots, dangling indices) are
// rejected at parse time; the parser never returns an invalid tree.

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "props/dep_tree.hpp"
#include "props/errors.hpp"

namespace props {

namespace detail {

inline std::vector<std::string> split_columns(const std::string& line) {
  std::vector<std::string> cols;
  if (line.find('\t') != std::string::npos) {
    std::string cur;
    for (char c : line) {
      if (c == '\t') {
        cols.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    cols.push_back(cur);
  } else {
    std::istringstream ss(line);
    std::string col;
    while (ss >> col) cols.push_back(col);
  }
  return cols;
}

inline std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline bool parse_int(const std::string& s, int* out) {
  if (s.empty()) return false;
  int value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  *out = value;
  return true;
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline std::vector<DepTree> parse_conll(std::istream& in) {
  std::vector<DepTree> trees;
  DepTree current;
  std::string pending_id;
  bool in_sentence = false;
  int line_no = 0;
  std::string line;

  auto flush = [&]() {
    if (!in_sentence) return;
    current.sentence_id =
        pending_id.empty() ? std::to_string(trees.size()) : pending_id;
    ValidationResult check = validate(current);
    if (!check.ok()) {
      std::string msg = "sentence " + current.sentence_id + ": ";
      for (std::size_t i = 0; i < check.violations.size(); ++i) {
        if (i) msg += "; ";
        msg += check.violations[i];
      }
      throw StructureError(msg);
    }
    trees.push_back(std::move(current));
    current = DepTree{};
    pending_id.clear();
    in_sentence = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      std::string body = detail::trim(line.substr(1));
      const std::string key = "sent_id";
      if (body.rfind(key, 0) == 0) {
        std::string rest = detail::trim(body.substr(key.size()));
        if (!rest.empty() && rest[0] == '=')
          pending_id = detail::trim(rest.substr(1));
      }
      continue;
    }

    std::vector<std::string> cols = detail::split_columns(line);
    if (cols.size() < 8)
      throw ParseError("expected at least 8 columns, got " +
                           std::to_string(cols.size()),
                       line_no);
    Token tok;
    if (!detail::parse_int(cols[0], &tok.index))
      throw ParseError("non-integer token index '" + cols[0] + "'", line_no);
    tok.surface = cols[1];
    if (tok.surface.empty())
      throw ParseError("empty surface form", line_no);
    tok.lemma = cols[2] == "_" ? detail::lowercase(tok.surface) : cols[2];
    tok.pos = cols[3] == "_" ? "" : cols[3];
    tok.fine_pos = cols[4] == "_" ? "" : cols[4];

    DepArc arc;
    arc.dependent = tok.index;
    if (!detail::parse_int(cols[6], &arc.head))
      throw ParseError("non-integer head '" + cols[6] + "'", line_no);
    arc.relation = cols[7];

    current.tokens.push_back(std::move(tok));
    current.arcs.push_back(std::move(arc));
    in_sentence = true;
  }
  flush();
  return trees;
}

inline std::vector<DepTree> parse_conll(const std::string& text) {
  std::istringstream in(text);
  return parse_conll(in);
}

inline std::string serialize_conll(const DepTree& tree) {
  std::ostringstream out;
  out << "# sent_id = " << tree.sentence_id << "\n";
  for (const Token& t : tree.tokens) {
    const DepArc* arc = tree.arc_for(t.index);
    out << t.index << '\t' << t.surface << '\t' << t.lemma << '\t'
        << (t.pos.empty() ? "_" : t.pos) << '\t'
        << (t.fine_pos.empty() ? "_" : t.fine_pos) << "\t_\t"
        << (arc ? arc->head : 0) << '\t' << (arc ? arc->relation : "dep")
        << "\t_\t_\n";
  }
  return out.str();
}

inline std::string serialize_conll(const std::vector<DepTree>& trees) {
  std::string out;
  for (const DepTree& t : trees) {
    out += serialize_conll(t);
    out += "\n";
  }
  return out;
}

}  // namespace props

#endif  // PROPS_CONLL_HPP_
