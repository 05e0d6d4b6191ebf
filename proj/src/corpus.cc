// Copyright 2026 The Corefwb Authors.
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

#include "corefwb/corpus.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

#include "corefwb/error.h"

namespace corefwb {
namespace {

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsSpace(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !IsSpace(s[j])) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void Fail(ErrorCode code, std::size_t line, const std::string &msg) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

// Attribute list of an opening tag, in source order.
using Attributes = std::vector<std::pair<std::string, std::string>>;

Attributes ParseAttributes(std::string_view body, std::size_t line) {
  Attributes attrs;
  std::size_t i = 0;
  while (true) {
    while (i < body.size() && IsSpace(body[i])) ++i;
    if (i == body.size()) break;
    std::size_t name_start = i;
    while (i < body.size() && body[i] != '=' && !IsSpace(body[i])) ++i;
    std::string name(body.substr(name_start, i - name_start));
    if (i == body.size() || body[i] != '=' || name.empty()) {
      Fail(ErrorCode::kParse, line, "malformed attribute in tag near '" +
                                        std::string(body.substr(name_start)) +
                                        "'");
    }
    ++i;
    if (i == body.size() || body[i] != '"') {
      Fail(ErrorCode::kParse, line,
           "attribute '" + name + "' value must be double-quoted");
    }
    std::size_t close = body.find('"', i + 1);
    if (close == std::string_view::npos) {
      Fail(ErrorCode::kParse, line, "unterminated value for '" + name + "'");
    }
    std::string value(body.substr(i + 1, close - i - 1));
    for (const auto &[seen, unused] : attrs) {
      if (seen == name) Fail(ErrorCode::kParse, line, "repeated attribute '" + name + "'");
    }
    attrs.emplace_back(std::move(name), std::move(value));
    i = close + 1;
    if (i < body.size() && !IsSpace(body[i])) {
      Fail(ErrorCode::kParse, line, "missing space after attribute value");
    }
  }
  return attrs;
}

ReferringExpression BuildRe(const Attributes &attrs, std::size_t line) {
  ReferringExpression re;
  bool has_id = false;
  bool has_kind = false;
  auto bad_value = [&](const std::string &name, const std::string &value) {
    Fail(ErrorCode::kParse, line,
         "unknown value \"" + value + "\" for attribute '" + name + "'");
  };
  for (const auto &[name, value] : attrs) {
    if (name == "id") {
      if (value.empty()) bad_value(name, value);
      re.id = value;
      has_id = true;
    } else if (name == "mr") {
      if (value.empty()) bad_value(name, value);
      re.key_mr = value;
    } else if (name == "kind") {
      has_kind = true;
      if (value == "pronoun") {
        re.kind = ReKind::kPronoun;
      } else if (value == "common") {
        re.kind = ReKind::kCommonNoun;
      } else if (value == "proper") {
        re.kind = ReKind::kProperName;
      } else {
        bad_value(name, value);
      }
    } else if (name == "head") {
      if (value.empty()) bad_value(name, value);
      re.head_concept = value;
    } else if (name == "mods") {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::string trimmed(Trim(item));
        if (trimmed.empty()) bad_value(name, value);
        re.modifier_concepts.push_back(std::move(trimmed));
      }
    } else if (name == "gender") {
      if (value == "m") {
        re.gender = Gender::kMasculine;
      } else if (value == "f") {
        re.gender = Gender::kFeminine;
      } else if (value == "u") {
        re.gender = Gender::kUnknown;
      } else {
        bad_value(name, value);
      }
    } else if (name == "number") {
      if (value == "sg") {
        re.number = Number::kSingular;
      } else if (value == "pl") {
        re.number = Number::kPlural;
      } else if (value == "u") {
        re.number = Number::kUnknown;
      } else {
        bad_value(name, value);
      }
    } else if (name == "def") {
      if (value == "def") {
        re.definiteness = Definiteness::kDefinite;
      } else if (value == "indef") {
        re.definiteness = Definiteness::kIndefinite;
      } else if (value == "none") {
        re.definiteness = Definiteness::kNone;
      } else {
        bad_value(name, value);
      }
    } else if (name == "parsed") {
      if (value == "yes") {
        re.parsed = true;
      } else if (value == "no") {
        re.parsed = false;
      } else {
        bad_value(name, value);
      }
    } else {
      Fail(ErrorCode::kParse, line, "unknown attribute '" + name + "' on <RE>");
    }
  }
  if (!has_id) Fail(ErrorCode::kParse, line, "<RE> without id");
  if (!has_kind) Fail(ErrorCode::kParse, line, "<RE id=\"" + re.id + "\"> without kind");
  return re;
}

struct OpenRe {
  ReferringExpression re;
  std::size_t line;
};

}  // namespace

const char *ReKindName(ReKind kind) {
  switch (kind) {
    case ReKind::kPronoun: return "pronoun";
    case ReKind::kCommonNoun: return "common";
    case ReKind::kProperName: return "proper";
  }
  return "?";
}

Document Document::Create(std::string doc_id, std::vector<std::string> tokens,
                          std::vector<std::size_t> sentence_starts,
                          std::vector<std::size_t> paragraph_starts,
                          std::vector<ReferringExpression> res) {
  auto bad = [](ErrorCode code, const std::string &msg) {
    throw Error(code, msg);
  };
  if (!tokens.empty()) {
    if (sentence_starts.empty() || sentence_starts.front() != 0 ||
        paragraph_starts.empty() || paragraph_starts.front() != 0) {
      bad(ErrorCode::kFormat, "segmentation must start at token 0");
    }
  }
  for (std::size_t i = 0; i < sentence_starts.size(); ++i) {
    if (sentence_starts[i] >= std::max<std::size_t>(tokens.size(), 1) ||
        (i > 0 && sentence_starts[i] <= sentence_starts[i - 1])) {
      bad(ErrorCode::kFormat, "sentence starts must be strictly increasing token indices");
    }
  }
  for (std::size_t start : paragraph_starts) {
    if (!std::binary_search(sentence_starts.begin(), sentence_starts.end(), start)) {
      bad(ErrorCode::kFormat, "paragraph start is not a sentence start");
    }
  }
  if (!std::is_sorted(paragraph_starts.begin(), paragraph_starts.end()) ||
      std::adjacent_find(paragraph_starts.begin(), paragraph_starts.end()) !=
          paragraph_starts.end()) {
    bad(ErrorCode::kFormat, "paragraph starts must be strictly increasing");
  }

  auto index_at = [](const std::vector<std::size_t> &starts, std::size_t token) {
    auto it = std::upper_bound(starts.begin(), starts.end(), token);
    return static_cast<std::size_t>(it - starts.begin()) - 1;
  };

  Document doc;
  std::set<std::string> ids;
  for (auto &re : res) {
    if (re.id.empty()) bad(ErrorCode::kFormat, "RE with empty id");
    if (!ids.insert(re.id).second) {
      bad(ErrorCode::kDuplicateId, "duplicate RE id '" + re.id + "'");
    }
    if (re.start_token >= re.end_token || re.end_token > tokens.size()) {
      bad(ErrorCode::kFormat, "RE '" + re.id + "' has an empty or out-of-range span");
    }
    std::size_t first = index_at(sentence_starts, re.start_token);
    std::size_t last = index_at(sentence_starts, re.end_token - 1);
    if (first != last) {
      bad(ErrorCode::kFormat, "RE '" + re.id + "' crosses a sentence boundary");
    }
    re.sentence_index = first;
    re.paragraph_index = index_at(paragraph_starts, re.start_token);
    if (re.kind == ReKind::kPronoun && re.definiteness != Definiteness::kNone) {
      bad(ErrorCode::kFormat, "pronoun RE '" + re.id + "' cannot carry definiteness");
    }
    if (!re.parsed && (re.head_concept || !re.modifier_concepts.empty())) {
      bad(ErrorCode::kFormat, "unparsed RE '" + re.id + "' cannot carry concepts");
    }
  }

  std::sort(res.begin(), res.end(),
            [](const ReferringExpression &a, const ReferringExpression &b) {
              if (a.start_token != b.start_token) return a.start_token < b.start_token;
              if (a.end_token != b.end_token) return a.end_token > b.end_token;
              return a.id < b.id;
            });

  // Spans must nest or be disjoint.
  std::vector<const ReferringExpression *> open;
  for (const auto &re : res) {
    while (!open.empty() && open.back()->end_token <= re.start_token) open.pop_back();
    if (!open.empty() && re.end_token > open.back()->end_token) {
      bad(ErrorCode::kOverlap, "RE '" + re.id + "' overlaps RE '" + open.back()->id +
                                   "' without nesting");
    }
    open.push_back(&re);
  }

  doc.doc_id_ = std::move(doc_id);
  doc.tokens_ = std::move(tokens);
  doc.sentence_starts_ = std::move(sentence_starts);
  doc.paragraph_starts_ = std::move(paragraph_starts);
  doc.res_ = std::move(res);
  for (std::size_t i = 0; i < doc.res_.size(); ++i) doc.index_[doc.res_[i].id] = i;
  return doc;
}

std::optional<std::size_t> Document::IndexOf(std::string_view re_id) const {
  auto it = index_.find(std::string(re_id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Document ParseCorpus(std::string_view text) {
  std::string doc_id;
  bool seen_doc = false;
  std::vector<std::string> tokens;
  std::vector<std::size_t> sentence_starts;
  std::vector<std::size_t> paragraph_starts;
  std::vector<ReferringExpression> res;
  std::vector<OpenRe> open;
  std::set<std::string> ids;
  bool pending_paragraph = false;
  bool pending_sentence = false;
  std::string current;
  std::size_t line = 1;

  auto flush = [&]() {
    if (current.empty()) return;
    std::size_t index = tokens.size();
    if (index == 0) {
      sentence_starts.push_back(0);
      paragraph_starts.push_back(0);
    } else if (pending_paragraph) {
      sentence_starts.push_back(index);
      paragraph_starts.push_back(index);
    } else if (pending_sentence) {
      sentence_starts.push_back(index);
    }
    pending_paragraph = pending_sentence = false;
    for (auto &o : open) {
      if (!o.re.surface.empty()) o.re.surface += ' ';
      o.re.surface += current;
    }
    tokens.push_back(std::move(current));
    current.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '<') {
      flush();
      std::size_t close = text.find('>', i);
      std::size_t nl = text.find('\n', i);
      if (close == std::string_view::npos || (nl != std::string_view::npos && nl < close)) {
        Fail(ErrorCode::kParse, line, "unterminated tag");
      }
      std::string_view inner = text.substr(i + 1, close - i - 1);
      std::size_t name_end = 0;
      while (name_end < inner.size() && !IsSpace(inner[name_end])) ++name_end;
      std::string_view name = inner.substr(0, name_end);
      std::string_view rest = inner.substr(name_end);
      bool no_attrs = Trim(rest).empty();

      if (name == "RE") {
        ReferringExpression re = BuildRe(ParseAttributes(rest, line), line);
        if (!ids.insert(re.id).second) {
          Fail(ErrorCode::kDuplicateId, line, "duplicate RE id '" + re.id + "'");
        }
        re.start_token = tokens.size();
        open.push_back({std::move(re), line});
      } else if (name == "/RE" && no_attrs) {
        if (open.empty()) Fail(ErrorCode::kParse, line, "</RE> without matching <RE>");
        OpenRe o = std::move(open.back());
        open.pop_back();
        o.re.end_token = tokens.size();
        if (o.re.end_token == o.re.start_token) {
          Fail(ErrorCode::kParse, o.line, "RE '" + o.re.id + "' has no tokens");
        }
        res.push_back(std::move(o.re));
      } else if ((name == "P" || name == "S") && no_attrs) {
        if (!open.empty()) {
          Fail(ErrorCode::kParse, line,
               "<" + std::string(name) + "> inside RE '" + open.back().re.id + "'");
        }
        if (name == "P") {
          pending_paragraph = true;
        } else {
          pending_sentence = true;
        }
      } else if ((name == "/P" || name == "/S") && no_attrs) {
        // Closing paragraph/sentence marks carry no information.
      } else if (name == "DOC") {
        if (seen_doc) Fail(ErrorCode::kParse, line, "nested or repeated <DOC>");
        seen_doc = true;
        for (const auto &[key, value] : ParseAttributes(rest, line)) {
          if (key != "id") Fail(ErrorCode::kParse, line, "unknown attribute '" + key + "' on <DOC>");
          doc_id = value;
        }
      } else if (name == "/DOC" && no_attrs) {
        if (!seen_doc) Fail(ErrorCode::kParse, line, "</DOC> without <DOC>");
      } else {
        Fail(ErrorCode::kParse, line, "malformed tag <" + std::string(inner) + ">");
      }
      i = close + 1;
      continue;
    }
    if (c == '>') Fail(ErrorCode::kParse, line, "stray '>'");
    if (IsSpace(c)) {
      flush();
      if (c == '\n') ++line;
    } else {
      current += c;
    }
    ++i;
  }
  flush();
  if (!open.empty()) {
    Fail(ErrorCode::kParse, open.back().line, "unclosed RE '" + open.back().re.id + "'");
  }
  return Document::Create(std::move(doc_id), std::move(tokens), std::move(sentence_starts),
                          std::move(paragraph_starts), std::move(res));
}

Partition KeyPartition(const Document &doc) {
  std::vector<std::string> missing;
  std::vector<std::string> universe;
  std::vector<Partition::Group> groups;
  std::unordered_map<std::string, std::size_t> by_mr;
  for (const auto &re : doc.res()) {
    universe.push_back(re.id);
    if (!re.key_mr) {
      missing.push_back(re.id);
      continue;
    }
    auto [it, inserted] = by_mr.emplace(*re.key_mr, groups.size());
    if (inserted) groups.push_back({*re.key_mr, {}});
    groups[it->second].members.push_back(re.id);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto &id : missing) list += (list.empty() ? "" : ", ") + id;
    throw Error(ErrorCode::kIncompleteKey, "REs without key MR: " + list);
  }
  return Partition::Create(std::move(universe), std::move(groups));
}

StatsReport CorpusStats(const Document &doc) {
  StatsReport stats;
  stats.words = doc.tokens().size();
  stats.res = doc.res().size();
  std::set<std::string> key_mrs;
  bool complete = true;
  for (const auto &re : doc.res()) {
    if (re.is_pronoun()) {
      ++stats.pronoun_res;
    } else {
      ++stats.nominal_res;
    }
    if (!re.parsed) ++stats.unparsed_res;
    if (re.key_mr) {
      key_mrs.insert(*re.key_mr);
    } else {
      complete = false;
    }
  }
  stats.key_complete = complete && !doc.res().empty();
  if (stats.key_complete) {
    stats.key_mrs = key_mrs.size();
    stats.re_per_mr = static_cast<double>(stats.res) / static_cast<double>(stats.key_mrs);
  }
  return stats;
}

std::string FormatStats(const StatsReport &stats) {
  char ratio[32];
  std::snprintf(ratio, sizeof(ratio), "%.2f", stats.re_per_mr);
  std::ostringstream out;
  out << "words\t" << stats.words << "\n"
      << "res\t" << stats.res << "\n"
      << "key_mrs\t" << stats.key_mrs << "\n"
      << "key_complete\t" << (stats.key_complete ? "yes" : "no") << "\n"
      << "re_per_mr\t" << ratio << "\n"
      << "nominal_res\t" << stats.nominal_res << "\n"
      << "pronoun_res\t" << stats.pronoun_res << "\n"
      << "unparsed_res\t" << stats.unparsed_res << "\n";
  return out.str();
}

Partition Partition::Create(std::vector<std::string> universe, std::vector<Group> groups) {
  Partition p;
  std::unordered_map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!rank.emplace(universe[i], i).second) {
      throw Error(ErrorCode::kFormat, "RE '" + universe[i] + "' repeated in universe");
    }
  }
  std::set<std::string> mr_ids;
  for (auto &g : groups) {
    if (g.members.empty()) {
      throw Error(ErrorCode::kFormat, "MR '" + g.mr_id + "' is empty");
    }
    if (g.mr_id.empty() || !mr_ids.insert(g.mr_id).second) {
      throw Error(ErrorCode::kFormat, "MR id '" + g.mr_id + "' is empty or repeated");
    }
    for (const auto &m : g.members) {
      if (!rank.count(m)) {
        throw Error(ErrorCode::kFormat, "RE '" + m + "' of MR '" + g.mr_id + "' outside universe");
      }
    }
    std::sort(g.members.begin(), g.members.end(),
              [&](const std::string &a, const std::string &b) { return rank[a] < rank[b]; });
  }
  std::sort(groups.begin(), groups.end(), [](const Group &a, const Group &b) {
    return *std::min_element(a.members.begin(), a.members.end()) <
           *std::min_element(b.members.begin(), b.members.end());
  });
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (const auto &m : groups[gi].members) {
      if (!p.group_of_.emplace(m, gi).second) {
        throw Error(ErrorCode::kFormat, "RE '" + m + "' belongs to more than one MR");
      }
    }
  }
  if (p.group_of_.size() != universe.size()) {
    for (const auto &id : universe) {
      if (!p.group_of_.count(id)) {
        throw Error(ErrorCode::kFormat, "RE '" + id + "' belongs to no MR");
      }
    }
  }
  p.universe_ = std::move(universe);
  p.groups_ = std::move(groups);
  return p;
}

Partition Partition::FromGroups(std::vector<Group> groups) {
  std::vector<std::string> universe;
  for (const auto &g : groups) {
    universe.insert(universe.end(), g.members.begin(), g.members.end());
  }
  return Create(std::move(universe), std::move(groups));
}

std::size_t Partition::GroupOf(const std::string &re_id) const {
  auto it = group_of_.find(re_id);
  if (it == group_of_.end()) throw Error(ErrorCode::kFormat, "RE '" + re_id + "' not in partition");
  return it->second;
}

bool Partition::operator==(const Partition &other) const {
  if (universe_.size() != other.universe_.size() || groups_.size() != other.groups_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    const Group &a = groups_[i];
    const Group &b = other.groups_[i];
    if (a.mr_id != b.mr_id || a.members.size() != b.members.size()) return false;
    std::vector<std::string> am = a.members, bm = b.members;
    std::sort(am.begin(), am.end());
    std::sort(bm.begin(), bm.end());
    if (am != bm) return false;
  }
  return true;
}

Partition ParsePartition(std::string_view text) {
  std::vector<Partition::Group> groups;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() < 3 || fields[0] != "MR" || fields[2] != ":") {
      Fail(ErrorCode::kParse, line_no, "expected 'MR <id> : <re-id> ...'");
    }
    if (fields.size() == 3) Fail(ErrorCode::kFormat, line_no, "MR '" + fields[1] + "' is empty");
    Partition::Group g{fields[1], {fields.begin() + 3, fields.end()}};
    for (const auto &m : g.members) {
      if (!seen.insert(m).second) {
        Fail(ErrorCode::kFormat, line_no, "RE '" + m + "' appears in more than one MR");
      }
    }
    groups.push_back(std::move(g));
  }
  try {
    return Partition::FromGroups(std::move(groups));
  } catch (const Error &e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
}

std::string SerializePartition(const Partition &partition) {
  std::string out;
  for (const auto &g : partition.groups()) {
    out += "MR " + g.mr_id + " :";
    for (const auto &m : g.members) out += " " + m;
    out += '\n';
  }
  return out;
}

}  // namespace corefwb
