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

#ifndef COREFWB_CORPUS_H_
#define COREFWB_CORPUS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace corefwb {

enum class ReKind { kPronoun, kCommonNoun, kProperName };
enum class Gender { kMasculine, kFeminine, kUnknown };
enum class Number { kSingular, kPlural, kUnknown };
enum class Definiteness { kDefinite, kIndefinite, kNone };

const char *ReKindName(ReKind kind);

// One annotated mention.
struct ReferringExpression {
  std::string id;
  std::size_t start_token = 0;
  std::size_t end_token = 0;  // exclusive
  std::size_t sentence_index = 0;
  std::size_t paragraph_index = 0;
  std::string surface;
  ReKind kind = ReKind::kCommonNoun;
  Gender gender = Gender::kUnknown;
  Number number = Number::kUnknown;
  Definiteness definiteness = Definiteness::kNone;
  std::optional<std::string> head_concept;
  std::vector<std::string> modifier_concepts;
  bool parsed = true;
  std::optional<std::string> key_mr;

  bool is_pronoun() const { return kind == ReKind::kPronoun; }
};

// An annotated text: tokens, sentence/paragraph segmentation and the REs
// ordered by start token (ties: longer span first, then id).
class Document {
 public:
  Document() = default;

  // Validates every document invariant and sorts the REs into canonical
  // order. Throws Error on violation.
  static Document Create(std::string doc_id, std::vector<std::string> tokens,
                         std::vector<std::size_t> sentence_starts,
                         std::vector<std::size_t> paragraph_starts,
                         std::vector<ReferringExpression> res);

  const std::string &doc_id() const { return doc_id_; }
  const std::vector<std::string> &tokens() const { return tokens_; }
  const std::vector<std::size_t> &sentence_starts() const {
    return sentence_starts_;
  }
  const std::vector<std::size_t> &paragraph_starts() const {
    return paragraph_starts_;
  }
  const std::vector<ReferringExpression> &res() const { return res_; }

  // Position of an RE within res(), or nullopt.
  std::optional<std::size_t> IndexOf(std::string_view re_id) const;

 private:
  std::string doc_id_;
  std::vector<std::string> tokens_;
  std::vector<std::size_t> sentence_starts_;
  std::vector<std::size_t> paragraph_starts_;
  std::vector<ReferringExpression> res_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A division of a set of RE ids into disjoint, nonempty, labelled groups.
//
// The universe keeps an order (document order, or order of first appearance
// when read from a file) that fixes member order inside groups. Groups are
// kept in canonical order: by their lexicographically smallest member id.
class Partition {
 public:
  struct Group {
    std::string mr_id;
    std::vector<std::string> members;

    bool operator==(const Group &) const = default;
  };

  Partition() = default;

  // Validates disjointness, nonempty groups, unique MR ids, and exact cover
  // of `universe`. Throws Error(kFormat) otherwise.
  static Partition Create(std::vector<std::string> universe,
                          std::vector<Group> groups);

  // Universe is the union of the groups, in order of first appearance.
  static Partition FromGroups(std::vector<Group> groups);

  const std::vector<std::string> &universe() const { return universe_; }
  const std::vector<Group> &groups() const { return groups_; }
  std::size_t size() const { return universe_.size(); }

  // Group index of an RE id; throws Error(kFormat) if absent.
  std::size_t GroupOf(const std::string &re_id) const;
  bool Contains(const std::string &re_id) const {
    return group_of_.count(re_id) != 0;
  }

  // Set equality: same universe set and the same labelled groups. The
  // universe order is not compared.
  bool operator==(const Partition &other) const;

 private:
  std::vector<std::string> universe_;
  std::vector<Group> groups_;
  std::unordered_map<std::string, std::size_t> group_of_;
};

struct StatsReport {
  std::size_t words = 0;
  std::size_t res = 0;
  std::size_t key_mrs = 0;
  bool key_complete = false;  // every RE carries a key MR
  double re_per_mr = 0.0;
  std::size_t nominal_res = 0;
  std::size_t pronoun_res = 0;
  std::size_t unparsed_res = 0;
};

Document ParseCorpus(std::string_view text);
Partition KeyPartition(const Document &doc);
StatsReport CorpusStats(const Document &doc);

Partition ParsePartition(std::string_view text);
std::string SerializePartition(const Partition &partition);

// `name<TAB>value` lines.
std::string FormatStats(const StatsReport &stats);

}  // namespace corefwb

#endif  // COREFWB_CORPUS_H_
