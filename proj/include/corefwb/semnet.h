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

#ifndef COREFWB_SEMNET_H_
#define COREFWB_SEMNET_H_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace corefwb {

// A small concept taxonomy: isa links (child < parent, several parents
// allowed, acyclic) plus declared synonym pairs.
//
// Subsumption is precomputed as a reflexive-transitive closure, one bitset
// row per concept, so queries are O(1).
class SemanticNetwork {
 public:
  SemanticNetwork() = default;

  // Throws Error(kCycle) naming one cycle when the isa graph is cyclic.
  static SemanticNetwork Create(
      std::vector<std::pair<std::string, std::string>> isa_edges,
      std::vector<std::pair<std::string, std::string>> synonym_pairs,
      std::vector<std::string> extra_concepts = {});

  bool Contains(std::string_view concept_name) const;
  std::size_t num_concepts() const { return names_.size(); }
  std::size_t num_isa_edges() const { return num_isa_edges_; }
  const std::vector<std::string> &concepts() const { return names_; }

  // a = b, or b is reachable from a through isa links.
  bool IsSubsumed(std::string_view a, std::string_view b) const;

  // Subsumption either way, or a declared synonym pair. Not transitive
  // through synonyms.
  bool Compatible(std::string_view a, std::string_view b) const;

  // Id-based access for hot loops; ids come from Find().
  std::optional<std::size_t> Find(std::string_view concept_name) const;
  bool CompatibleIds(std::size_t a, std::size_t b) const {
    return ancestors_[a][b] || ancestors_[b][a] ||
           synonyms_.count({std::min(a, b), std::max(a, b)}) != 0;
  }

 private:
  std::size_t IdOf(std::string_view name) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::size_t num_isa_edges_ = 0;
  // ancestors_[i][j] == true iff concept i is subsumed by concept j.
  std::vector<std::vector<bool>> ancestors_;
  std::set<std::pair<std::size_t, std::size_t>> synonyms_;
};

// One relation per line: `child < parent` or `a ~ b`; `#` comments.
SemanticNetwork ParseSemnet(std::string_view text);

}  // namespace corefwb

#endif  // COREFWB_SEMNET_H_
