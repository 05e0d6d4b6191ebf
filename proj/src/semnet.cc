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

#include "corefwb/semnet.h"

#include <algorithm>
#include <cctype>

#include "corefwb/error.h"

namespace corefwb {
namespace {

std::string_view Trim(std::string_view s) {
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

bool ValidConceptName(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '~' || c == '#';
  });
}

}  // namespace

SemanticNetwork SemanticNetwork::Create(
    std::vector<std::pair<std::string, std::string>> isa_edges,
    std::vector<std::pair<std::string, std::string>> synonym_pairs,
    std::vector<std::string> extra_concepts) {
  SemanticNetwork net;
  auto intern = [&net](const std::string &name) {
    auto [it, inserted] = net.ids_.emplace(name, net.names_.size());
    if (inserted) net.names_.push_back(name);
    return it->second;
  };
  for (const auto &name : extra_concepts) intern(name);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto &[child, parent] : isa_edges) {
    std::size_t c = intern(child);
    std::size_t p = intern(parent);
    edges.emplace_back(c, p);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  net.num_isa_edges_ = edges.size();
  for (const auto &[a, b] : synonym_pairs) {
    std::size_t x = intern(a);
    std::size_t y = intern(b);
    net.synonyms_.emplace(std::min(x, y), std::max(x, y));
  }

  const std::size_t n = net.names_.size();
  std::vector<std::vector<std::size_t>> parents(n);
  for (const auto &[c, p] : edges) parents[c].push_back(p);

  // Iterative DFS: detects cycles and yields a topological order
  // (parents finish before children).
  enum class Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(n, Mark::kNew);
  std::vector<std::size_t> order;
  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::kNew) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::kActive;
    while (!stack.empty()) {
      auto &[node, next] = stack.back();
      if (next < parents[node].size()) {
        std::size_t p = parents[node][next++];
        if (mark[p] == Mark::kActive) {
          std::string cycle = net.names_[p];
          auto it = std::find_if(stack.begin(), stack.end(),
                                 [p](const auto &frame) { return frame.first == p; });
          for (++it; it != stack.end(); ++it) cycle += " < " + net.names_[it->first];
          cycle += " < " + net.names_[p];
          throw Error(ErrorCode::kCycle, "isa cycle: " + cycle);
        }
        if (mark[p] == Mark::kNew) {
          mark[p] = Mark::kActive;
          stack.emplace_back(p, 0);
        }
      } else {
        mark[node] = Mark::kDone;
        order.push_back(node);
        stack.pop_back();
      }
    }
  }

  net.ancestors_.assign(n, std::vector<bool>(n, false));
  for (std::size_t node : order) {
    auto &row = net.ancestors_[node];
    row[node] = true;
    for (std::size_t p : parents[node]) {
      const auto &prow = net.ancestors_[p];
      for (std::size_t j = 0; j < n; ++j) {
        if (prow[j]) row[j] = true;
      }
    }
  }
  return net;
}

bool SemanticNetwork::Contains(std::string_view concept_name) const {
  return ids_.count(std::string(concept_name)) != 0;
}

std::size_t SemanticNetwork::IdOf(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) {
    throw Error(ErrorCode::kUnknownConcept, "unknown concept '" + std::string(name) + "'");
  }
  return it->second;
}

bool SemanticNetwork::IsSubsumed(std::string_view a, std::string_view b) const {
  return ancestors_[IdOf(a)][IdOf(b)];
}

bool SemanticNetwork::Compatible(std::string_view a, std::string_view b) const {
  return CompatibleIds(IdOf(a), IdOf(b));
}

std::optional<std::size_t> SemanticNetwork::Find(std::string_view concept_name) const {
  auto it = ids_.find(std::string(concept_name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

SemanticNetwork ParseSemnet(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> isa;
  std::vector<std::pair<std::string, std::string>> synonyms;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    std::size_t op = line.find_first_of("<~");
    auto fail = [&]() {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected 'child < parent' or 'a ~ b', got '" +
                                         std::string(line) + "'");
    };
    if (op == std::string_view::npos) fail();
    std::string_view left = Trim(line.substr(0, op));
    std::string_view right = Trim(line.substr(op + 1));
    if (!ValidConceptName(left) || !ValidConceptName(right)) fail();
    if (line[op] == '<') {
      isa.emplace_back(left, right);
    } else {
      synonyms.emplace_back(left, right);
    }
  }
  return SemanticNetwork::Create(std::move(isa), std::move(synonyms));
}

}  // namespace corefwb
