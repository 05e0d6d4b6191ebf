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

#include "corefwb/scoring.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "corefwb/error.h"

namespace corefwb {
namespace {

void CheckUniverse(const Partition &key, const Partition &response) {
  std::set<std::string> a(key.universe().begin(), key.universe().end());
  std::set<std::string> b(response.universe().begin(), response.universe().end());
  if (a == b) return;
  std::vector<std::string> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  std::string list;
  for (const auto &id : diff) list += (list.empty() ? "" : " ") + id;
  throw Error(ErrorCode::kUniverseMismatch, "key and response differ on REs: " + list);
}

Rational Ratio(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) return Rational(1);
  return Rational(numerator, denominator);
}

Score MakeScore(ScoreMethod method, Rational recall, Rational precision) {
  Score s;
  s.method = method;
  s.recall = recall;
  s.precision = precision;
  if (recall.numerator() == 0 && precision.numerator() == 0) {
    s.f_measure = 0.0;
  } else {
    s.f_measure = boost::rational_cast<double>(Rational(2) * precision * recall /
                                               (precision + recall));
  }
  return s;
}

// Σ(|K| − |p(K)|) and Σ(|K| − 1) over the groups of `from`, where p(K) is
// the set of `to` groups K meets.
std::pair<std::int64_t, std::int64_t> MucCounts(const Partition &from, const Partition &to) {
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  std::set<std::size_t> parts;
  for (const auto &g : from.groups()) {
    parts.clear();
    for (const auto &m : g.members) parts.insert(to.GroupOf(m));
    const auto size = static_cast<std::int64_t>(g.members.size());
    numerator += size - static_cast<std::int64_t>(parts.size());
    denominator += size - 1;
  }
  return {numerator, denominator};
}

// Number of missing links when `to` must connect each group of `from`,
// found by graph search over explicit pairwise links.
std::pair<std::int64_t, std::int64_t> LinkErrors(const Partition &from, const Partition &to) {
  std::int64_t missing = 0;
  std::int64_t needed = 0;
  for (const auto &g : from.groups()) {
    const std::size_t n = g.members.size();
    std::vector<std::vector<std::size_t>> adjacent(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (to.GroupOf(g.members[i]) == to.GroupOf(g.members[j])) {
          adjacent[i].push_back(j);
          adjacent[j].push_back(i);
        }
      }
    }
    std::vector<bool> seen(n, false);
    std::int64_t components = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (seen[start]) continue;
      ++components;
      std::vector<std::size_t> stack{start};
      seen[start] = true;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adjacent[v]) {
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
    missing += components - 1;
    needed += static_cast<std::int64_t>(n) - 1;
  }
  return {missing, needed};
}

// Σ(|K ∩ core(K)| − 1) and Σ(|K| − 1) over the groups of `from`.
std::pair<std::int64_t, std::int64_t> CoreCounts(const Partition &from, const Partition &to) {
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  std::map<std::size_t, std::int64_t> overlap;
  for (const auto &g : from.groups()) {
    overlap.clear();
    for (const auto &m : g.members) ++overlap[to.GroupOf(m)];
    std::int64_t best = 0;
    for (const auto &[group, count] : overlap) best = std::max(best, count);
    numerator += best - 1;
    denominator += static_cast<std::int64_t>(g.members.size()) - 1;
  }
  return {numerator, denominator};
}

// Minimum-cost assignment of every row to a distinct column (rows <= cols).
// Returns the column of each row.
std::vector<std::size_t> Hungarian(const std::vector<std::vector<std::int64_t>> &cost,
                                   std::size_t cols) {
  const std::size_t rows = cost.size();
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<std::size_t> owner(cols + 1, 0), way(cols + 1, 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(cols + 1, inf);
    std::vector<bool> used(cols + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = owner[j0];
      std::int64_t delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const std::int64_t reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> column_of(rows, 0);
  for (std::size_t j = 1; j <= cols; ++j) {
    if (owner[j] != 0) column_of[owner[j] - 1] = j - 1;
  }
  return column_of;
}

std::size_t Find(std::vector<std::size_t> &parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

const char *ScoreMethodName(ScoreMethod method) {
  switch (method) {
    case ScoreMethod::kMuc: return "muc";
    case ScoreMethod::kCoreMr: return "core";
    case ScoreMethod::kExCoreMr: return "excore";
  }
  return "?";
}

double FMeasure(double recall, double precision, double beta) {
  if (recall == 0.0 && precision == 0.0) return 0.0;
  const double b2 = beta * beta;
  return (1.0 + b2) * precision * recall / (b2 * precision + recall);
}

Score MucScore(const Partition &key, const Partition &response) {
  CheckUniverse(key, response);
  auto [rn, rd] = MucCounts(key, response);
  auto [pn, pd] = MucCounts(response, key);
  return MakeScore(ScoreMethod::kMuc, Ratio(rn, rd), Ratio(pn, pd));
}

Score BruteForceLinkScore(const Partition &key, const Partition &response,
                          std::size_t max_universe) {
  CheckUniverse(key, response);
  if (key.size() > max_universe) {
    throw Error(ErrorCode::kSizeBound, "brute-force link scoring limited to " +
                                           std::to_string(max_universe) + " REs");
  }
  auto [missing, needed] = LinkErrors(key, response);
  auto [wrong, produced] = LinkErrors(response, key);
  return MakeScore(ScoreMethod::kMuc, Ratio(needed - missing, needed),
                   Ratio(produced - wrong, produced));
}

Score CoreMrScore(const Partition &key, const Partition &response) {
  CheckUniverse(key, response);
  auto [rn, rd] = CoreCounts(key, response);
  auto [pn, pd] = CoreCounts(response, key);
  return MakeScore(ScoreMethod::kCoreMr, Ratio(rn, rd), Ratio(pn, pd));
}

std::vector<std::size_t> CoreAssignment(const Partition &from, const Partition &to) {
  CheckUniverse(from, to);
  std::vector<std::size_t> cores;
  std::map<std::size_t, std::int64_t> overlap;
  for (const auto &g : from.groups()) {
    overlap.clear();
    for (const auto &m : g.members) ++overlap[to.GroupOf(m)];
    // Groups are stored by smallest member id, so the first maximum wins.
    std::size_t best = overlap.begin()->first;
    for (const auto &[group, count] : overlap) {
      if (count > overlap[best]) best = group;
    }
    cores.push_back(best);
  }
  return cores;
}

std::vector<std::pair<std::size_t, std::size_t>> ExCoreMatching(const Partition &key,
                                                                 const Partition &response) {
  CheckUniverse(key, response);
  const std::size_t nk = key.groups().size();
  const std::size_t nr = response.groups().size();
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> weight;
  for (std::size_t k = 0; k < nk; ++k) {
    for (const auto &m : key.groups()[k].members) ++weight[{k, response.GroupOf(m)}];
  }

  // The overlap graph splits into independent components; solve each one.
  std::vector<std::size_t> parent(nk + nr);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto &[edge, w] : weight) {
    parent[Find(parent, edge.first)] = Find(parent, nk + edge.second);
  }
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> components;
  for (std::size_t k = 0; k < nk; ++k) components[Find(parent, k)].first.push_back(k);
  for (std::size_t r = 0; r < nr; ++r) components[Find(parent, nk + r)].second.push_back(r);

  std::vector<std::pair<std::size_t, std::size_t>> matching;
  for (const auto &[root, sides] : components) {
    const auto &[keys, resps] = sides;
    if (keys.empty() || resps.empty()) continue;
    const bool keys_are_rows = keys.size() <= resps.size();
    const auto &rows = keys_are_rows ? keys : resps;
    const auto &cols = keys_are_rows ? resps : keys;
    std::vector<std::vector<std::int64_t>> cost(rows.size(),
                                                std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        auto edge = keys_are_rows ? std::make_pair(rows[i], cols[j])
                                  : std::make_pair(cols[j], rows[i]);
        auto it = weight.find(edge);
        if (it != weight.end()) cost[i][j] = -it->second;
      }
    }
    const auto assigned = Hungarian(cost, cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (cost[i][assigned[i]] == 0) continue;
      if (keys_are_rows) {
        matching.emplace_back(rows[i], cols[assigned[i]]);
      } else {
        matching.emplace_back(cols[assigned[i]], rows[i]);
      }
    }
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

Score ExCoreMrScore(const Partition &key, const Partition &response) {
  const auto matching = ExCoreMatching(key, response);
  std::int64_t total = 0;
  for (const auto &[k, r] : matching) {
    for (const auto &m : key.groups()[k].members) {
      if (response.GroupOf(m) == r) ++total;
    }
  }
  const auto universe = static_cast<std::int64_t>(key.size());
  return MakeScore(ScoreMethod::kExCoreMr, Ratio(total, universe), Ratio(total, universe));
}

Score ScoreWith(ScoreMethod method, const Partition &key, const Partition &response) {
  switch (method) {
    case ScoreMethod::kMuc: return MucScore(key, response);
    case ScoreMethod::kCoreMr: return CoreMrScore(key, response);
    case ScoreMethod::kExCoreMr: return ExCoreMrScore(key, response);
  }
  throw Error(ErrorCode::kInternal, "unknown scoring method");
}

std::string FormatPercent(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", 100.0 * value);
  return buf;
}

std::string FormatScores(const std::vector<Score> &scores) {
  std::string out;
  for (const auto &s : scores) {
    out += std::string(ScoreMethodName(s.method)) + '\t' + FormatPercent(s.recall_value()) + '\t' +
           FormatPercent(s.precision_value()) + '\t' + FormatPercent(s.f_measure) + '\n';
  }
  return out;
}

}  // namespace corefwb
