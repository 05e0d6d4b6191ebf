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

#ifndef COREFWB_SCORING_H_
#define COREFWB_SCORING_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "corefwb/corpus.h"

namespace corefwb {

// Scores are kept as exact fractions; small ablation deltas must not drown
// in rounding noise.
using Rational = boost::rational<std::int64_t>;

enum class ScoreMethod { kMuc, kCoreMr, kExCoreMr };

// "muc", "core", "excore".
const char *ScoreMethodName(ScoreMethod method);

struct Score {
  ScoreMethod method = ScoreMethod::kMuc;
  Rational recall{1};
  Rational precision{1};
  double f_measure = 1.0;

  double recall_value() const { return boost::rational_cast<double>(recall); }
  double precision_value() const { return boost::rational_cast<double>(precision); }
};

// (1 + beta^2) P R / (beta^2 P + R); 0 when both are 0.
double FMeasure(double recall, double precision, double beta = 1.0);

// Vilain et al. link-based scoring: counts the minimal number of missing
// (recall) and spurious (precision) links.
Score MucScore(const Partition &key, const Partition &response);

// Independent check of MucScore for small universes: builds the explicit
// link graph of every group and counts connected components by search.
// Throws Error(kSizeBound) above `max_universe` REs.
inline constexpr std::size_t kBruteForceMaxUniverse = 64;
Score BruteForceLinkScore(const Partition &key, const Partition &response,
                          std::size_t max_universe = kBruteForceMaxUniverse);

// Each key group is paired with the response group sharing most REs with it
// (its core), and vice versa for precision. Two key groups may share a core.
Score CoreMrScore(const Partition &key, const Partition &response);

// One-to-one pairing of key and response groups maximizing total overlap.
Score ExCoreMrScore(const Partition &key, const Partition &response);

Score ScoreWith(ScoreMethod method, const Partition &key, const Partition &response);

// Core of every group of `from` among the groups of `to` (group indices).
// Ties prefer the group with the smallest member id.
std::vector<std::size_t> CoreAssignment(const Partition &from, const Partition &to);

// Matched (key group, response group) pairs of an optimal one-to-one
// assignment, pairs with zero overlap omitted, sorted by key group.
std::vector<std::pair<std::size_t, std::size_t>> ExCoreMatching(const Partition &key,
                                                                 const Partition &response);

// Rows `method<TAB>recall<TAB>precision<TAB>f` as percentages with four
// decimals.
std::string FormatScores(const std::vector<Score> &scores);

// Percent with four decimals, e.g. "65.4800".
std::string FormatPercent(double value);

}  // namespace corefwb

#endif  // COREFWB_SCORING_H_
