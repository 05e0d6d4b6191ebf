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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "corefwb/error.h"
#include "testing/partitions.h"

namespace corefwb {
namespace {

Partition P(const std::string &text) { return ParsePartition(text); }

const Partition &Abcd() {
  static const Partition p = P("MR k1 : a b c\nMR k2 : d\n");
  return p;
}

void ExpectScore(const Score &s, Rational r, Rational p) {
  EXPECT_EQ(s.recall, r);
  EXPECT_EQ(s.precision, p);
  EXPECT_NEAR(s.f_measure, FMeasure(boost::rational_cast<double>(r), boost::rational_cast<double>(p)),
              1e-12);
}

TEST(FMeasure, Examples) {
  EXPECT_DOUBLE_EQ(FMeasure(1, 1, 1), 1.0);
  EXPECT_DOUBLE_EQ(FMeasure(0.5, 0.5, 1), 0.5);
  EXPECT_DOUBLE_EQ(FMeasure(1, 0, 1), 0.0);
  EXPECT_DOUBLE_EQ(FMeasure(0, 0, 1), 0.0);
  EXPECT_NEAR(FMeasure(0.5, 1.0, 2.0), 5.0 * 0.5 / (4.0 * 1.0 + 0.5), 1e-15);
}

TEST(Muc, Examples) {
  ExpectScore(MucScore(Abcd(), P("MR x : a b\nMR y : c d\n")), Rational(1, 2), Rational(1, 2));
  ExpectScore(MucScore(Abcd(), Abcd()), 1, 1);
  ExpectScore(MucScore(P("MR k1 : a b\nMR k2 : c d\n"), P("MR x : a b c d\n")), 1, Rational(2, 3));
}

TEST(Muc, AllSingletonsIsVacuouslyPerfect) {
  const auto singletons = P("MR a : a\nMR b : b\nMR c : c\n");
  ExpectScore(MucScore(singletons, singletons), 1, 1);
  ExpectScore(MucScore(P("MR x : a b c\n"), singletons), 0, 1);
  EXPECT_EQ(MucScore(P("MR x : a b c\n"), singletons).f_measure, 0.0);
}

TEST(Muc, UniverseMismatchListsIds) {
  try {
    MucScore(Abcd(), P("MR x : a b\nMR y : c e\n"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUniverseMismatch);
    const std::string what = e.what();
    EXPECT_NE(what.find('d'), std::string::npos);
    EXPECT_NE(what.find('e'), std::string::npos);
  }
  EXPECT_THROW(CoreMrScore(Abcd(), P("MR x : a b c\n")), Error);
  EXPECT_THROW(ExCoreMrScore(Abcd(), P("MR x : a b c d e\n")), Error);
}

TEST(BruteForce, Examples) {
  ExpectScore(BruteForceLinkScore(Abcd(), P("MR x : a b\nMR y : c d\n")), Rational(1, 2),
              Rational(1, 2));
  ExpectScore(BruteForceLinkScore(Abcd(), Abcd()), 1, 1);
  ExpectScore(BruteForceLinkScore(P("MR k1 : a b\nMR k2 : c d\n"), P("MR x : a b c d\n")), 1,
              Rational(2, 3));
}

TEST(BruteForce, SizeBound) {
  const auto p = testing::FromLabels(std::vector<std::size_t>(10, 0), "g");
  try {
    BruteForceLinkScore(p, p, 8);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeBound);
  }
}

TEST(BruteForce, ExhaustiveUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Partition> all;
    for (const auto &labels : testing::AllSetPartitions(n)) all.push_back(testing::FromLabels(labels, "g"));
    for (const auto &k : all) {
      for (const auto &r : all) {
        const auto a = MucScore(k, r);
        const auto b = BruteForceLinkScore(k, r);
        ASSERT_EQ(a.recall, b.recall);
        ASSERT_EQ(a.precision, b.precision);
      }
    }
  }
}

TEST(SetPartitions, BellNumbers) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(testing::AllSetPartitions(n).size(), bell[n]);
}

TEST(Core, Examples) {
  ExpectScore(CoreMrScore(Abcd(), Abcd()), 1, 1);
  ExpectScore(CoreMrScore(P("MR k1 : a b\nMR k2 : c d\n"), P("MR x : a b c d\n")), 1,
              Rational(1, 3));
  ExpectScore(CoreMrScore(Abcd(), P("MR x : a b\nMR y : c d\n")), Rational(1, 2), Rational(1, 2));
}

TEST(Core, AssignmentTieBreak) {
  // {a,b,c,d} meets {a,b} and {c,d} equally; the group with the earliest member wins.
  const auto key = P("MR k : a b c d\n");
  const auto response = P("MR y : c d\nMR x : a b\n");
  const auto core = CoreAssignment(key, response);
  ASSERT_EQ(core.size(), 1u);
  EXPECT_EQ(response.groups()[core[0]].mr_id, "x");
}

TEST(ExCore, Examples) {
  ExpectScore(ExCoreMrScore(Abcd(), Abcd()), 1, 1);
  ExpectScore(ExCoreMrScore(P("MR k1 : a b\nMR k2 : c d\n"), P("MR x : a b c d\n")),
              Rational(1, 2), Rational(1, 2));
  const auto response = P("MR x : a b\nMR y : c d\n");
  ExpectScore(ExCoreMrScore(Abcd(), response), Rational(3, 4), Rational(3, 4));
  const auto matching = ExCoreMatching(Abcd(), response);
  ASSERT_EQ(matching.size(), 2u);
  EXPECT_EQ(matching[0], std::make_pair(std::size_t{0}, std::size_t{0}));
  EXPECT_EQ(matching[1], std::make_pair(std::size_t{1}, std::size_t{1}));
}

// Exhaustive maximum over injective key→response assignments.
std::size_t BestMatching(const std::vector<std::vector<std::size_t>> &w, std::size_t row,
                         std::vector<bool> &used) {
  if (row == w.size()) return 0;
  std::size_t best = BestMatching(w, row + 1, used);
  for (std::size_t c = 0; c < used.size(); ++c) {
    if (used[c] || w[row][c] == 0) continue;
    used[c] = true;
    best = std::max(best, w[row][c] + BestMatching(w, row + 1, used));
    used[c] = false;
  }
  return best;
}

TEST(ExCore, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 9;
    const auto key = testing::FromLabels(testing::RandomLabels(n, 0.4, rng), "k");
    const auto response = testing::FromLabels(testing::RandomLabels(n, 0.4, rng), "r");
    std::vector<std::vector<std::size_t>> w(key.groups().size(),
                                            std::vector<std::size_t>(response.groups().size()));
    for (const auto &id : key.universe()) ++w[key.GroupOf(id)][response.GroupOf(id)];
    std::vector<bool> used(response.groups().size(), false);
    const std::size_t best = BestMatching(w, 0, used);
    const auto s = ExCoreMrScore(key, response);
    EXPECT_EQ(s.recall, Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(n)));
    EXPECT_EQ(s.precision, s.recall);
    std::size_t total = 0;
    std::set<std::size_t> rows, cols;
    for (auto [k, r] : ExCoreMatching(key, response)) {
      total += w[k][r];
      EXPECT_TRUE(rows.insert(k).second);
      EXPECT_TRUE(cols.insert(r).second);
    }
    EXPECT_EQ(total, best);
  }
}

TEST(ScoringProperties, SymmetryDominanceAndRange) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> rate(0.05, 0.95);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 2 + i % 29;
    const auto key = testing::FromLabels(testing::RandomLabels(n, rate(rng), rng), "k");
    const auto response = testing::FromLabels(testing::RandomLabels(n, rate(rng), rng), "r");
    const auto muc = MucScore(key, response);
    const auto core = CoreMrScore(key, response);
    EXPECT_EQ(muc.recall, MucScore(response, key).precision);
    EXPECT_EQ(core.recall, CoreMrScore(response, key).precision);
    EXPECT_LE(core.recall, muc.recall);
    EXPECT_LE(core.precision, muc.precision);
    EXPECT_LE(core.f_measure, muc.f_measure + 1e-12);
    for (ScoreMethod m : {ScoreMethod::kMuc, ScoreMethod::kCoreMr, ScoreMethod::kExCoreMr}) {
      const auto s = ScoreWith(m, key, response);
      EXPECT_EQ(s.method, m);
      EXPECT_GE(s.recall, Rational(0));
      EXPECT_LE(s.recall, Rational(1));
      EXPECT_GE(s.precision, Rational(0));
      EXPECT_LE(s.precision, Rational(1));
      EXPECT_GE(s.f_measure, 0.0);
      EXPECT_LE(s.f_measure, 1.0);
    }
  }
}

TEST(ScoringProperties, OvergroupingGetsFullMucRecall) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 20;
    auto labels = testing::RandomLabels(n, 0.5, rng);
    labels[1] = labels[0];
    const auto key = testing::FromLabels(labels, "k");
    const auto single = testing::FromLabels(std::vector<std::size_t>(n, 0), "r");
    EXPECT_EQ(MucScore(key, single).recall, Rational(1));
  }
}

TEST(Format, Scores) {
  const auto s = MucScore(Abcd(), P("MR x : a b\nMR y : c d\n"));
  EXPECT_EQ(FormatScores({s}), "muc\t50.0000\t50.0000\t50.0000\n");
  EXPECT_EQ(FormatPercent(1.0 / 3.0), "33.3333");
  EXPECT_EQ(FormatPercent(1.0), "100.0000");
  EXPECT_STREQ(ScoreMethodName(ScoreMethod::kExCoreMr), "excore");
}

}  // namespace
}  // namespace corefwb
