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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "corefwb/error.h"

namespace corefwb {
namespace {

SemanticNetwork Chain() {
  return ParseSemnet("person.jean < person\nperson < animate\ntable < furniture\n");
}

TEST(ParseSemnet, CountsConceptsAndEdges) {
  const auto net = ParseSemnet("# chain\nperson.jean < person\n  person   <   animate  \n");
  EXPECT_EQ(net.num_concepts(), 3u);
  EXPECT_EQ(net.num_isa_edges(), 2u);
}

TEST(ParseSemnet, EmptyFile) {
  const auto net = ParseSemnet("");
  EXPECT_EQ(net.num_concepts(), 0u);
  EXPECT_EQ(net.num_isa_edges(), 0u);
}

TEST(ParseSemnet, CycleIsNamed) {
  try {
    ParseSemnet("a < b\nb < a\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycle);
    const std::string what = e.what();
    EXPECT_NE(what.find('a'), std::string::npos);
    EXPECT_NE(what.find('b'), std::string::npos);
  }
  EXPECT_THROW(ParseSemnet("a < a\n"), Error);
  EXPECT_THROW(ParseSemnet("a < b\nb < c\nc < a\n"), Error);
}

TEST(ParseSemnet, SyntaxErrorNamesLine) {
  try {
    ParseSemnet("a < b\nb > c\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(ParseSemnet("a < b < c\n"), Error);
  EXPECT_THROW(ParseSemnet("a <\n"), Error);
}

TEST(Subsumption, Closure) {
  const auto net = Chain();
  EXPECT_TRUE(net.IsSubsumed("person.jean", "animate"));
  EXPECT_FALSE(net.IsSubsumed("animate", "person.jean"));
  EXPECT_TRUE(net.IsSubsumed("person", "person"));
}

TEST(Subsumption, UnknownConcept) {
  const auto net = Chain();
  try {
    net.IsSubsumed("dragon", "person");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownConcept);
  }
  EXPECT_THROW(net.Compatible("person", "dragon"), Error);
}

TEST(Compatibility, Examples) {
  const auto net = Chain();
  EXPECT_TRUE(net.Compatible("person", "animate"));
  EXPECT_TRUE(net.Compatible("animate", "person"));
  EXPECT_FALSE(net.Compatible("table", "person"));
  EXPECT_TRUE(net.Compatible("person.jean", "animate"));
}

TEST(Compatibility, SiblingsAreIncompatible) {
  const auto net = ParseSemnet("man < person\nwoman < person\n");
  EXPECT_FALSE(net.Compatible("man", "woman"));
}

TEST(Compatibility, SynonymsAreNotTransitive) {
  const auto net = ParseSemnet("a ~ b\nb ~ c\n");
  EXPECT_TRUE(net.Compatible("a", "b"));
  EXPECT_TRUE(net.Compatible("b", "a"));
  EXPECT_TRUE(net.Compatible("b", "c"));
  EXPECT_FALSE(net.Compatible("a", "c"));
}

TEST(Compatibility, MultipleParents) {
  const auto net = ParseSemnet("horse < animal\nhorse < vehicle\n");
  EXPECT_TRUE(net.Compatible("horse", "animal"));
  EXPECT_TRUE(net.Compatible("horse", "vehicle"));
  EXPECT_FALSE(net.Compatible("animal", "vehicle"));
}

TEST(Compatibility, IdsAgreeWithNames) {
  const auto net = ParseSemnet("a < b\nc ~ b\nd < c\n");
  for (const auto &x : net.concepts()) {
    for (const auto &y : net.concepts()) {
      EXPECT_EQ(net.CompatibleIds(*net.Find(x), *net.Find(y)), net.Compatible(x, y));
    }
  }
  EXPECT_FALSE(net.Find("zzz").has_value());
}

// Random DAG: edges only go from lower to higher index.
SemanticNetwork RandomDag(std::mt19937_64 &rng, std::size_t n, double density,
                          std::vector<std::vector<bool>> &reach) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> synonyms;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  reach.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) < density) {
        edges.emplace_back(names[i], names[j]);
        reach[i][j] = true;
      }
      if (coin(rng) < 0.05) synonyms.emplace_back(names[i], names[j]);
    }
  }
  // Warshall closure as the oracle.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return SemanticNetwork::Create(edges, synonyms, names);
}

TEST(SemnetProperties, SubsumptionMatchesWarshallAndIsPartialOrder) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<bool>> reach;
    const std::size_t n = 2 + trial % 18;
    const auto net = RandomDag(rng, n, 0.2, reach);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string a = "c" + std::to_string(i);
      EXPECT_TRUE(net.IsSubsumed(a, a));
      EXPECT_TRUE(net.Compatible(a, a));
      for (std::size_t j = 0; j < n; ++j) {
        const std::string b = "c" + std::to_string(j);
        EXPECT_EQ(net.IsSubsumed(a, b), reach[i][j]);
        EXPECT_EQ(net.Compatible(a, b), net.Compatible(b, a));
        if (i != j && net.IsSubsumed(a, b)) {
          EXPECT_FALSE(net.IsSubsumed(b, a));
        }
        for (std::size_t k = 0; k < n; ++k) {
          const std::string c = "c" + std::to_string(k);
          if (net.IsSubsumed(a, b) && net.IsSubsumed(b, c)) {
            EXPECT_TRUE(net.IsSubsumed(a, c));
          }
        }
      }
    }
  }
}

TEST(SemnetProperties, RandomCyclesAreRejected) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<bool>> reach;
    const std::size_t n = 3 + trial % 10;
    RandomDag(rng, n, 0.3, reach);
    // Close a cycle along a known path.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!reach[i][j]) continue;
        std::vector<std::pair<std::string, std::string>> edges = {
            {"c" + std::to_string(i), "c" + std::to_string(j)},
            {"c" + std::to_string(j), "c" + std::to_string(i)}};
        EXPECT_THROW(SemanticNetwork::Create(edges, {}), Error);
      }
    }
  }
}

}  // namespace
}  // namespace corefwb
