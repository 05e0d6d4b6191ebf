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

#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "corefwb/error.h"
#include "testing/partitions.h"
#include "testing/synthetic_corpus.h"

namespace corefwb {
namespace {

std::string ReadData(const std::string &name) {
  std::ifstream in(std::string(COREFWB_TEST_DATA) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInternal;
}

ReferringExpression Re(std::string id, std::size_t start, std::size_t end) {
  ReferringExpression re;
  re.id = std::move(id);
  re.start_token = start;
  re.end_token = end;
  re.head_concept = "x";
  return re;
}

TEST(ParseCorpus, EmptyDocument) {
  const auto doc = ParseCorpus(ReadData("empty.corpus"));
  EXPECT_TRUE(doc.res().empty());
}

TEST(ParseCorpus, SingleRe) {
  const auto doc = ParseCorpus(
      "<RE id=\"r1\" mr=\"m1\" kind=\"proper\" head=\"person.jean\" gender=\"m\" "
      "number=\"sg\" def=\"none\">Jean</RE> dort .");
  ASSERT_EQ(doc.res().size(), 1u);
  const auto &re = doc.res()[0];
  EXPECT_EQ(re.start_token, 0u);
  EXPECT_EQ(re.end_token, 1u);
  EXPECT_EQ(doc.tokens().size(), 3u);
  EXPECT_EQ(re.surface, "Jean");
  EXPECT_EQ(re.kind, ReKind::kProperName);
  EXPECT_EQ(re.gender, Gender::kMasculine);
  EXPECT_EQ(re.number, Number::kSingular);
  EXPECT_EQ(re.definiteness, Definiteness::kNone);
  EXPECT_EQ(re.head_concept, "person.jean");
  EXPECT_EQ(re.key_mr, "m1");
  EXPECT_TRUE(re.parsed);
}

TEST(ParseCorpus, DefaultsForMissingAttributes) {
  const auto doc = ParseCorpus("<RE id=\"a\" kind=\"common\" parsed=\"no\">truc</RE>");
  const auto &re = doc.res().at(0);
  EXPECT_EQ(re.gender, Gender::kUnknown);
  EXPECT_EQ(re.number, Number::kUnknown);
  EXPECT_EQ(re.definiteness, Definiteness::kNone);
  EXPECT_FALSE(re.head_concept.has_value());
  EXPECT_FALSE(re.key_mr.has_value());
  EXPECT_FALSE(re.parsed);
}

TEST(ParseCorpus, SegmentationIndices) {
  const auto doc = ParseCorpus(ReadData("jean.corpus"));
  EXPECT_EQ(doc.doc_id(), "jean");
  ASSERT_EQ(doc.res().size(), 3u);
  EXPECT_EQ(doc.res()[0].sentence_index, 0u);
  EXPECT_EQ(doc.res()[1].sentence_index, 1u);
  EXPECT_EQ(doc.res()[2].sentence_index, 1u);
  EXPECT_EQ(doc.res()[2].paragraph_index, 0u);
  EXPECT_EQ(doc.res()[2].start_token, 6u);
  EXPECT_EQ(doc.IndexOf("r2"), 1u);
  EXPECT_FALSE(doc.IndexOf("nope").has_value());
}

TEST(ParseCorpus, NestedRes) {
  const auto doc = ParseCorpus(
      "<S>\n<RE id=\"o\" kind=\"common\" head=\"house\">la maison de "
      "<RE id=\"i\" kind=\"proper\" head=\"person.jean\">Jean</RE></RE> .");
  ASSERT_EQ(doc.res().size(), 2u);
  EXPECT_EQ(doc.res()[0].id, "o");
  EXPECT_EQ(doc.res()[0].end_token, 4u);
  EXPECT_EQ(doc.res()[1].id, "i");
  EXPECT_EQ(doc.res()[1].start_token, 3u);
}

TEST(ParseCorpus, SameStartOrdersOuterFirst) {
  const auto doc = ParseCorpus(
      "<RE id=\"b\" kind=\"common\"><RE id=\"a\" kind=\"common\">x</RE> y</RE>");
  EXPECT_EQ(doc.res()[0].id, "b");
  EXPECT_EQ(doc.res()[1].id, "a");
}

TEST(ParseCorpus, Errors) {
  EXPECT_EQ(CodeOf([] {
              ParseCorpus("<RE id=\"r1\" kind=\"proper\">Jean</RE> <RE id=\"r1\" kind=\"pronoun\">il</RE>");
            }),
            ErrorCode::kDuplicateId);
  EXPECT_EQ(CodeOf([] { ParseCorpus("<RE id=\"r1\" kind=\"verb\">x</RE>"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseCorpus("<RE id=\"r1\" kind=\"common\" gender=\"n\">x</RE>"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseCorpus("<RE id=\"r1\" kind=\"common\">x"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseCorpus("x </RE>"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseCorpus("<RE id=\"r1\">x</RE>"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseCorpus("<FOO>"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseCorpus("<RE id=\"r1\" kind=\"pronoun\" def=\"def\">il</RE>"); }),
            ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] { ParseCorpus("<RE id=\"r1\" kind=\"common\" parsed=\"no\" head=\"x\">y</RE>"); }),
            ErrorCode::kFormat);
}

TEST(ParseCorpus, ErrorNamesLine) {
  try {
    ParseCorpus("<S>\nok .\n<RE id=\"r1\" kind=\"bogus\">x</RE>\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ParseCorpus, SpanMustStayInsideSentence) {
  EXPECT_EQ(CodeOf([] { ParseCorpus("<S>\n<RE id=\"r1\" kind=\"common\">a\n<S>\nb</RE>"); }),
            ErrorCode::kParse);
}

TEST(DocumentCreate, RejectsOverlapWithoutNesting) {
  EXPECT_EQ(CodeOf([] {
              Document::Create("d", {"a", "b", "c"}, {0}, {0}, {Re("x", 0, 2), Re("y", 1, 3)});
            }),
            ErrorCode::kOverlap);
  EXPECT_NO_THROW(
      Document::Create("d", {"a", "b", "c"}, {0}, {0}, {Re("x", 0, 3), Re("y", 1, 2)}));
}

TEST(DocumentCreate, SortsCanonically) {
  const auto doc = Document::Create("d", {"a", "b", "c", "d"}, {0}, {0},
                                    {Re("z", 2, 3), Re("q", 0, 1), Re("b", 0, 2), Re("a", 0, 2)});
  std::vector<std::string> ids;
  for (const auto &re : doc.res()) ids.push_back(re.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"a", "b", "q", "z"}));
}

TEST(KeyPartition, Buckets) {
  const auto doc = ParseCorpus(
      "<RE id=\"r1\" mr=\"m1\" kind=\"common\">a</RE> <RE id=\"r2\" mr=\"m1\" kind=\"common\">b</RE> "
      "<RE id=\"r3\" mr=\"m2\" kind=\"common\">c</RE> <RE id=\"r4\" mr=\"m2\" kind=\"common\">d</RE>");
  const auto key = KeyPartition(doc);
  EXPECT_EQ(SerializePartition(key), "MR m1 : r1 r2\nMR m2 : r3 r4\n");
}

TEST(KeyPartition, Singleton) {
  const auto key = KeyPartition(ParseCorpus("<RE id=\"r1\" mr=\"m1\" kind=\"common\">a</RE>"));
  EXPECT_EQ(key.groups().size(), 1u);
  EXPECT_EQ(key.size(), 1u);
}

TEST(KeyPartition, MissingKeyNamesIds) {
  const auto doc = ParseCorpus(
      "<RE id=\"r1\" mr=\"m1\" kind=\"common\">a</RE> <RE id=\"r2\" kind=\"common\">b</RE> "
      "<RE id=\"r3\" mr=\"m2\" kind=\"common\">c</RE>");
  try {
    KeyPartition(doc);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteKey);
    EXPECT_NE(std::string(e.what()).find("r2"), std::string::npos);
  }
}

TEST(CorpusStats, TwoReFixture) {
  const auto stats = CorpusStats(ParseCorpus(ReadData("two_re.corpus")));
  EXPECT_EQ(stats.words, 5u);
  EXPECT_EQ(stats.res, 2u);
  EXPECT_EQ(stats.pronoun_res, 1u);
  EXPECT_EQ(stats.nominal_res, 1u);
  EXPECT_EQ(stats.key_mrs, 2u);
  EXPECT_TRUE(stats.key_complete);
  EXPECT_DOUBLE_EQ(stats.re_per_mr, 1.0);
}

TEST(CorpusStats, WithoutKey) {
  const auto stats = CorpusStats(ParseCorpus("<RE id=\"r1\" kind=\"common\">a</RE>"));
  EXPECT_EQ(stats.key_mrs, 0u);
  EXPECT_FALSE(stats.key_complete);
  EXPECT_EQ(FormatStats(stats).find("key_complete\tno") != std::string::npos, true);
}

TEST(CorpusProperties, SyntheticCorporaHoldInvariants) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto synthetic = testing::GenerateCorpus(testing::VaScaleShape(seed));
    std::size_t tags = 0;
    for (std::size_t at = 0; (at = synthetic.corpus.find("<RE ", at)) != std::string::npos; ++at) {
      ++tags;
    }
    const auto doc = ParseCorpus(synthetic.corpus);
    const auto stats = CorpusStats(doc);
    EXPECT_EQ(stats.res, tags);
    EXPECT_EQ(stats.nominal_res + stats.pronoun_res, stats.res);
    for (std::size_t i = 1; i < doc.res().size(); ++i) {
      EXPECT_LE(doc.res()[i - 1].start_token, doc.res()[i].start_token);
      EXPECT_LE(doc.res()[i - 1].sentence_index, doc.res()[i].sentence_index);
    }
    const auto key = KeyPartition(doc);
    ASSERT_EQ(key.size(), doc.res().size());
    for (const auto &re : doc.res()) EXPECT_TRUE(key.Contains(re.id));
  }
}

TEST(Partition, ParseAndSerialize) {
  const auto p = ParsePartition("# comment\nMR m1 : r1 r2\n\nMR m2 : r3\n");
  EXPECT_EQ(p.groups().size(), 2u);
  EXPECT_EQ(p.GroupOf("r2"), p.GroupOf("r1"));
  EXPECT_NE(p.GroupOf("r3"), p.GroupOf("r1"));
  EXPECT_EQ(SerializePartition(p), "MR m1 : r1 r2\nMR m2 : r3\n");
}

TEST(Partition, GroupsOrderedBySmallestMemberId) {
  const auto p = ParsePartition("MR z : c\nMR y : b a\n");
  EXPECT_EQ(SerializePartition(p), "MR y : b a\nMR z : c\n");
}

TEST(Partition, FormatErrors) {
  EXPECT_EQ(CodeOf([] { ParsePartition("MR m1 : r1\nMR m2 : r1\n"); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] { ParsePartition("MR m1 :\n"); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] { ParsePartition("m1 r1 r2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParsePartition("MR m1 : a\nMR m1 : b\n"); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] { Partition::Create({"a", "b"}, {{"m", {"a"}}}); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] { Partition::Create({"a"}, {{"m", {"a", "b"}}}); }), ErrorCode::kFormat);
}

TEST(Partition, RoundTripOnRandomPartitions) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto p = testing::FromLabels(testing::RandomLabels(1 + i % 25, 0.3, rng), "g");
    const auto text = SerializePartition(p);
    const auto back = ParsePartition(text);
    EXPECT_EQ(back, p);
    EXPECT_EQ(SerializePartition(back), text);
  }
}

TEST(Partition, MutationsAreRejected) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto p = testing::FromLabels(testing::RandomLabels(3 + i % 10, 0.4, rng), "g");
    auto groups = p.groups();
    // Duplicate one member into a different group, or drop one.
    if (groups.size() > 1 && i % 2 == 0) {
      groups[1].members.push_back(groups[0].members[0]);
    } else {
      groups[0].members.pop_back();
      if (groups[0].members.empty()) groups.erase(groups.begin());
    }
    EXPECT_THROW(Partition::Create(p.universe(), groups), Error);
  }
}

}  // namespace
}  // namespace corefwb
