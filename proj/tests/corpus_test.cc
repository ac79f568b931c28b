// Copyright 2026 The LARD Authors.
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

#include "lard/corpus.h"

#include <fstream>
#include <set>

#include "gtest/gtest.h"
#include "lard/error.h"
#include "test_util.h"

namespace lard {
namespace {

namespace fs = std::filesystem;
using test::Seq;

TEST(IngestSgdTest, ReadsUserAndSystemTurnsSkippingSchemaAndReserved) {
  Corpus c = IngestSgd(test::DataDir() / "sgd", IngestOptions{});
  ASSERT_EQ(c.sequences.size(), 4u);
  EXPECT_EQ(c.files.size(), 1u);
  EXPECT_EQ(c.skipped_empty, 1u);
  EXPECT_EQ(c.skipped_reserved, 1u);
  EXPECT_EQ(c.sequences[0].source_id(), "1_00000:0");
  EXPECT_EQ(Detokenize(c.sequences[1]), "Where are you flying to ?");
  EXPECT_EQ(c.sequences[2].source_id(), "1_00001:0");
  EXPECT_EQ(c.input_checksum.size(), 64u);
}

TEST(IngestSgdTest, DedupDropsRepeatedUtterances) {
  Corpus c = IngestSgd(test::DataDir() / "sgd", IngestOptions{true, true});
  EXPECT_EQ(c.sequences.size(), 3u);
  EXPECT_EQ(c.skipped_duplicates, 1u);
}

TEST(IngestSgdTest, MalformedJsonNamesThePointer) {
  try {
    IngestSgd(test::DataDir() / "bad_sgd.json", IngestOptions{});
    FAIL();
  } catch (const JsonError& e) {
    EXPECT_EQ(e.path(), "/0/turns/0/utterance");
  }
  EXPECT_THROW(IngestSgd(test::DataDir() / "absent", IngestOptions{}), Error);
}

class TextCorpusTest : public ::testing::Test {
 protected:
  fs::path Write(const std::string& name, const std::string& text) {
    fs::path p = dir_.path() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
  test::TempDir dir_{"corpus"};
};

TEST_F(TextCorpusTest, OneUtterancePerLine) {
  auto p = Write("utts.txt", "I'm here.\n\n  \nsee you [later]\nok then\r\n");
  Corpus raw = IngestText(p, IngestOptions{false, false}, false);
  ASSERT_EQ(raw.sequences.size(), 2u);
  EXPECT_EQ(raw.sequences[0].words(), (std::vector<std::string>{"I", "'m", "here", "."}));
  EXPECT_EQ(raw.sequences[0].source_id(), "utts:1");
  EXPECT_EQ(raw.sequences[1].source_id(), "utts:5");
  EXPECT_EQ(Detokenize(raw.sequences[1]), "ok then");
  EXPECT_EQ(raw.skipped_empty, 2u);
  EXPECT_EQ(raw.skipped_reserved, 1u);
}

TEST_F(TextCorpusTest, TaggedColumnsAreValidated) {
  auto good = Write("tagged.tsv", "find a salon\tverb other noun\n");
  Corpus c = IngestText(good, IngestOptions{}, true);
  EXPECT_EQ(c.external_tags.at("tagged:1"),
            (std::vector<CoarsePos>{CoarsePos::kVerb, CoarsePos::kOther, CoarsePos::kNoun}));

  auto count = Write("count.tsv", "find a salon\tverb noun\n");
  try {
    IngestText(count, IngestOptions{}, true);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(IngestText(Write("tag.tsv", "a\tadverb\n"), IngestOptions{}, true), ParseError);
  EXPECT_THROW(IngestText(Write("tab.tsv", "a b\n"), IngestOptions{}, true), ParseError);
}

TEST_F(TextCorpusTest, ChecksumDependsOnBytes) {
  auto a = IngestText(Write("same.txt", "a b\n"), IngestOptions{}, false).input_checksum;
  auto b = IngestText(Write("same.txt", "a b\n"), IngestOptions{}, false).input_checksum;
  auto c = IngestText(Write("same.txt", "a c\n"), IngestOptions{}, false).input_checksum;
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

std::vector<TokenSequence> Numbered(size_t n, size_t short_every = 0) {
  std::vector<TokenSequence> out;
  for (size_t i = 0; i < n; ++i) {
    std::string text = "u" + std::to_string(i);
    if (short_every == 0 || i % short_every != 0) text += " tail";
    out.push_back(Seq(text, std::to_string(i)));
  }
  return out;
}

TEST(PartitionTest, QuartersAreDisjointAndBalanced) {
  Partition p = PartitionCorpus(Numbered(103), 42);
  std::set<std::string> seen;
  for (const auto& part : p.parts) {
    EXPECT_GE(part.size(), 25u);
    EXPECT_LE(part.size(), 26u);
    for (const auto& s : part) EXPECT_TRUE(seen.insert(s.source_id()).second);
  }
  EXPECT_EQ(seen.size(), 103u);
  EXPECT_TRUE(p.overflow.empty());
}

TEST(PartitionTest, PerClassCapLeavesAnOverflowPool) {
  Partition p = PartitionCorpus(Numbered(100), 42, 10);
  for (const auto& part : p.parts) EXPECT_EQ(part.size(), 10u);
  EXPECT_EQ(p.overflow.size(), 60u);
}

TEST(PartitionTest, DeterministicUnderSeed) {
  auto ids = [](const Partition& p) {
    std::vector<std::string> out;
    for (const auto& part : p.parts) {
      for (const auto& s : part) out.push_back(s.source_id());
    }
    return out;
  };
  EXPECT_EQ(ids(PartitionCorpus(Numbered(40), 1)), ids(PartitionCorpus(Numbered(40), 1)));
  EXPECT_NE(ids(PartitionCorpus(Numbered(40), 1)), ids(PartitionCorpus(Numbered(40), 2)));
}

TEST(PartitionTest, RestartsReceiveSequencesOfAtLeastTwoTokens) {
  Partition p = PartitionCorpus(Numbered(200, 3), 9);
  for (const auto& s : p.part(DisfluencyClass::kRestart)) EXPECT_GE(s.size(), 2u);
}

TEST(PartitionTest, SelectedClassesOnly) {
  Partition p = PartitionCorpus(Numbered(30), 1, 0,
                                {DisfluencyClass::kRestart, DisfluencyClass::kFluent});
  EXPECT_EQ(p.part(DisfluencyClass::kFluent).size(), 15u);
  EXPECT_EQ(p.part(DisfluencyClass::kRestart).size(), 15u);
  EXPECT_TRUE(p.part(DisfluencyClass::kRepetition).empty());
}

TEST(PartitionTest, TooFewSequences) {
  try {
    PartitionCorpus(Numbered(kMinPartitionSize - 1), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewSequences);
  }
}

}  // namespace
}  // namespace lard
