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

#include "lard/pos.h"

#include "gtest/gtest.h"
#include "lard/error.h"
#include "test_util.h"

namespace lard {
namespace {

using test::MiniWordnet;
using test::Seq;

TEST(CoarsePosTest, NamesRoundTrip) {
  for (CoarsePos pos : {CoarsePos::kNoun, CoarsePos::kVerb, CoarsePos::kAdjective,
                        CoarsePos::kOther}) {
    EXPECT_EQ(ParsePos(PosName(pos)), pos);
  }
  EXPECT_EQ(ParsePos("adj"), CoarsePos::kAdjective);
  EXPECT_EQ(ParsePos("n"), CoarsePos::kNoun);
  EXPECT_FALSE(ParsePos("adverb").has_value());
}

TEST(StoplistTest, DefaultCoversClosedClassWords) {
  Stoplist stop = Stoplist::Default();
  for (const char* w : {"I", "me", "a", "the", "to", "is", "do", "you", "in", "one", "'m"}) {
    EXPECT_TRUE(stop.Contains(w)) << w;
  }
  EXPECT_FALSE(stop.Contains("salon"));
}

TEST(StoplistTest, RejectsMultiwordLines) {
  EXPECT_THROW(Stoplist::FromText("a\nof the\n", "inline"), ParseError);
  EXPECT_EQ(Stoplist::FromText("# comment\nA\n\nb\n", "inline").size(), 2u);
}

TEST(LexiconTaggerTest, ResolvesAmbiguityBySenseFrequency) {
  LexiconTagger tagger(MiniWordnet(), Stoplist::Default());
  TaggedSequence tagged = tagger.Tag(Seq("Find me a different salon on March 11th ."));
  EXPECT_EQ(tagged.tags,
            (std::vector<CoarsePos>{CoarsePos::kVerb, CoarsePos::kOther, CoarsePos::kOther,
                                    CoarsePos::kAdjective, CoarsePos::kNoun,
                                    CoarsePos::kOther, CoarsePos::kOther, CoarsePos::kOther,
                                    CoarsePos::kOther}));
  EXPECT_EQ(tagger.TagWord("salons"), CoarsePos::kNoun);
  EXPECT_EQ(tagger.TagWord("zebra"), CoarsePos::kOther);
}

TEST(CandidatesTest, ReturnsIndicesInOrder) {
  LexiconTagger tagger(MiniWordnet(), Stoplist::Default());
  TaggedSequence tagged = tagger.Tag(Seq("I need to find a flight"));
  EXPECT_EQ(Candidates(tagged, CoarsePos::kVerb), (std::vector<size_t>{1, 3}));
  EXPECT_EQ(Candidates(tagged, CoarsePos::kNoun), (std::vector<size_t>{5}));
  EXPECT_TRUE(Candidates(tagged, CoarsePos::kAdjective).empty());
}

TEST(CandidatesTest, OtherIsNotAContentClass) {
  TaggedSequence tagged{Seq("hello"), {CoarsePos::kOther}};
  try {
    Candidates(tagged, CoarsePos::kOther);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPos);
  }
}

TEST(ExternalTaggerTest, UsesSuppliedTagsThenFallsBack) {
  LexiconTagger lexicon(MiniWordnet(), Stoplist::Default());
  ExternalTagger tagger(&lexicon);
  TokenSequence known = Seq("salon find", "f:1");
  tagger.Add(known, {CoarsePos::kVerb, CoarsePos::kNoun});
  EXPECT_EQ(tagger.Tag(known).tags,
            (std::vector<CoarsePos>{CoarsePos::kVerb, CoarsePos::kNoun}));
  EXPECT_EQ(tagger.Tag(Seq("salon find", "f:2")).tags,
            (std::vector<CoarsePos>{CoarsePos::kNoun, CoarsePos::kVerb}));
  EXPECT_THROW(tagger.Add(known, {CoarsePos::kNoun}), Error);
}

TEST(PunctuationTest, Classifies) {
  EXPECT_TRUE(IsPunctuation("?"));
  EXPECT_TRUE(IsPunctuation("..."));
  EXPECT_FALSE(IsPunctuation("check-out"));
}

}  // namespace
}  // namespace lard
