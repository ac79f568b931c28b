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

#ifndef LARD_DISFLUENCY_H_
#define LARD_DISFLUENCY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lard/choice_plan.h"
#include "lard/cues.h"
#include "lard/pos.h"
#include "lard/text.h"
#include "lard/wordnet.h"

namespace lard {

enum class DisfluencyClass { kFluent, kRepetition, kReplacement, kRestart };

inline constexpr DisfluencyClass kAllClasses[] = {
    DisfluencyClass::kFluent, DisfluencyClass::kRepetition,
    DisfluencyClass::kReplacement, DisfluencyClass::kRestart};

std::string_view ClassName(DisfluencyClass cls);
std::optional<DisfluencyClass> ParseClass(std::string_view name);

// "repetition_2", "noun_replacement_with_cue", "restart", "fluent".
std::string RepetitionSubclass(int degree);
std::string ReplacementSubclass(CoarsePos pos, bool cue);

// One generated example. Spans index into `disfluent`.
struct DisfluencyRecord {
  std::string id;
  DisfluencyClass cls = DisfluencyClass::kFluent;
  std::string subclass;
  TokenSequence fluent;     // for restarts: the continuation sequence
  TokenSequence disfluent;
  std::optional<Span> reparandum;
  std::optional<Span> interregnum;
  std::optional<Span> repair;
  int degree = 0;
  std::vector<uint8_t> token_tags;  // 1 = disfluent, per disfluent token
  std::vector<std::string> source_ids;
  uint64_t seed = 0;
  ChoicePlan choice_plan;
};

// Tags derived from the spans: 1 inside reparandum or interregnum.
std::vector<uint8_t> TagsFromSpans(size_t length, const std::optional<Span>& reparandum,
                                   const std::optional<Span>& interregnum);

inline constexpr int kMaxRepetitionDegree = 3;
inline constexpr int kDefaultReplacementDegreeCap = 3;

struct ReplacementContext {
  const Tagger& tagger;
  const wordnet::Database& db;
  const CueLexicon& cues;
  // Upper bound on the echoed context; 0 lifts the cap (degree in [0, idx]).
  int max_degree = kDefaultReplacementDegreeCap;
};

DisfluencyRecord MakeFluent(const TokenSequence& seq);

// Repeats seq[i, i+degree) once, with i uniform over [0, len - degree].
// Throws Error(kInvalidArgument) for degree outside 1..3 and
// Error(kSequenceTooShort) when len < degree.
DisfluencyRecord MakeRepetition(const TokenSequence& seq, int degree,
                                ChoiceSource& source);

// Draws the degree uniformly from the feasible values of 1..3, then calls
// MakeRepetition.
DisfluencyRecord GenerateRepetition(const TokenSequence& seq, ChoiceSource& source);

// Substitutes a synonym or antonym of one `pos` word in front of it, echoing
// `degree` context tokens, optionally followed by a repair cue.
// Throws Error(kInvalidPos) for Other and Error(kNoCandidate) when the
// sequence has no such word or the word has no substitutes.
DisfluencyRecord MakeReplacement(const TokenSequence& seq, CoarsePos pos,
                                 bool cue, const ReplacementContext& ctx,
                                 ChoiceSource& source);

// Draws the POS uniformly from those present in the sequence and the cue
// flag as a fair coin, then calls MakeReplacement.
DisfluencyRecord GenerateReplacement(const TokenSequence& seq,
                                     const ReplacementContext& ctx,
                                     ChoiceSource& source);

// Breaks `first` at b in [1, len - 1] and continues with `second`.
// Throws Error(kIdenticalSequences), Error(kSequenceTooShort) or
// Error(kPrefixCollision).
DisfluencyRecord MakeRestart(const TokenSequence& first,
                             const TokenSequence& second, ChoiceSource& source);

// Bracket notation over the space-joined disfluent tokens, e.g.
// "Find me a [same + {sorry} different] one" or "[Do you want to + ] When ...".
std::string AnnotateExample(const DisfluencyRecord& record);

}  // namespace lard

#endif  // LARD_DISFLUENCY_H_
