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

#include "lard/validate.h"

#include <algorithm>

#include "lard/annotation.h"
#include "lard/error.h"

namespace lard {
namespace {

std::string SpanText(const std::optional<Span>& s) {
  if (!s) return "null";
  return "[" + std::to_string(s->begin) + "," + std::to_string(s->end) + ")";
}

bool SameWords(const std::vector<std::string>& words, const TokenSequence& seq,
               size_t begin, size_t end) {
  return end - begin == words.size() &&
         std::equal(words.begin(), words.end(),
                    seq.words().begin() + static_cast<ptrdiff_t>(begin));
}

}  // namespace

std::vector<std::string> DeleteDisfluent(const DisfluencyRecord& record) {
  std::vector<std::string> out;
  const auto& words = record.disfluent.words();
  for (size_t i = 0; i < words.size(); ++i) {
    if (i >= record.token_tags.size() || record.token_tags[i] == 0) {
      out.push_back(words[i]);
    }
  }
  return out;
}

std::vector<std::string> ValidateRecord(const DisfluencyRecord& r,
                                        const std::string& annotated) {
  std::vector<std::string> errors;
  auto fail = [&](std::string msg) { errors.push_back(std::move(msg)); };
  const size_t n = r.disfluent.size();

  if (r.token_tags.size() != n) {
    fail("tags length " + std::to_string(r.token_tags.size()) + " != " +
         std::to_string(n) + " tokens");
  }

  // Span layout: reparandum, optional interregnum and repair are contiguous,
  // ordered and inside the sequence.
  bool spans_ok = true;
  if (r.cls == DisfluencyClass::kFluent) {
    if (r.reparandum || r.interregnum || r.repair) {
      fail("fluent record carries spans");
      spans_ok = false;
    }
  } else if (!r.reparandum || r.reparandum->empty()) {
    fail("missing reparandum");
    spans_ok = false;
  } else {
    size_t cursor = r.reparandum->end;
    if (r.reparandum->begin > r.reparandum->end || r.reparandum->end > n) {
      fail("reparandum " + SpanText(r.reparandum) + " out of bounds");
      spans_ok = false;
    }
    for (const auto* span : {&r.interregnum, &r.repair}) {
      if (!*span) continue;
      if ((*span)->begin != cursor || (*span)->end < (*span)->begin ||
          (*span)->end > n) {
        fail("span " + SpanText(*span) + " not adjacent/ordered after " +
             std::to_string(cursor));
        spans_ok = false;
      } else {
        cursor = (*span)->end;
      }
    }
  }

  if (spans_ok && r.token_tags.size() == n &&
      r.token_tags != TagsFromSpans(n, r.reparandum, r.interregnum)) {
    fail("tags disagree with reparandum/interregnum spans");
  }

  const std::vector<std::string> kept = DeleteDisfluent(r);
  if (kept != r.fluent.words()) {
    fail("reconstruction: '" + Detokenize(kept) + "' != fluent '" +
         Detokenize(r.fluent) + "'");
  }

  switch (r.cls) {
    case DisfluencyClass::kFluent:
      if (r.subclass != "fluent") fail("subclass '" + r.subclass + "' for fluent");
      if (!r.fluent.SameTokens(r.disfluent)) fail("fluent record altered");
      break;
    case DisfluencyClass::kRepetition:
      if (r.subclass != RepetitionSubclass(r.degree)) {
        fail("subclass '" + r.subclass + "' with degree " + std::to_string(r.degree));
      }
      if (r.interregnum) fail("repetition with interregnum");
      if (spans_ok && (!r.repair || r.repair->size() != r.reparandum->size() ||
                       static_cast<int>(r.reparandum->size()) != r.degree)) {
        fail("repetition spans do not match degree");
      } else if (spans_ok) {
        std::vector<std::string> rep(r.disfluent.words().begin() + static_cast<ptrdiff_t>(r.reparandum->begin),
                                     r.disfluent.words().begin() + static_cast<ptrdiff_t>(r.reparandum->end));
        if (!SameWords(rep, r.disfluent, r.repair->begin, r.repair->end)) {
          fail("repetition reparandum differs from repair");
        }
      }
      break;
    case DisfluencyClass::kReplacement: {
      const bool cue = r.interregnum.has_value();
      bool subclass_ok = false;
      for (CoarsePos pos : {CoarsePos::kNoun, CoarsePos::kVerb, CoarsePos::kAdjective}) {
        if (r.subclass == ReplacementSubclass(pos, cue)) subclass_ok = true;
      }
      if (!subclass_ok) fail("subclass '" + r.subclass + "' for replacement");
      if (spans_ok && (!r.repair || static_cast<int>(r.repair->size()) != r.degree + 1)) {
        fail("replacement repair does not hold degree + 1 tokens");
      }
      break;
    }
    case DisfluencyClass::kRestart:
      if (r.subclass != "restart") fail("subclass '" + r.subclass + "' for restart");
      if (r.repair) fail("restart with a repair span");
      if (spans_ok && static_cast<int>(r.reparandum->size()) != r.degree) {
        fail("restart degree differs from break position");
      }
      if (spans_ok && r.reparandum->size() <= r.fluent.size() &&
          SameWords(std::vector<std::string>(r.fluent.words().begin(),
                                             r.fluent.words().begin() +
                                                 static_cast<ptrdiff_t>(r.reparandum->size())),
                    r.disfluent, r.reparandum->begin, r.reparandum->end)) {
        fail("restart prefix repeats the start of the continuation");
      }
      break;
  }

  if (spans_ok) {
    const std::string expected = AnnotateExample(r);
    if (annotated != expected) {
      fail("annotated '" + annotated + "' != canonical '" + expected + "'");
    }
  }
  try {
    ParsedAnnotation parsed = ParseAnnotation(annotated);
    if (!parsed.disfluent.SameTokens(r.disfluent)) {
      fail("parsed annotation tokens differ from disfluent");
    }
    if (parsed.reparandum != r.reparandum || parsed.interregnum != r.interregnum ||
        parsed.repair != r.repair) {
      fail("parsed spans " + SpanText(parsed.reparandum) + " " +
           SpanText(parsed.interregnum) + " " + SpanText(parsed.repair) +
           " differ from record");
    }
  } catch (const MalformedAnnotation& e) {
    fail(std::string("annotation does not parse: ") + e.what());
  }
  return errors;
}

}  // namespace lard
