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

#include "lard/disfluency.h"

#include <algorithm>

#include "lard/error.h"

namespace lard {
namespace {

void Append(std::vector<std::string>* out, const std::vector<std::string>& src,
            size_t begin, size_t end) {
  out->insert(out->end(), src.begin() + static_cast<ptrdiff_t>(begin),
              src.begin() + static_cast<ptrdiff_t>(end));
}

DisfluencyRecord Finish(DisfluencyRecord r, ChoiceSource& source) {
  source.CheckExhausted();
  r.token_tags = TagsFromSpans(r.disfluent.size(), r.reparandum, r.interregnum);
  r.choice_plan = source.recorded();
  return r;
}

}  // namespace

std::string_view ClassName(DisfluencyClass cls) {
  switch (cls) {
    case DisfluencyClass::kFluent: return "fluent";
    case DisfluencyClass::kRepetition: return "repetition";
    case DisfluencyClass::kReplacement: return "replacement";
    case DisfluencyClass::kRestart: return "restart";
  }
  return "fluent";
}

std::optional<DisfluencyClass> ParseClass(std::string_view name) {
  for (DisfluencyClass cls : kAllClasses) {
    if (ClassName(cls) == name) return cls;
  }
  return std::nullopt;
}

std::string RepetitionSubclass(int degree) {
  return "repetition_" + std::to_string(degree);
}

std::string ReplacementSubclass(CoarsePos pos, bool cue) {
  return std::string(PosName(pos)) + "_replacement_" +
         (cue ? "with_cue" : "without_cue");
}

std::vector<uint8_t> TagsFromSpans(size_t length,
                                   const std::optional<Span>& reparandum,
                                   const std::optional<Span>& interregnum) {
  std::vector<uint8_t> tags(length, 0);
  for (const auto& span : {reparandum, interregnum}) {
    if (!span) continue;
    for (size_t i = span->begin; i < span->end && i < length; ++i) tags[i] = 1;
  }
  return tags;
}

DisfluencyRecord MakeFluent(const TokenSequence& seq) {
  DisfluencyRecord r;
  r.cls = DisfluencyClass::kFluent;
  r.subclass = "fluent";
  r.fluent = seq;
  r.disfluent = seq;
  r.token_tags.assign(seq.size(), 0);
  r.source_ids = {seq.source_id()};
  return r;
}

DisfluencyRecord MakeRepetition(const TokenSequence& seq, int degree,
                                ChoiceSource& source) {
  if (degree < 1 || degree > kMaxRepetitionDegree) {
    throw Error(ErrorCode::kInvalidArgument,
                "repetition degree must be 1..3, got " + std::to_string(degree));
  }
  const size_t d = static_cast<size_t>(degree);
  if (seq.size() < d) {
    throw Error(ErrorCode::kSequenceTooShort,
                std::to_string(seq.size()) + " tokens for degree " +
                    std::to_string(degree));
  }
  const auto start = static_cast<size_t>(
      source.Index("start", 0, static_cast<int64_t>(seq.size() - d)));

  std::vector<std::string> words;
  words.reserve(seq.size() + d);
  Append(&words, seq.words(), 0, start + d);
  Append(&words, seq.words(), start, seq.size());

  DisfluencyRecord r;
  r.cls = DisfluencyClass::kRepetition;
  r.subclass = RepetitionSubclass(degree);
  r.fluent = seq;
  r.disfluent = TokenSequence(std::move(words), seq.source_id());
  r.reparandum = Span{start, start + d};
  r.repair = Span{start + d, start + 2 * d};
  r.degree = degree;
  r.source_ids = {seq.source_id()};
  return Finish(std::move(r), source);
}

DisfluencyRecord GenerateRepetition(const TokenSequence& seq, ChoiceSource& source) {
  std::vector<int64_t> feasible;
  for (int64_t d = 1; d <= kMaxRepetitionDegree; ++d) {
    if (seq.size() >= static_cast<size_t>(d)) feasible.push_back(d);
  }
  if (feasible.empty()) throw Error(ErrorCode::kSequenceTooShort, "empty sequence");
  const int64_t degree = source.DegreeFrom("degree", feasible);
  return MakeRepetition(seq, static_cast<int>(degree), source);
}

DisfluencyRecord MakeReplacement(const TokenSequence& seq, CoarsePos pos,
                                 bool cue, const ReplacementContext& ctx,
                                 ChoiceSource& source) {
  const std::vector<size_t> candidates = Candidates(ctx.tagger.Tag(seq), pos);
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoCandidate,
                "no " + std::string(PosName(pos)) + " in '" + Detokenize(seq) + "'");
  }
  const size_t idx = source.IndexFrom("repair_index", candidates);
  const wordnet::SubstituteSet subs = ctx.db.Substitutes(seq[idx], pos);
  const std::vector<std::string> pool = subs.Pool();
  if (pool.empty()) {
    throw Error(ErrorCode::kNoCandidate,
                "no synonyms or antonyms for '" + seq[idx] + "'");
  }
  // The base form the lookup resolved to; differs from the surface word when
  // the substitute is inserted uninflected.
  source.Note("repair_lemma", subs.source_lemma);
  const std::string substitute = source.Word("substitute", pool);

  int64_t cap = static_cast<int64_t>(idx);
  if (ctx.max_degree > 0) cap = std::min<int64_t>(cap, ctx.max_degree);
  const auto d = static_cast<size_t>(source.Degree("degree", 0, cap));
  const std::optional<std::string> cue_text = source.Cue("cue", cue, ctx.cues.cues());

  const std::vector<std::string> sub_words = SplitWhitespace(substitute);
  const std::vector<std::string> cue_words =
      cue_text ? SplitWhitespace(*cue_text) : std::vector<std::string>{};
  const size_t start = idx - d;

  std::vector<std::string> words;
  Append(&words, seq.words(), 0, idx);
  words.insert(words.end(), sub_words.begin(), sub_words.end());
  words.insert(words.end(), cue_words.begin(), cue_words.end());
  Append(&words, seq.words(), start, seq.size());

  DisfluencyRecord r;
  r.cls = DisfluencyClass::kReplacement;
  r.subclass = ReplacementSubclass(pos, cue);
  r.fluent = seq;
  r.disfluent = TokenSequence(std::move(words), seq.source_id());
  const size_t rep_end = idx + sub_words.size();
  r.reparandum = Span{start, rep_end};
  size_t repair_begin = rep_end;
  if (cue) {
    r.interregnum = Span{rep_end, rep_end + cue_words.size()};
    repair_begin = r.interregnum->end;
  }
  r.repair = Span{repair_begin, repair_begin + d + 1};
  r.degree = static_cast<int>(d);
  r.source_ids = {seq.source_id()};
  return Finish(std::move(r), source);
}

DisfluencyRecord GenerateReplacement(const TokenSequence& seq,
                                     const ReplacementContext& ctx,
                                     ChoiceSource& source) {
  const TaggedSequence tagged = ctx.tagger.Tag(seq);
  std::vector<CoarsePos> available;
  for (CoarsePos pos : {CoarsePos::kNoun, CoarsePos::kVerb, CoarsePos::kAdjective}) {
    if (std::find(tagged.tags.begin(), tagged.tags.end(), pos) != tagged.tags.end()) {
      available.push_back(pos);
    }
  }
  if (available.empty()) {
    throw Error(ErrorCode::kNoCandidate,
                "no noun, verb or adjective in '" + Detokenize(seq) + "'");
  }
  const CoarsePos pos = source.Pos("pos", available);
  const bool cue = source.Coin("use_cue");
  return MakeReplacement(seq, pos, cue, ctx, source);
}

DisfluencyRecord MakeRestart(const TokenSequence& first,
                             const TokenSequence& second, ChoiceSource& source) {
  if (first.SameTokens(second)) {
    throw Error(ErrorCode::kIdenticalSequences, "'" + Detokenize(first) + "'");
  }
  if (first.size() < 2) {
    throw Error(ErrorCode::kSequenceTooShort, "restart needs at least 2 tokens");
  }
  if (second.empty()) {
    throw Error(ErrorCode::kSequenceTooShort, "empty continuation");
  }
  source.Partner("partner", second.source_id());
  const auto b = static_cast<size_t>(
      source.Index("break", 1, static_cast<int64_t>(first.size()) - 1));
  if (second.size() >= b &&
      std::equal(first.words().begin(), first.words().begin() + static_cast<ptrdiff_t>(b),
                 second.words().begin())) {
    throw Error(ErrorCode::kPrefixCollision,
                "'" + Detokenize(first.Slice(0, b)) + "' starts the continuation");
  }

  std::vector<std::string> words;
  Append(&words, first.words(), 0, b);
  Append(&words, second.words(), 0, second.size());

  DisfluencyRecord r;
  r.cls = DisfluencyClass::kRestart;
  r.subclass = "restart";
  r.fluent = second;
  r.disfluent = TokenSequence(std::move(words), first.source_id());
  r.reparandum = Span{0, b};
  r.degree = static_cast<int>(b);
  r.source_ids = {first.source_id(), second.source_id()};
  return Finish(std::move(r), source);
}

std::string AnnotateExample(const DisfluencyRecord& record) {
  const auto& words = record.disfluent.words();
  if (!record.reparandum || record.reparandum->empty()) return Detokenize(words);

  const Span rep = *record.reparandum;
  const bool has_repair = record.repair && !record.repair->empty();
  std::vector<std::string> chunks;
  chunks.reserve(words.size() + 3);
  auto close_if_no_repair = [&] {
    if (!has_repair) chunks.emplace_back("]");
  };

  for (size_t i = 0; i < words.size(); ++i) {
    std::string chunk = words[i];
    if (i == rep.begin) chunk.insert(0, "[");
    if (record.interregnum && !record.interregnum->empty()) {
      if (i == record.interregnum->begin) chunk.insert(0, "{");
      if (i + 1 == record.interregnum->end) chunk.push_back('}');
    }
    if (has_repair && i + 1 == record.repair->end) chunk.push_back(']');
    chunks.push_back(std::move(chunk));

    if (i + 1 == rep.end) {
      chunks.emplace_back("+");
      if (!record.interregnum || record.interregnum->empty()) close_if_no_repair();
    }
    if (record.interregnum && !record.interregnum->empty() &&
        i + 1 == record.interregnum->end) {
      close_if_no_repair();
    }
  }
  return Detokenize(chunks);
}

}  // namespace lard
