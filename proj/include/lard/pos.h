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

#ifndef LARD_POS_H_
#define LARD_POS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lard/coarse_pos.h"
#include "lard/text.h"
#include "lard/wordnet.h"

namespace lard {

struct TaggedSequence {
  TokenSequence sequence;
  std::vector<CoarsePos> tags;  // one per token
};

// Closed-class words that can never be replacement candidates.
class Stoplist {
 public:
  // The packaged default list (data/stoplist.txt).
  static Stoplist Default();
  static Stoplist FromFile(const std::filesystem::path& path);
  // One lowercased word per line, '#' comments and blank lines ignored.
  static Stoplist FromText(std::string_view text, const std::string& origin);

  bool Contains(std::string_view word) const;  // case-insensitive
  size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual TaggedSequence Tag(const TokenSequence& seq) const = 0;
};

// Tags by lexical-database membership. After the stoplist and punctuation
// checks, a token is a Noun, Verb or Adjective when one of its base forms is
// in that index. Ambiguous words take the POS with the most sense-tagged
// occurrences, then the most synsets, then Noun > Verb > Adjective.
class LexiconTagger : public Tagger {
 public:
  LexiconTagger(const wordnet::Database& db, Stoplist stoplist)
      : db_(db), stoplist_(std::move(stoplist)) {}

  TaggedSequence Tag(const TokenSequence& seq) const override;
  CoarsePos TagWord(std::string_view word) const;

 private:
  const wordnet::Database& db_;
  Stoplist stoplist_;
};

// Accepts tags supplied alongside the corpus (tsv-tagged input). Sequences
// are looked up by source id; unknown ids fall back to `fallback` if given,
// otherwise every token is Other.
class ExternalTagger : public Tagger {
 public:
  explicit ExternalTagger(const Tagger* fallback = nullptr)
      : fallback_(fallback) {}

  // Throws Error(kInvalidArgument) if the tag count differs from the token
  // count.
  void Add(const TokenSequence& seq, std::vector<CoarsePos> tags);
  TaggedSequence Tag(const TokenSequence& seq) const override;

 private:
  std::unordered_map<std::string, std::vector<CoarsePos>> tags_;
  const Tagger* fallback_;
};

// True for tokens without any letter or digit.
bool IsPunctuation(std::string_view token);

// Ascending indices of tokens tagged `pos`. Throws Error(kInvalidPos) for
// CoarsePos::kOther.
std::vector<size_t> Candidates(const TaggedSequence& tagged, CoarsePos pos);

}  // namespace lard

#endif  // LARD_POS_H_
