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

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

#include "lard/error.h"
#include "lard/resources.h"

namespace lard {

std::string_view PosName(CoarsePos pos) {
  switch (pos) {
    case CoarsePos::kNoun: return "noun";
    case CoarsePos::kVerb: return "verb";
    case CoarsePos::kAdjective: return "adjective";
    case CoarsePos::kOther: return "other";
  }
  return "other";
}

std::optional<CoarsePos> ParsePos(std::string_view text) {
  const std::string t = ToLower(text);
  if (t == "noun" || t == "n") return CoarsePos::kNoun;
  if (t == "verb" || t == "v") return CoarsePos::kVerb;
  if (t == "adj" || t == "adjective" || t == "a") return CoarsePos::kAdjective;
  if (t == "other" || t == "o") return CoarsePos::kOther;
  return std::nullopt;
}

Stoplist Stoplist::Default() {
  return FromText(resources::kDefaultStoplist, "<packaged stoplist>");
}

Stoplist Stoplist::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMissingFile, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return FromText(ss.str(), path.string());
}

Stoplist Stoplist::FromText(std::string_view text, const std::string& origin) {
  Stoplist out;
  size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto words = SplitWhitespace(line);
    if (words.empty()) continue;
    if (words.size() > 1) {
      throw ParseError(origin, line_no, "expected one word per line");
    }
    out.words_.insert(ToLower(words[0]));
  }
  return out;
}

bool Stoplist::Contains(std::string_view word) const {
  return words_.contains(ToLower(word));
}

bool IsPunctuation(std::string_view token) {
  return std::none_of(token.begin(), token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
}

CoarsePos LexiconTagger::TagWord(std::string_view word) const {
  if (IsPunctuation(word) || stoplist_.Contains(word)) return CoarsePos::kOther;
  // Digits never name a replaceable concept.
  if (std::any_of(word.begin(), word.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      })) {
    return CoarsePos::kOther;
  }

  static constexpr std::array<CoarsePos, 3> kOrder = {
      CoarsePos::kNoun, CoarsePos::kVerb, CoarsePos::kAdjective};
  CoarsePos best = CoarsePos::kOther;
  std::tuple<int, size_t> best_score{-1, 0};
  for (CoarsePos pos : kOrder) {
    auto bases = db_.BaseForms(word, pos);
    if (bases.empty()) continue;
    const wordnet::LexicalEntry* entry = db_.Find(bases.front(), pos);
    std::tuple<int, size_t> score{entry->tagged_sense_count,
                                  entry->synset_offsets.size()};
    // Strictly greater keeps the earlier POS on ties.
    if (score > best_score) {
      best_score = score;
      best = pos;
    }
  }
  return best;
}

TaggedSequence LexiconTagger::Tag(const TokenSequence& seq) const {
  TaggedSequence out{seq, {}};
  out.tags.reserve(seq.size());
  for (const auto& word : seq.words()) out.tags.push_back(TagWord(word));
  return out;
}

void ExternalTagger::Add(const TokenSequence& seq, std::vector<CoarsePos> tags) {
  if (tags.size() != seq.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                seq.source_id() + ": " + std::to_string(tags.size()) +
                    " tags for " + std::to_string(seq.size()) + " tokens");
  }
  tags_.insert_or_assign(seq.source_id(), std::move(tags));
}

TaggedSequence ExternalTagger::Tag(const TokenSequence& seq) const {
  if (auto it = tags_.find(seq.source_id());
      it != tags_.end() && it->second.size() == seq.size()) {
    return TaggedSequence{seq, it->second};
  }
  if (fallback_ != nullptr) return fallback_->Tag(seq);
  return TaggedSequence{seq, std::vector<CoarsePos>(seq.size(), CoarsePos::kOther)};
}

std::vector<size_t> Candidates(const TaggedSequence& tagged, CoarsePos pos) {
  if (pos == CoarsePos::kOther) {
    throw Error(ErrorCode::kInvalidPos, "candidates require noun, verb or adjective");
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < tagged.tags.size(); ++i) {
    if (tagged.tags[i] == pos) out.push_back(i);
  }
  return out;
}

}  // namespace lard
