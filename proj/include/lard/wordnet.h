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

#ifndef LARD_WORDNET_H_
#define LARD_WORDNET_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lard/coarse_pos.h"

namespace lard::wordnet {

// One index.<pos> line.
struct LexicalEntry {
  std::string lemma;  // lowercase, multi-word lemmas joined by '_'
  CoarsePos pos = CoarsePos::kOther;
  std::vector<uint32_t> synset_offsets;
  int tagged_sense_count = 0;
};

// A lexical antonym pointer ("!"). Word numbers are 1-based; 0 on the source
// side means the pointer applies to every word of the synset.
struct AntonymPointer {
  int source_word = 0;
  uint32_t target_offset = 0;
  CoarsePos target_pos = CoarsePos::kOther;
  int target_word = 0;
};

struct Synset {
  uint32_t offset = 0;
  CoarsePos pos = CoarsePos::kOther;
  bool satellite = false;
  std::vector<std::string> words;  // source form, syntactic markers removed
  std::vector<AntonymPointer> antonyms;
};

struct SubstituteSet {
  std::set<std::string> synonyms;  // words joined by spaces
  std::set<std::string> antonyms;
  std::string source_lemma;
  CoarsePos pos = CoarsePos::kOther;

  // Sorted union of both sets; the uniform draw pool for replacements.
  std::vector<std::string> Pool() const;
};

inline constexpr size_t kMaxSubstituteWords = 4;

// Immutable in-memory view of the noun, verb and adjective parts of a
// Princeton WNdb directory.
class Database {
 public:
  // Reads index.{noun,verb,adj}, data.{noun,verb,adj} and the optional
  // {noun,verb,adj}.exc files. Throws Error(kMissingFile) or ParseError.
  static Database Load(const std::filesystem::path& dir);

  const LexicalEntry* Find(std::string_view lemma, CoarsePos pos) const;
  const Synset* FindSynset(CoarsePos pos, uint32_t offset) const;

  // Index lemmas reachable from `word` via the exception lists and the
  // standard detachment suffixes, the surface form itself first.
  std::vector<std::string> BaseForms(std::string_view word,
                                     CoarsePos pos) const;

  SubstituteSet Substitutes(std::string_view lemma, CoarsePos pos) const;

  size_t LemmaCount(CoarsePos pos) const;
  size_t SynsetCount(CoarsePos pos) const;

  // SHA-256 over the raw bytes of every file read, in a fixed order.
  const std::string& checksum() const { return checksum_; }

  // SHA-256 over a sorted dump of the parsed content; equal for equal input.
  std::string CanonicalDigest() const;

 private:
  struct PartOfSpeech {
    std::unordered_map<std::string, LexicalEntry> index;
    std::unordered_map<uint32_t, Synset> synsets;
    std::unordered_map<std::string, std::vector<std::string>> exceptions;
  };

  const PartOfSpeech* Part(CoarsePos pos) const;

  std::array<PartOfSpeech, 3> parts_;
  std::string checksum_;
};

}  // namespace lard::wordnet

#endif  // LARD_WORDNET_H_
