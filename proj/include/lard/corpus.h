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

#ifndef LARD_CORPUS_H_
#define LARD_CORPUS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lard/coarse_pos.h"
#include "lard/disfluency.h"
#include "lard/text.h"

namespace lard {

enum class InputFormat { kSgd, kText, kTsvTagged };

std::string_view FormatName(InputFormat format);
std::optional<InputFormat> ParseFormat(std::string_view name);

struct IngestOptions {
  bool pretokenized = true;
  bool dedup = false;
};

struct Corpus {
  std::vector<TokenSequence> sequences;
  // Per-token tags from tsv-tagged input, keyed by source id.
  std::unordered_map<std::string, std::vector<CoarsePos>> external_tags;
  std::vector<std::string> files;
  std::string input_checksum;  // SHA-256 over file names and bytes
  size_t skipped_empty = 0;
  size_t skipped_reserved = 0;
  size_t skipped_duplicates = 0;
};

// SGD dialogue JSON: `path` is one file or a directory whose *.json files
// (schema.json excluded) are read in name order. One sequence per turn,
// source id "<dialogue_id>:<turn_index>". Throws JsonError.
Corpus IngestSgd(const std::filesystem::path& path, const IngestOptions& options);

// One utterance per line; source id "<file stem>:<line number>". With
// `tagged`, a second tab-separated column holds one coarse tag per token.
Corpus IngestText(const std::filesystem::path& path, const IngestOptions& options,
                  bool tagged);

Corpus Ingest(const std::filesystem::path& path, InputFormat format,
              const IngestOptions& options);

// Tokens that would collide with the bracket notation.
bool HasReservedToken(const TokenSequence& seq);

inline constexpr size_t kMinPartitionSize = 8;

// Sequences assigned to each class in kAllClasses order, plus the overflow
// pool left over when a per-class cap is set.
struct Partition {
  std::vector<DisfluencyClass> classes;
  std::array<std::vector<TokenSequence>, 4> parts;
  std::vector<TokenSequence> overflow;

  const std::vector<TokenSequence>& part(DisfluencyClass cls) const {
    return parts[static_cast<size_t>(cls)];
  }
};

// Seeded shuffle, then contiguous blocks in class order. With per_class == 0
// (or too few sequences to fill every cap) the corpus is split into equal
// parts whose sizes differ by at most one; otherwise each part receives
// per_class sequences and the rest become overflow. Restart sequences
// shorter than two tokens are swapped for longer ones from the overflow pool,
// or failing that from the other parts. Throws Error(kTooFewSequences).
Partition PartitionCorpus(std::vector<TokenSequence> sequences, uint64_t seed,
                          size_t per_class = 0,
                          std::vector<DisfluencyClass> classes = {
                              std::begin(kAllClasses), std::end(kAllClasses)});

}  // namespace lard

#endif  // LARD_CORPUS_H_
