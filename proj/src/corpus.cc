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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "lard/checksum.h"
#include "lard/error.h"
#include "lard/random.h"

namespace lard {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMissingFile, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Applies the skip rules shared by every format and appends the sequence.
class CorpusBuilder {
 public:
  explicit CorpusBuilder(const IngestOptions& options) : options_(options) {}

  void AddFile(const fs::path& path, const std::string& bytes) {
    corpus_.files.push_back(path.string());
    hash_.Update(path.filename().string());
    hash_.Update(std::string_view("\0", 1));
    hash_.Update(bytes);
  }

  // Returns the admitted sequence, or nullptr if it was skipped.
  const TokenSequence* Add(std::string_view utterance, std::string source_id) {
    TokenSequence seq;
    try {
      seq = Tokenize(utterance, options_.pretokenized, std::move(source_id));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyInput) throw;
      ++corpus_.skipped_empty;
      return nullptr;
    }
    if (HasReservedToken(seq)) {
      ++corpus_.skipped_reserved;
      return nullptr;
    }
    if (options_.dedup && !seen_.insert(Detokenize(seq)).second) {
      ++corpus_.skipped_duplicates;
      return nullptr;
    }
    corpus_.sequences.push_back(std::move(seq));
    return &corpus_.sequences.back();
  }

  Corpus& corpus() { return corpus_; }

  Corpus Finish() {
    corpus_.input_checksum = hash_.HexDigest();
    return std::move(corpus_);
  }

 private:
  const IngestOptions& options_;
  Corpus corpus_;
  Sha256 hash_;
  std::unordered_set<std::string> seen_;
};

std::vector<fs::path> SgdFiles(const fs::path& path) {
  if (!fs::exists(path)) throw Error(ErrorCode::kMissingFile, path.string());
  if (!fs::is_directory(path)) return {path};
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path)) {
    const auto& p = entry.path();
    if (entry.is_regular_file() && p.extension() == ".json" &&
        p.filename() != "schema.json") {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error(ErrorCode::kMissingFile, "no .json files in " + path.string());
  return files;
}

}  // namespace

std::string_view FormatName(InputFormat format) {
  switch (format) {
    case InputFormat::kSgd: return "sgd";
    case InputFormat::kText: return "text";
    case InputFormat::kTsvTagged: return "tsv-tagged";
  }
  return "text";
}

std::optional<InputFormat> ParseFormat(std::string_view name) {
  for (auto f : {InputFormat::kSgd, InputFormat::kText, InputFormat::kTsvTagged}) {
    if (FormatName(f) == name) return f;
  }
  return std::nullopt;
}

bool HasReservedToken(const TokenSequence& seq) {
  return std::any_of(seq.words().begin(), seq.words().end(), [](const std::string& w) {
    return w == "+" || w.find_first_of("[]{}") != std::string::npos;
  });
}

Corpus IngestSgd(const fs::path& path, const IngestOptions& options) {
  CorpusBuilder builder(options);
  for (const auto& file : SgdFiles(path)) {
    const std::string bytes = ReadAll(file);
    builder.AddFile(file, bytes);
    const std::string name = file.string();
    json doc;
    try {
      doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
      throw JsonError(name, "", e.what());
    }
    if (!doc.is_array()) throw JsonError(name, "", "expected an array of dialogues");
    for (size_t d = 0; d < doc.size(); ++d) {
      const json& dialogue = doc[d];
      const std::string where = "/" + std::to_string(d);
      if (!dialogue.is_object()) throw JsonError(name, where, "expected an object");
      std::string dialogue_id = file.stem().string() + "#" + std::to_string(d);
      if (auto it = dialogue.find("dialogue_id"); it != dialogue.end()) {
        if (!it->is_string()) throw JsonError(name, where + "/dialogue_id", "expected a string");
        dialogue_id = it->get<std::string>();
      }
      auto turns = dialogue.find("turns");
      if (turns == dialogue.end() || !turns->is_array()) {
        throw JsonError(name, where + "/turns", "missing or not an array");
      }
      for (size_t t = 0; t < turns->size(); ++t) {
        const json& turn = (*turns)[t];
        const std::string turn_where = where + "/turns/" + std::to_string(t);
        if (!turn.is_object()) throw JsonError(name, turn_where, "expected an object");
        for (const char* key : {"speaker", "utterance"}) {
          auto it = turn.find(key);
          if (it == turn.end() || !it->is_string()) {
            throw JsonError(name, turn_where + "/" + key, "missing or not a string");
          }
        }
        builder.Add(turn["utterance"].get<std::string>(),
                    dialogue_id + ":" + std::to_string(t));
      }
    }
  }
  return builder.Finish();
}

Corpus IngestText(const fs::path& path, const IngestOptions& options, bool tagged) {
  CorpusBuilder builder(options);
  const std::string bytes = ReadAll(path);
  builder.AddFile(path, bytes);
  const std::string stem = path.stem().string();
  std::istringstream in(bytes);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view utterance = line;
    std::string_view tag_column;
    if (tagged) {
      size_t tab = line.find('\t');
      if (tab == std::string::npos) {
        if (SplitWhitespace(line).empty()) {
          ++builder.corpus().skipped_empty;
          continue;
        }
        throw ParseError(path.string(), line_no, "missing tab-separated tag column");
      }
      utterance = std::string_view(line).substr(0, tab);
      tag_column = std::string_view(line).substr(tab + 1);
    }
    const TokenSequence* seq = builder.Add(utterance, stem + ":" + std::to_string(line_no));
    if (seq == nullptr || !tagged) continue;
    std::vector<CoarsePos> tags;
    for (const auto& t : SplitWhitespace(tag_column)) {
      auto pos = ParsePos(t);
      if (!pos) throw ParseError(path.string(), line_no, "unknown tag '" + t + "'");
      tags.push_back(*pos);
    }
    if (tags.size() != seq->size()) {
      throw ParseError(path.string(), line_no,
                       std::to_string(tags.size()) + " tags for " +
                           std::to_string(seq->size()) + " tokens");
    }
    builder.corpus().external_tags.insert_or_assign(seq->source_id(), std::move(tags));
  }
  return builder.Finish();
}

Corpus Ingest(const fs::path& path, InputFormat format, const IngestOptions& options) {
  switch (format) {
    case InputFormat::kSgd: return IngestSgd(path, options);
    case InputFormat::kText: return IngestText(path, options, false);
    case InputFormat::kTsvTagged: return IngestText(path, options, true);
  }
  return IngestText(path, options, false);
}

Partition PartitionCorpus(std::vector<TokenSequence> sequences, uint64_t seed,
                          size_t per_class, std::vector<DisfluencyClass> classes) {
  if (classes.empty()) throw Error(ErrorCode::kInvalidArgument, "no classes selected");
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (sequences.size() < kMinPartitionSize) {
    throw Error(ErrorCode::kTooFewSequences,
                std::to_string(sequences.size()) + " sequences, need at least " +
                    std::to_string(kMinPartitionSize));
  }

  Rng rng(DeriveSeed(seed, "partition", 0));
  rng.Shuffle(sequences);

  const size_t k = classes.size();
  std::vector<size_t> sizes(k);
  if (per_class > 0 && per_class * k <= sequences.size()) {
    std::fill(sizes.begin(), sizes.end(), per_class);
  } else {
    for (size_t i = 0; i < k; ++i) {
      sizes[i] = sequences.size() / k + (i < sequences.size() % k ? 1 : 0);
    }
  }

  Partition out;
  out.classes = classes;
  size_t at = 0;
  for (size_t i = 0; i < k; ++i) {
    auto& part = out.parts[static_cast<size_t>(classes[i])];
    for (size_t j = 0; j < sizes[i]; ++j) part.push_back(std::move(sequences[at++]));
  }
  for (; at < sequences.size(); ++at) out.overflow.push_back(std::move(sequences[at]));

  auto& restarts = out.parts[static_cast<size_t>(DisfluencyClass::kRestart)];
  // Donor pools in preference order; each is scanned once front to back.
  std::vector<std::vector<TokenSequence>*> donors = {&out.overflow};
  for (DisfluencyClass cls : {DisfluencyClass::kFluent, DisfluencyClass::kRepetition,
                              DisfluencyClass::kReplacement}) {
    donors.push_back(&out.parts[static_cast<size_t>(cls)]);
  }
  size_t donor = 0, donor_at = 0;
  for (auto& seq : restarts) {
    if (seq.size() >= 2) continue;
    while (donor < donors.size()) {
      auto& pool = *donors[donor];
      while (donor_at < pool.size() && pool[donor_at].size() < 2) ++donor_at;
      if (donor_at < pool.size()) break;
      ++donor;
      donor_at = 0;
    }
    if (donor == donors.size()) break;
    std::swap(seq, (*donors[donor])[donor_at++]);
  }
  return out;
}

}  // namespace lard
