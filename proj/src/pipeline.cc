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

#include "lard/pipeline.h"

#include <fstream>

#include "lard/checksum.h"
#include "lard/cues.h"
#include "lard/dataset.h"
#include "lard/error.h"
#include "lard/pos.h"
#include "lard/record_io.h"
#include "lard/wordnet.h"

namespace lard {

namespace fs = std::filesystem;

nlohmann::ordered_json PipelineConfig::ToJson() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["input"] = input.string();
  j["format"] = std::string(FormatName(format));
  j["wordnet"] = wordnet_dir.string();
  j["cues"] = cues_path ? nlohmann::ordered_json(cues_path->string()) : nullptr;
  j["stoplist"] = stoplist_path ? nlohmann::ordered_json(stoplist_path->string()) : nullptr;
  j["dmax"] = max_degree;
  std::vector<std::string> names;
  for (auto cls : classes) names.emplace_back(ClassName(cls));
  j["classes"] = names;
  j["splits"] = {ratios.train, ratios.dev, ratios.test};
  j["out"] = out_dir.string();
  j["pretokenized"] = pretokenized;
  j["dedup"] = dedup;
  j["per_class"] = per_class;
  return j;
}

DatasetManifest RunPipeline(const PipelineConfig& config) {
  if (config.max_degree < 0) throw Error(ErrorCode::kInvalidArgument, "--dmax must be >= 0");
  const CueLexicon cues =
      config.cues_path ? CueLexicon::FromFile(*config.cues_path) : CueLexicon::Default();
  Stoplist stoplist =
      config.stoplist_path ? Stoplist::FromFile(*config.stoplist_path) : Stoplist::Default();
  // Validates the ratios before any expensive work.
  ComputeSplitSizes(0, config.ratios);

  const wordnet::Database db = wordnet::Database::Load(config.wordnet_dir);
  Corpus corpus = Ingest(config.input, config.format,
                         IngestOptions{config.pretokenized, config.dedup});

  LexiconTagger lexicon_tagger(db, std::move(stoplist));
  ExternalTagger external_tagger(&lexicon_tagger);
  for (const auto& seq : corpus.sequences) {
    if (auto it = corpus.external_tags.find(seq.source_id()); it != corpus.external_tags.end()) {
      external_tagger.Add(seq, it->second);
    }
  }
  const Tagger& tagger = config.format == InputFormat::kTsvTagged
                             ? static_cast<const Tagger&>(external_tagger)
                             : lexicon_tagger;

  const size_t input_sequences = corpus.sequences.size();
  Partition partition = PartitionCorpus(std::move(corpus.sequences), config.seed,
                                        config.per_class, config.classes);
  const ReplacementContext ctx{tagger, db, cues, config.max_degree};
  GenerationResult generated =
      GenerateDataset(partition, GenerationConfig{config.seed, config.workers}, ctx);

  const DatasetSplit split = SplitDataset(generated.records, config.ratios, config.seed);

  fs::create_directories(config.out_dir);
  DatasetManifest manifest;
  manifest.seed = config.seed;
  manifest.input_checksum = corpus.input_checksum;
  manifest.database_checksum = db.checksum();
  manifest.counts = Stats(generated.records);
  manifest.split_sizes = {split.train.size(), split.dev.size(), split.test.size()};
  manifest.config = config.ToJson();
  manifest.deficits = generated.deficits;
  manifest.replacement_resamples = generated.replacement_resamples;
  manifest.input_sequences = input_sequences;
  manifest.skipped_empty = corpus.skipped_empty;
  manifest.skipped_reserved = corpus.skipped_reserved;
  manifest.skipped_duplicates = corpus.skipped_duplicates;

  const std::vector<size_t>* parts[] = {&split.train, &split.dev, &split.test};
  StatsCounts audit;
  for (size_t i = 0; i < 3; ++i) {
    std::vector<const DisfluencyRecord*> rows;
    rows.reserve(parts[i]->size());
    for (size_t idx : *parts[i]) rows.push_back(&generated.records[idx]);
    const fs::path path = config.out_dir / kSplitFiles[i];
    WriteRecords(path, rows);
    manifest.output_checksums[kSplitFiles[i]] = Sha256File(path);
    ForEachRecord(path, [&](StoredRecord&& r) { audit.Add(r.record); });
  }
  if (!(audit == manifest.counts)) {
    throw Error(ErrorCode::kIoError, "self-audit failed: written JSONL counts differ");
  }

  const std::string table = FormatStatsTable(manifest.counts);
  {
    std::ofstream out(config.out_dir / kStatsFile, std::ios::binary | std::ios::trunc);
    out << table;
    if (!out) throw Error(ErrorCode::kIoError, "cannot write stats table");
  }
  manifest.output_checksums[kStatsFile] = Sha256Hex(table);
  {
    std::ofstream out(config.out_dir / kManifestFile, std::ios::binary | std::ios::trunc);
    out << manifest.ToJson().dump(2) << '\n';
    if (!out) throw Error(ErrorCode::kIoError, "cannot write manifest");
  }
  return manifest;
}

}  // namespace lard
