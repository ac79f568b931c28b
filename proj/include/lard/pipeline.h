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

#ifndef LARD_PIPELINE_H_
#define LARD_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lard/corpus.h"
#include "lard/manifest.h"
#include "lard/split.h"

namespace lard {

// Effective configuration of one `generate` run.
struct PipelineConfig {
  uint64_t seed = 42;
  std::filesystem::path input;
  InputFormat format = InputFormat::kSgd;
  std::filesystem::path wordnet_dir;
  std::optional<std::filesystem::path> cues_path;
  std::optional<std::filesystem::path> stoplist_path;
  int max_degree = 3;
  std::vector<DisfluencyClass> classes = {std::begin(kAllClasses), std::end(kAllClasses)};
  SplitRatios ratios;
  std::filesystem::path out_dir;
  size_t workers = 1;
  bool pretokenized = true;
  bool dedup = false;
  size_t per_class = 0;

  // Everything that can change the output. The worker count is left out
  // because it cannot.
  nlohmann::ordered_json ToJson() const;
};

// Files written by RunPipeline, relative to the output directory.
inline constexpr const char* kSplitFiles[] = {"train.jsonl", "dev.jsonl", "test.jsonl"};
inline constexpr const char* kManifestFile = "manifest.json";
inline constexpr const char* kStatsFile = "stats.txt";

// ingest -> partition -> generate -> split -> write, then re-reads the
// written JSONL and checks the counts against the manifest. Throws Error on
// any failure, including a failed self-audit.
DatasetManifest RunPipeline(const PipelineConfig& config);

}  // namespace lard

#endif  // LARD_PIPELINE_H_
