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

#ifndef LARD_MANIFEST_H_
#define LARD_MANIFEST_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "lard/disfluency.h"
#include "lard/split.h"

namespace lard {

// Per-class and per-subclass record counts. Every class and every known
// subclass is present, zero when absent.
struct StatsCounts {
  std::map<std::string, int64_t> classes;
  std::map<std::string, int64_t> subclasses;
  int64_t total = 0;

  StatsCounts();
  void Add(const DisfluencyRecord& record);

  friend bool operator==(const StatsCounts&, const StatsCounts&) = default;
};

StatsCounts Stats(const std::vector<DisfluencyRecord>& records);

// Subclass rows grouped under their class totals.
std::string FormatStatsTable(const StatsCounts& counts);
nlohmann::ordered_json StatsToJson(const StatsCounts& counts);

struct DatasetManifest {
  uint64_t seed = 0;
  std::string input_checksum;
  std::string database_checksum;
  StatsCounts counts;
  SplitSizes split_sizes;
  nlohmann::ordered_json config;
  std::map<std::string, int64_t> deficits;
  size_t replacement_resamples = 0;
  size_t input_sequences = 0;
  size_t skipped_empty = 0;
  size_t skipped_reserved = 0;
  size_t skipped_duplicates = 0;
  std::map<std::string, std::string> output_checksums;  // file -> SHA-256

  nlohmann::ordered_json ToJson() const;
};

}  // namespace lard

#endif  // LARD_MANIFEST_H_
