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

#include "lard/manifest.h"

#include <cstdio>

#include "lard/record_io.h"

namespace lard {
namespace {

std::vector<std::string> SubclassesOf(DisfluencyClass cls) {
  switch (cls) {
    case DisfluencyClass::kFluent:
      return {"fluent"};
    case DisfluencyClass::kRepetition:
      return {RepetitionSubclass(1), RepetitionSubclass(2), RepetitionSubclass(3)};
    case DisfluencyClass::kReplacement: {
      std::vector<std::string> out;
      for (CoarsePos pos : {CoarsePos::kNoun, CoarsePos::kVerb, CoarsePos::kAdjective}) {
        out.push_back(ReplacementSubclass(pos, false));
        out.push_back(ReplacementSubclass(pos, true));
      }
      return out;
    }
    case DisfluencyClass::kRestart:
      return {"restart"};
  }
  return {};
}

// Table order: repetitions, replacements, restarts, fluent.
constexpr DisfluencyClass kTableOrder[] = {
    DisfluencyClass::kRepetition, DisfluencyClass::kReplacement,
    DisfluencyClass::kRestart, DisfluencyClass::kFluent};

}  // namespace

StatsCounts::StatsCounts() {
  for (DisfluencyClass cls : kAllClasses) {
    classes[std::string(ClassName(cls))] = 0;
    for (const auto& sub : SubclassesOf(cls)) subclasses[sub] = 0;
  }
}

void StatsCounts::Add(const DisfluencyRecord& record) {
  ++classes[std::string(ClassName(record.cls))];
  ++subclasses[record.subclass];
  ++total;
}

StatsCounts Stats(const std::vector<DisfluencyRecord>& records) {
  StatsCounts counts;
  for (const auto& r : records) counts.Add(r);
  return counts;
}

std::string FormatStatsTable(const StatsCounts& counts) {
  std::vector<std::pair<std::string, int64_t>> rows;
  for (DisfluencyClass cls : kTableOrder) {
    const auto subs = SubclassesOf(cls);
    if (subs.size() > 1) {
      for (const auto& sub : subs) rows.emplace_back("  " + sub, counts.subclasses.at(sub));
    }
    rows.emplace_back(std::string(ClassName(cls)), counts.classes.at(std::string(ClassName(cls))));
  }
  // Subclasses outside the generator's inventory (hand-edited files).
  for (const auto& [sub, n] : counts.subclasses) {
    bool known = false;
    for (DisfluencyClass cls : kAllClasses) {
      for (const auto& s : SubclassesOf(cls)) known = known || s == sub;
    }
    if (!known) rows.emplace_back("  " + sub + " (unknown)", n);
  }
  rows.emplace_back("total", counts.total);

  size_t width = 0;
  for (const auto& [label, n] : rows) width = std::max(width, label.size());
  std::string out;
  char buf[64];
  for (const auto& [label, n] : rows) {
    std::snprintf(buf, sizeof(buf), "%10lld", static_cast<long long>(n));
    out += label + std::string(width - label.size() + 2, ' ') + buf + "\n";
  }
  return out;
}

nlohmann::ordered_json StatsToJson(const StatsCounts& counts) {
  nlohmann::ordered_json j;
  j["classes"] = counts.classes;
  j["subclasses"] = counts.subclasses;
  j["total"] = counts.total;
  return j;
}

nlohmann::ordered_json DatasetManifest::ToJson() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["seed"] = seed;
  j["input_checksum"] = input_checksum;
  j["database_checksum"] = database_checksum;
  j["counts"] = StatsToJson(counts);
  j["split_sizes"] = {{"train", split_sizes.train},
                      {"dev", split_sizes.dev},
                      {"test", split_sizes.test}};
  j["deficits"] = deficits;
  j["replacement_resamples"] = replacement_resamples;
  j["input_sequences"] = input_sequences;
  j["skipped"] = {{"empty", skipped_empty},
                  {"reserved", skipped_reserved},
                  {"duplicates", skipped_duplicates}};
  j["outputs"] = output_checksums;
  j["config"] = config;
  return j;
}

}  // namespace lard
