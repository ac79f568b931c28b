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

#ifndef LARD_RECORD_IO_H_
#define LARD_RECORD_IO_H_

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "lard/disfluency.h"

namespace lard {

inline constexpr int kRecordSchemaVersion = 1;

// JSONL schema, fields in this order: id, class, subclass, fluent, disfluent,
// annotated, tags, reparandum_span, interregnum_span, repair_span, degree,
// source_ids, seed.
nlohmann::ordered_json RecordToJson(const DisfluencyRecord& record);
std::string RecordToJsonLine(const DisfluencyRecord& record);

// Inverse of RecordToJson. The `annotated` string is not re-derived here; see
// ReadRecordLine. Throws JsonError naming `file` and the JSON pointer.
DisfluencyRecord RecordFromJson(const nlohmann::json& j, const std::string& file,
                                const std::string& where);

struct StoredRecord {
  DisfluencyRecord record;
  std::string annotated;
  size_t line = 0;
};

// Streams a JSONL file, skipping blank lines. Throws JsonError.
void ForEachRecord(const std::filesystem::path& path,
                   const std::function<void(StoredRecord&&)>& fn);
std::vector<StoredRecord> ReadRecords(const std::filesystem::path& path);

void WriteRecords(const std::filesystem::path& path,
                  const std::vector<const DisfluencyRecord*>& records);

// Same columns as the JSONL schema; arrays and spans are JSON-encoded cells.
void WriteRecordsCsv(std::ostream& out, const std::vector<StoredRecord>& records);

// RFC 4180 quoting.
std::string CsvCell(const std::string& value);

}  // namespace lard

#endif  // LARD_RECORD_IO_H_
