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

#include "lard/record_io.h"

#include <fstream>
#include <ostream>

#include "lard/error.h"

namespace lard {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json SpanJson(const std::optional<Span>& span) {
  if (!span) return nullptr;
  return ordered_json::array({span->begin, span->end});
}

std::string Dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

class FieldReader {
 public:
  FieldReader(const json& j, const std::string& file, const std::string& where)
      : j_(j), file_(file), where_(where) {}

  const json& Get(const char* key, json::value_t type) const {
    auto it = j_.find(key);
    if (it == j_.end()) Fail(key, "missing field");
    if (it->type() != type &&
        !(type == json::value_t::number_unsigned && it->is_number_integer() &&
          it->get<int64_t>() >= 0)) {
      Fail(key, std::string("expected ") + TypeName(type) + ", got " + it->type_name());
    }
    return *it;
  }

  std::string String(const char* key) const {
    return Get(key, json::value_t::string).get<std::string>();
  }

  std::optional<Span> SpanField(const char* key) const {
    auto it = j_.find(key);
    if (it == j_.end()) Fail(key, "missing field");
    if (it->is_null()) return std::nullopt;
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_unsigned() ||
        !(*it)[1].is_number_unsigned()) {
      Fail(key, "expected [start, end] or null");
    }
    return Span{(*it)[0].get<size_t>(), (*it)[1].get<size_t>()};
  }

  [[noreturn]] void Fail(const std::string& key, const std::string& why) const {
    throw JsonError(file_, where_ + "/" + key, why);
  }

 private:
  static const char* TypeName(json::value_t t) {
    switch (t) {
      case json::value_t::string: return "string";
      case json::value_t::array: return "array";
      case json::value_t::number_unsigned: return "non-negative integer";
      default: return "value";
    }
  }

  const json& j_;
  const std::string& file_;
  const std::string& where_;
};

TokenSequence SequenceFrom(const std::string& text, const FieldReader& reader,
                           const char* key) {
  auto words = SplitWhitespace(text);
  if (words.empty()) reader.Fail(key, "empty token sequence");
  return TokenSequence(std::move(words));
}

}  // namespace

ordered_json RecordToJson(const DisfluencyRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["class"] = std::string(ClassName(r.cls));
  j["subclass"] = r.subclass;
  j["fluent"] = Detokenize(r.fluent);
  j["disfluent"] = Detokenize(r.disfluent);
  j["annotated"] = AnnotateExample(r);
  ordered_json tags = ordered_json::array();
  for (uint8_t t : r.token_tags) tags.push_back(static_cast<int>(t));
  j["tags"] = std::move(tags);
  j["reparandum_span"] = SpanJson(r.reparandum);
  j["interregnum_span"] = SpanJson(r.interregnum);
  j["repair_span"] = SpanJson(r.repair);
  j["degree"] = r.degree;
  j["source_ids"] = r.source_ids;
  j["seed"] = r.seed;
  return j;
}

std::string RecordToJsonLine(const DisfluencyRecord& record) {
  return Dump(RecordToJson(record));
}

DisfluencyRecord RecordFromJson(const json& j, const std::string& file,
                                const std::string& where) {
  if (!j.is_object()) throw JsonError(file, where, "expected an object");
  FieldReader f(j, file, where);
  DisfluencyRecord r;
  r.id = f.String("id");
  const std::string cls = f.String("class");
  auto parsed = ParseClass(cls);
  if (!parsed) f.Fail("class", "unknown class '" + cls + "'");
  r.cls = *parsed;
  r.subclass = f.String("subclass");
  r.fluent = SequenceFrom(f.String("fluent"), f, "fluent");
  r.disfluent = SequenceFrom(f.String("disfluent"), f, "disfluent");
  for (const auto& t : f.Get("tags", json::value_t::array)) {
    if (!t.is_number_integer() || (t.get<int64_t>() != 0 && t.get<int64_t>() != 1)) {
      f.Fail("tags", "tags must be 0 or 1");
    }
    r.token_tags.push_back(static_cast<uint8_t>(t.get<int64_t>()));
  }
  r.reparandum = f.SpanField("reparandum_span");
  r.interregnum = f.SpanField("interregnum_span");
  r.repair = f.SpanField("repair_span");
  const json& degree = f.Get("degree", json::value_t::number_unsigned);
  r.degree = degree.get<int>();
  for (const auto& id : f.Get("source_ids", json::value_t::array)) {
    if (!id.is_string()) f.Fail("source_ids", "expected strings");
    r.source_ids.push_back(id.get<std::string>());
  }
  r.seed = f.Get("seed", json::value_t::number_unsigned).get<uint64_t>();
  if (!r.source_ids.empty()) {
    r.disfluent.set_source_id(r.source_ids.front());
    r.fluent.set_source_id(r.source_ids.back());
  }
  return r;
}

void ForEachRecord(const std::filesystem::path& path,
                   const std::function<void(StoredRecord&&)>& fn) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMissingFile, path.string());
  std::string line;
  size_t line_no = 0;
  const std::string file = path.string();
  while (std::getline(in, line)) {
    ++line_no;
    if (SplitWhitespace(line).empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw JsonError(file, where, e.what());
    }
    StoredRecord stored;
    stored.record = RecordFromJson(j, file, where);
    FieldReader f(j, file, where);
    stored.annotated = f.String("annotated");
    stored.line = line_no;
    fn(std::move(stored));
  }
}

std::vector<StoredRecord> ReadRecords(const std::filesystem::path& path) {
  std::vector<StoredRecord> out;
  ForEachRecord(path, [&](StoredRecord&& r) { out.push_back(std::move(r)); });
  return out;
}

void WriteRecords(const std::filesystem::path& path,
                  const std::vector<const DisfluencyRecord*>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  for (const auto* r : records) out << RecordToJsonLine(*r) << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

std::string CsvCell(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void WriteRecordsCsv(std::ostream& out, const std::vector<StoredRecord>& records) {
  static constexpr const char* kColumns[] = {
      "id", "class", "subclass", "fluent", "disfluent", "annotated", "tags",
      "reparandum_span", "interregnum_span", "repair_span", "degree",
      "source_ids", "seed"};
  for (size_t i = 0; i < std::size(kColumns); ++i) {
    out << (i ? "," : "") << kColumns[i];
  }
  out << '\n';
  for (const auto& stored : records) {
    ordered_json j = RecordToJson(stored.record);
    j["annotated"] = stored.annotated;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out << ',';
      first = false;
      out << CsvCell(value.is_string() ? value.get<std::string>() : Dump(value));
    }
    out << '\n';
  }
}

}  // namespace lard
