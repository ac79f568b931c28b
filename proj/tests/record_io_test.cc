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
#include <sstream>

#include "gtest/gtest.h"
#include "lard/error.h"
#include "test_util.h"

namespace lard {
namespace {

using test::Seq;

DisfluencyRecord Restart() {
  auto source = ChoiceSource::Replay(
      ChoicePlan{{PartnerChoice("partner", "d:1"), IndexChoice("break", 4)}});
  DisfluencyRecord r = MakeRestart(Seq("Do you want to check out ?", "d:0"),
                                   Seq("When is the check-out date ?", "d:1"), source);
  r.id = "restart-000003";
  r.seed = 18446744073709551557ull;
  return r;
}

TEST(RecordIoTest, FieldOrderMatchesTheSchema) {
  auto j = RecordToJson(Restart());
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "id", "class", "subclass", "fluent", "disfluent", "annotated", "tags",
                      "reparandum_span", "interregnum_span", "repair_span", "degree",
                      "source_ids", "seed"}));
  EXPECT_EQ(j["annotated"], "[Do you want to + ] When is the check-out date ?");
  EXPECT_TRUE(j["repair_span"].is_null());
  EXPECT_EQ(j["reparandum_span"], nlohmann::json::array({0, 4}));
}

TEST(RecordIoTest, JsonRoundTrip) {
  const DisfluencyRecord r = Restart();
  nlohmann::json j = nlohmann::json::parse(RecordToJsonLine(r));
  DisfluencyRecord back = RecordFromJson(j, "mem", "line 1");
  EXPECT_EQ(back.id, r.id);
  EXPECT_EQ(back.cls, r.cls);
  EXPECT_EQ(back.disfluent.words(), r.disfluent.words());
  EXPECT_EQ(back.fluent.words(), r.fluent.words());
  EXPECT_EQ(back.reparandum, r.reparandum);
  EXPECT_EQ(back.repair, r.repair);
  EXPECT_EQ(back.token_tags, r.token_tags);
  EXPECT_EQ(back.source_ids, r.source_ids);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_EQ(RecordToJsonLine(back), RecordToJsonLine(r));
}

TEST(RecordIoTest, MissingOrMistypedFieldsNameThePath) {
  nlohmann::json j = nlohmann::json::parse(RecordToJsonLine(Restart()));
  j.erase("tags");
  try {
    RecordFromJson(j, "f.jsonl", "line 7");
    FAIL();
  } catch (const JsonError& e) {
    EXPECT_NE(e.path().find("tags"), std::string::npos);
    EXPECT_EQ(e.file(), "f.jsonl");
  }
  j = nlohmann::json::parse(RecordToJsonLine(Restart()));
  j["class"] = "hesitation";
  EXPECT_THROW(RecordFromJson(j, "f.jsonl", "line 7"), JsonError);
}

TEST(RecordIoTest, FileRoundTripAndCsv) {
  test::TempDir dir("record-io");
  const DisfluencyRecord a = Restart();
  DisfluencyRecord b = MakeFluent(Seq("say \"hi\", please", "q:1"));
  b.id = "fluent-000000";
  const auto path = dir.path() / "x.jsonl";
  WriteRecords(path, {&a, &b});
  auto stored = ReadRecords(path);
  ASSERT_EQ(stored.size(), 2u);
  EXPECT_EQ(stored[1].record.id, "fluent-000000");
  EXPECT_EQ(stored[1].line, 2u);
  EXPECT_EQ(stored[0].annotated, AnnotateExample(a));

  std::ostringstream csv;
  WriteRecordsCsv(csv, stored);
  std::string text = csv.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "id,class,subclass,fluent,disfluent,annotated,tags,reparandum_span,"
            "interregnum_span,repair_span,degree,source_ids,seed");
  EXPECT_NE(text.find("\"say \"\"hi\"\", please\""), std::string::npos);
  EXPECT_NE(text.find("\"[0,4]\""), std::string::npos);
}

TEST(RecordIoTest, BadLineReportsItsNumber) {
  test::TempDir dir("record-io-bad");
  const auto path = dir.path() / "bad.jsonl";
  std::ofstream(path) << RecordToJsonLine(Restart()) << "\n{not json\n";
  try {
    ReadRecords(path);
    FAIL();
  } catch (const JsonError& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(CsvCellTest, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(CsvCell("plain"), "plain");
  EXPECT_EQ(CsvCell("a,b"), "\"a,b\"");
  EXPECT_EQ(CsvCell("say \"x\""), "\"say \"\"x\"\"\"");
}

}  // namespace
}  // namespace lard
