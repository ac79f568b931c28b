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

#include "lard/export.h"

namespace lard {

std::string_view TaskName(Task task) {
  switch (task) {
    case Task::kDetection: return "detection";
    case Task::kClassification: return "classification";
    case Task::kExtraction: return "extraction";
    case Task::kCorrection: return "correction";
  }
  return "detection";
}

std::optional<Task> ParseTask(std::string_view name) {
  for (Task t : {Task::kDetection, Task::kClassification, Task::kExtraction,
                 Task::kCorrection}) {
    if (TaskName(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view DetectionLabel(DisfluencyClass cls) {
  return cls == DisfluencyClass::kFluent ? "fluent" : "disfluent";
}

TaskExample Export(const DisfluencyRecord& record, Task task) {
  TaskExample ex;
  ex.task = task;
  ex.id = record.id;
  switch (task) {
    case Task::kDetection:
      ex.input = Detokenize(record.disfluent);
      ex.target = std::string(DetectionLabel(record.cls));
      break;
    case Task::kClassification:
      ex.input = Detokenize(record.disfluent);
      ex.target = std::string(ClassName(record.cls));
      break;
    case Task::kExtraction: {
      ex.input = record.disfluent.words();
      std::vector<std::string> tags;
      tags.reserve(record.token_tags.size());
      for (uint8_t t : record.token_tags) {
        tags.emplace_back(t ? kDisfluentTag : kFluentTag);
      }
      ex.target = std::move(tags);
      break;
    }
    case Task::kCorrection:
      ex.input = Detokenize(record.disfluent);
      ex.target = Detokenize(record.fluent);
      break;
  }
  return ex;
}

nlohmann::ordered_json TaskExampleToJson(const TaskExample& example) {
  nlohmann::ordered_json j;
  j["id"] = example.id;
  j["task"] = std::string(TaskName(example.task));
  std::visit([&](const auto& v) { j["input"] = v; }, example.input);
  std::visit([&](const auto& v) { j["target"] = v; }, example.target);
  return j;
}

std::optional<std::string> CheckTaskExample(const TaskExample& ex) {
  const auto* input_text = std::get_if<std::string>(&ex.input);
  const auto* input_tokens = std::get_if<std::vector<std::string>>(&ex.input);
  const auto* target_text = std::get_if<std::string>(&ex.target);
  const auto* target_tags = std::get_if<std::vector<std::string>>(&ex.target);
  switch (ex.task) {
    case Task::kDetection:
      if (!input_text || !target_text) return "detection expects text -> label";
      if (*target_text != "fluent" && *target_text != "disfluent") {
        return "detection label '" + *target_text + "'";
      }
      break;
    case Task::kClassification:
      if (!input_text || !target_text) return "classification expects text -> label";
      if (!ParseClass(*target_text)) return "class label '" + *target_text + "'";
      break;
    case Task::kExtraction:
      if (!input_tokens || !target_tags) return "extraction expects tokens -> tags";
      if (input_tokens->size() != target_tags->size()) {
        return "extraction has " + std::to_string(target_tags->size()) +
               " tags for " + std::to_string(input_tokens->size()) + " tokens";
      }
      for (const auto& tag : *target_tags) {
        if (tag != kFluentTag && tag != kDisfluentTag) return "tag '" + tag + "'";
      }
      break;
    case Task::kCorrection:
      if (!input_text || !target_text) return "correction expects text -> text";
      if (SplitWhitespace(*target_text).empty()) return "empty correction target";
      break;
  }
  return std::nullopt;
}

}  // namespace lard
