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

#ifndef LARD_EXPORT_H_
#define LARD_EXPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lard/disfluency.h"

namespace lard {

enum class Task { kDetection, kClassification, kExtraction, kCorrection };

std::string_view TaskName(Task task);
std::optional<Task> ParseTask(std::string_view name);

inline constexpr std::string_view kFluentTag = "F";
inline constexpr std::string_view kDisfluentTag = "D";

using TaskValue = std::variant<std::string, std::vector<std::string>>;

// detection:      text -> "fluent" | "disfluent"
// classification: text -> class name
// extraction:     tokens -> one "F"/"D" tag per token
// correction:     disfluent text -> fluent text
struct TaskExample {
  Task task = Task::kDetection;
  std::string id;
  TaskValue input;
  TaskValue target;
};

// Merge map for detection: every disfluent class becomes "disfluent".
std::string_view DetectionLabel(DisfluencyClass cls);

TaskExample Export(const DisfluencyRecord& record, Task task);

nlohmann::ordered_json TaskExampleToJson(const TaskExample& example);

// Returns a description of the first violated invariant, if any.
std::optional<std::string> CheckTaskExample(const TaskExample& example);

}  // namespace lard

#endif  // LARD_EXPORT_H_
