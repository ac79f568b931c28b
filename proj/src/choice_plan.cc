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

#include "lard/choice_plan.h"

#include <algorithm>

#include "lard/error.h"

namespace lard {

std::string_view ChoiceKindName(ChoiceKind kind) {
  switch (kind) {
    case ChoiceKind::kIndex: return "index_choice";
    case ChoiceKind::kDegree: return "degree_choice";
    case ChoiceKind::kPos: return "pos_choice";
    case ChoiceKind::kWord: return "word_choice";
    case ChoiceKind::kCue: return "cue_choice";
    case ChoiceKind::kPartner: return "partner_choice";
  }
  return "choice";
}

std::string ChoicePlan::ToString() const {
  std::string out;
  for (const auto& c : choices) {
    if (!out.empty()) out.push_back(' ');
    out += c.name + "=";
    switch (c.kind) {
      case ChoiceKind::kIndex:
      case ChoiceKind::kDegree:
        out += std::to_string(c.number);
        break;
      case ChoiceKind::kPos:
        out += PosName(c.pos);
        break;
      case ChoiceKind::kWord:
      case ChoiceKind::kPartner:
      case ChoiceKind::kCue:
        out += c.text ? "\"" + *c.text + "\"" : "none";
        break;
    }
  }
  return out;
}

ChoiceSource ChoiceSource::Seeded(uint64_t seed) { return ChoiceSource(seed); }

ChoiceSource ChoiceSource::Replay(ChoicePlan plan) {
  ChoiceSource source(0);
  source.replay_ = std::move(plan);
  return source;
}

void ChoiceSource::Reject(std::string_view name, const std::string& why) const {
  throw Error(ErrorCode::kInvalidPlan,
              "choice " + std::to_string(cursor_) + " '" + std::string(name) +
                  "': " + why);
}

const Choice& ChoiceSource::Expect(ChoiceKind kind, std::string_view name) {
  if (cursor_ >= replay_->choices.size()) Reject(name, "plan is exhausted");
  const Choice& c = replay_->choices[cursor_];
  if (c.kind != kind || c.name != name) {
    Reject(name, "plan holds " + std::string(ChoiceKindName(c.kind)) + " '" +
                     c.name + "'");
  }
  ++cursor_;
  return c;
}

void ChoiceSource::CheckExhausted() const {
  if (replay_ && cursor_ != replay_->choices.size()) {
    throw Error(ErrorCode::kInvalidPlan,
                std::to_string(replay_->choices.size() - cursor_) +
                    " unused choices in plan");
  }
}

int64_t ChoiceSource::Index(std::string_view name, int64_t lo, int64_t hi) {
  int64_t value;
  if (replay_) {
    value = Expect(ChoiceKind::kIndex, name).number;
    if (value < lo || value > hi) {
      Reject(name, std::to_string(value) + " outside [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
    }
  } else {
    value = rng_.UniformInt(lo, hi);
  }
  recorded_.choices.push_back(IndexChoice(std::string(name), value));
  return value;
}

size_t ChoiceSource::IndexFrom(std::string_view name,
                               std::span<const size_t> allowed) {
  size_t value;
  if (replay_) {
    int64_t v = Expect(ChoiceKind::kIndex, name).number;
    if (v < 0 || std::find(allowed.begin(), allowed.end(),
                           static_cast<size_t>(v)) == allowed.end()) {
      Reject(name, std::to_string(v) + " is not an allowed index");
    }
    value = static_cast<size_t>(v);
  } else {
    value = allowed[rng_.Index(allowed.size())];
  }
  recorded_.choices.push_back(IndexChoice(std::string(name), static_cast<int64_t>(value)));
  return value;
}

int64_t ChoiceSource::Degree(std::string_view name, int64_t lo, int64_t hi) {
  int64_t value;
  if (replay_) {
    value = Expect(ChoiceKind::kDegree, name).number;
    if (value < lo || value > hi) {
      Reject(name, std::to_string(value) + " outside [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
    }
  } else {
    value = rng_.UniformInt(lo, hi);
  }
  recorded_.choices.push_back(DegreeChoice(std::string(name), value));
  return value;
}

int64_t ChoiceSource::DegreeFrom(std::string_view name,
                                 std::span<const int64_t> allowed) {
  int64_t value;
  if (replay_) {
    value = Expect(ChoiceKind::kDegree, name).number;
    if (std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
      Reject(name, std::to_string(value) + " is not an allowed degree");
    }
  } else {
    value = allowed[rng_.Index(allowed.size())];
  }
  recorded_.choices.push_back(DegreeChoice(std::string(name), value));
  return value;
}

CoarsePos ChoiceSource::Pos(std::string_view name,
                            std::span<const CoarsePos> options) {
  CoarsePos value;
  if (replay_) {
    value = Expect(ChoiceKind::kPos, name).pos;
    if (std::find(options.begin(), options.end(), value) == options.end()) {
      Reject(name, std::string(PosName(value)) + " is not available");
    }
  } else {
    value = options[rng_.Index(options.size())];
  }
  recorded_.choices.push_back(PosChoice(std::string(name), value));
  return value;
}

bool ChoiceSource::Coin(std::string_view name) {
  return Index(name, 0, 1) == 1;
}

std::string ChoiceSource::Word(std::string_view name,
                               std::span<const std::string> options) {
  std::string value;
  if (replay_) {
    const Choice& c = Expect(ChoiceKind::kWord, name);
    if (!c.text || std::find(options.begin(), options.end(), *c.text) == options.end()) {
      Reject(name, "'" + c.text.value_or("") + "' is not among the options");
    }
    value = *c.text;
  } else {
    value = options[rng_.Index(options.size())];
  }
  recorded_.choices.push_back(WordChoice(std::string(name), value));
  return value;
}

std::string ChoiceSource::Note(std::string_view name, std::string value) {
  if (replay_) {
    const Choice& c = Expect(ChoiceKind::kWord, name);
    if (c.text != value) {
      Reject(name, "expected '" + value + "', plan has '" + c.text.value_or("") + "'");
    }
  }
  recorded_.choices.push_back(WordChoice(std::string(name), value));
  return value;
}

std::optional<std::string> ChoiceSource::Cue(std::string_view name, bool use,
                                             std::span<const std::string> cues) {
  std::optional<std::string> value;
  if (replay_) {
    const Choice& c = Expect(ChoiceKind::kCue, name);
    if (c.text.has_value() != use) {
      Reject(name, use ? "a cue is required" : "no cue expected");
    }
    if (c.text && std::find(cues.begin(), cues.end(), *c.text) == cues.end()) {
      Reject(name, "'" + *c.text + "' is not in the cue lexicon");
    }
    value = c.text;
  } else if (use) {
    value = cues[rng_.Index(cues.size())];
  }
  recorded_.choices.push_back(CueChoice(std::string(name), value));
  return value;
}

std::string ChoiceSource::Partner(std::string_view name, std::string source_id) {
  if (replay_) {
    const Choice& c = Expect(ChoiceKind::kPartner, name);
    if (c.text != source_id) {
      Reject(name, "partner '" + c.text.value_or("") + "' does not match '" +
                       source_id + "'");
    }
  }
  recorded_.choices.push_back(PartnerChoice(std::string(name), source_id));
  return source_id;
}

Choice IndexChoice(std::string name, int64_t value) {
  return Choice{ChoiceKind::kIndex, std::move(name), value, CoarsePos::kOther, std::nullopt};
}

Choice DegreeChoice(std::string name, int64_t value) {
  return Choice{ChoiceKind::kDegree, std::move(name), value, CoarsePos::kOther, std::nullopt};
}

Choice PosChoice(std::string name, CoarsePos value) {
  return Choice{ChoiceKind::kPos, std::move(name), 0, value, std::nullopt};
}

Choice WordChoice(std::string name, std::string value) {
  return Choice{ChoiceKind::kWord, std::move(name), 0, CoarsePos::kOther, std::move(value)};
}

Choice CueChoice(std::string name, std::optional<std::string> value) {
  return Choice{ChoiceKind::kCue, std::move(name), 0, CoarsePos::kOther, std::move(value)};
}

Choice PartnerChoice(std::string name, std::string source_id) {
  return Choice{ChoiceKind::kPartner, std::move(name), 0, CoarsePos::kOther, std::move(source_id)};
}

}  // namespace lard
