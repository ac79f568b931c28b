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

#ifndef LARD_CHOICE_PLAN_H_
#define LARD_CHOICE_PLAN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lard/coarse_pos.h"
#include "lard/random.h"

namespace lard {

enum class ChoiceKind { kIndex, kDegree, kPos, kWord, kCue, kPartner };

std::string_view ChoiceKindName(ChoiceKind kind);

struct Choice {
  ChoiceKind kind = ChoiceKind::kIndex;
  std::string name;
  int64_t number = 0;                 // kIndex, kDegree
  CoarsePos pos = CoarsePos::kOther;  // kPos
  std::optional<std::string> text;    // kWord, kPartner; kCue (nullopt = none)

  friend bool operator==(const Choice&, const Choice&) = default;
};

// Ordered record of every decision a generator made.
struct ChoicePlan {
  std::vector<Choice> choices;

  // Compact human-readable form, e.g. `repair_index=3 substitute="same"`.
  std::string ToString() const;

  friend bool operator==(const ChoicePlan&, const ChoicePlan&) = default;
};

// Supplies decisions to the generators. A seeded source draws from an Rng; a
// replay source reads them back from a plan and checks that each one is
// legal for the call site. Both record what they hand out in `recorded()`.
class ChoiceSource {
 public:
  static ChoiceSource Seeded(uint64_t seed);
  static ChoiceSource Replay(ChoicePlan plan);

  // Uniform over [lo, hi].
  int64_t Index(std::string_view name, int64_t lo, int64_t hi);
  // Uniform over `allowed`, which must be non-empty.
  size_t IndexFrom(std::string_view name, std::span<const size_t> allowed);
  int64_t Degree(std::string_view name, int64_t lo, int64_t hi);
  // Uniform over `allowed` (non-empty).
  int64_t DegreeFrom(std::string_view name, std::span<const int64_t> allowed);
  CoarsePos Pos(std::string_view name, std::span<const CoarsePos> options);
  bool Coin(std::string_view name);
  std::string Word(std::string_view name, std::span<const std::string> options);
  // A value fixed by the inputs; recorded for auditing and checked on replay.
  std::string Note(std::string_view name, std::string value);
  // nullopt without drawing when `use` is false.
  std::optional<std::string> Cue(std::string_view name, bool use,
                                 std::span<const std::string> cues);
  std::string Partner(std::string_view name, std::string source_id);

  const ChoicePlan& recorded() const { return recorded_; }
  bool replaying() const { return replay_.has_value(); }
  // Throws Error(kInvalidPlan) if a replayed plan has unused choices.
  void CheckExhausted() const;

 private:
  explicit ChoiceSource(uint64_t seed) : rng_(seed) {}

  const Choice& Expect(ChoiceKind kind, std::string_view name);
  [[noreturn]] void Reject(std::string_view name, const std::string& why) const;

  Rng rng_;
  std::optional<ChoicePlan> replay_;
  size_t cursor_ = 0;
  ChoicePlan recorded_;
};

// Builders for hand-written plans.
Choice IndexChoice(std::string name, int64_t value);
Choice DegreeChoice(std::string name, int64_t value);
Choice PosChoice(std::string name, CoarsePos value);
Choice WordChoice(std::string name, std::string value);
Choice CueChoice(std::string name, std::optional<std::string> value);
Choice PartnerChoice(std::string name, std::string source_id);

}  // namespace lard

#endif  // LARD_CHOICE_PLAN_H_
