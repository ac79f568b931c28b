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

#ifndef LARD_DATASET_H_
#define LARD_DATASET_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lard/corpus.h"
#include "lard/disfluency.h"

namespace lard {

struct GenerationConfig {
  uint64_t seed = 42;
  size_t workers = 1;
  // Partner redraws per restart before the slot is given up.
  size_t max_restart_attempts = 16;
};

struct GenerationResult {
  std::vector<DisfluencyRecord> records;  // class order, then slot order
  std::map<std::string, int64_t> deficits;  // class -> slots left empty
  size_t replacement_resamples = 0;         // overflow sequences consumed
};

// Runs every part through its generator. Each slot k of class c draws from
// its own seed DeriveSeed(seed, c, k), so the output does not depend on the
// worker count. Replacement slots that raise NoCandidate are refilled, in
// slot order, from the overflow pool; restart slots redraw partners.
GenerationResult GenerateDataset(const Partition& partition,
                                 const GenerationConfig& config,
                                 const ReplacementContext& ctx);

// "<class>-<slot>" with the slot zero-padded to six digits.
std::string RecordId(DisfluencyClass cls, size_t slot);

}  // namespace lard

#endif  // LARD_DATASET_H_
