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

#ifndef LARD_SPLIT_H_
#define LARD_SPLIT_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "lard/disfluency.h"

namespace lard {

struct SplitRatios {
  double train = 0.6;
  double dev = 0.2;
  double test = 0.2;
};

struct SplitSizes {
  size_t train = 0;
  size_t dev = 0;
  size_t test = 0;

  friend bool operator==(const SplitSizes&, const SplitSizes&) = default;
};

// Parses "a,b,c". Throws Error(kBadRatios).
SplitRatios ParseRatios(std::string_view text);

// train = round(n * train), dev = round(n * dev), test = the remainder.
// Throws Error(kBadRatios) unless all ratios are positive and sum to 1.
SplitSizes ComputeSplitSizes(size_t n, const SplitRatios& ratios);

// Record indices per split, each ascending.
struct DatasetSplit {
  std::vector<size_t> train;
  std::vector<size_t> dev;
  std::vector<size_t> test;
};

// Stratified by class. Each class gets the floor or ceiling of its
// proportional share of every split, so per-class counts are within one
// record of n_class * |split| / n. Members are shuffled under `seed` first.
DatasetSplit SplitDataset(const std::vector<DisfluencyRecord>& records,
                          const SplitRatios& ratios, uint64_t seed);

}  // namespace lard

#endif  // LARD_SPLIT_H_
