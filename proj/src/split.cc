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

#include "lard/split.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "lard/error.h"
#include "lard/random.h"
#include "lard/text.h"

namespace lard {

SplitRatios ParseRatios(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  auto parts = SplitWhitespace(s);
  if (parts.size() != 3) {
    throw Error(ErrorCode::kBadRatios, "expected three comma-separated ratios");
  }
  double v[3];
  for (size_t i = 0; i < 3; ++i) {
    try {
      size_t used = 0;
      v[i] = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadRatios, "not a number: '" + parts[i] + "'");
    }
  }
  return SplitRatios{v[0], v[1], v[2]};
}

SplitSizes ComputeSplitSizes(size_t n, const SplitRatios& r) {
  if (!(r.train > 0 && r.dev > 0 && r.test > 0)) {
    throw Error(ErrorCode::kBadRatios, "ratios must be positive");
  }
  if (std::abs(r.train + r.dev + r.test - 1.0) > 1e-6) {
    throw Error(ErrorCode::kBadRatios, "ratios must sum to 1");
  }
  const double total = static_cast<double>(n);
  SplitSizes s;
  s.train = static_cast<size_t>(std::llround(total * r.train));
  s.dev = static_cast<size_t>(std::llround(total * r.dev));
  // Positive test share keeps train + dev <= n; clamp guards float slop.
  s.train = std::min(s.train, n);
  s.dev = std::min(s.dev, n - s.train);
  s.test = n - s.train - s.dev;
  return s;
}

namespace {

using Quota = std::array<size_t, 3>;  // train, dev, test

// Fills `extra` (0/1 per cell) so that rows and columns reach their targets.
// Only cells with a fractional share may take a unit. Tried in class order,
// shares of one half or more first.
bool Place(size_t cell, const std::vector<Quota>& rem, size_t n,
           std::vector<size_t>& row_need, Quota& col_need, std::vector<Quota>& extra) {
  const size_t rows = rem.size();
  if (cell == rows * 3) {
    return std::all_of(row_need.begin(), row_need.end(), [](size_t v) { return v == 0; }) &&
           col_need == Quota{0, 0, 0};
  }
  const size_t r = cell / 3, c = cell % 3;
  // Whatever the row still needs must fit in its remaining cells.
  if (c == 0 && row_need[r] > 3) return false;
  const bool can_take = rem[r][c] != 0 && row_need[r] > 0 && col_need[c] > 0;
  const bool prefer = 2 * rem[r][c] >= n;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const bool take = (attempt == 0) == prefer;
    if (take && !can_take) continue;
    if (take) {
      --row_need[r];
      --col_need[c];
      extra[r][c] = 1;
    }
    if ((c < 2 || row_need[r] == 0) && Place(cell + 1, rem, n, row_need, col_need, extra)) {
      return true;
    }
    if (take) {
      ++row_need[r];
      ++col_need[c];
      extra[r][c] = 0;
    }
  }
  return false;
}

// Per-class part sizes. Each is the floor or the ceiling of
// n_c * |part| / n, rows add up to the class sizes and columns to the part
// sizes. Such a rounding always exists for a matrix with integer margins.
std::vector<Quota> Apportion(const std::vector<size_t>& classes, const SplitSizes& sizes) {
  size_t n = 0;
  for (size_t k : classes) n += k;
  const Quota parts = {sizes.train, sizes.dev, sizes.test};
  std::vector<Quota> floor(classes.size()), rem(classes.size());
  std::vector<size_t> row_need(classes.size());
  Quota col_need = parts;
  for (size_t r = 0; r < classes.size(); ++r) {
    size_t placed = 0;
    for (size_t c = 0; c < 3; ++c) {
      floor[r][c] = n == 0 ? 0 : classes[r] * parts[c] / n;
      rem[r][c] = n == 0 ? 0 : classes[r] * parts[c] % n;
      placed += floor[r][c];
      col_need[c] -= floor[r][c];
    }
    row_need[r] = classes[r] - placed;
  }
  std::vector<Quota> extra(classes.size(), Quota{0, 0, 0});
  if (!Place(0, rem, n, row_need, col_need, extra)) {
    throw Error(ErrorCode::kInvalidArgument, "no stratified rounding found");
  }
  for (size_t r = 0; r < classes.size(); ++r) {
    for (size_t c = 0; c < 3; ++c) floor[r][c] += extra[r][c];
  }
  return floor;
}

}  // namespace

DatasetSplit SplitDataset(const std::vector<DisfluencyRecord>& records,
                          const SplitRatios& ratios, uint64_t seed) {
  const SplitSizes sizes = ComputeSplitSizes(records.size(), ratios);
  std::vector<std::vector<size_t>> by_class(std::size(kAllClasses));
  for (size_t i = 0; i < records.size(); ++i) {
    by_class[static_cast<size_t>(records[i].cls)].push_back(i);
  }
  std::vector<size_t> class_sizes;
  for (const auto& members : by_class) class_sizes.push_back(members.size());
  const std::vector<Quota> quota = Apportion(class_sizes, sizes);

  DatasetSplit out;
  std::vector<size_t>* parts[] = {&out.train, &out.dev, &out.test};
  for (size_t c = 0; c < by_class.size(); ++c) {
    auto& members = by_class[c];
    Rng rng(DeriveSeed(seed, std::string("split-") + std::string(ClassName(kAllClasses[c])), 0));
    rng.Shuffle(members);
    size_t at = 0;
    for (size_t p = 0; p < 3; ++p) {
      for (size_t k = 0; k < quota[c][p]; ++k) parts[p]->push_back(members[at++]);
    }
  }
  for (auto* v : parts) std::sort(v->begin(), v->end());
  return out;
}

}  // namespace lard
