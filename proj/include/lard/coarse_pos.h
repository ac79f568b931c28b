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

#ifndef LARD_COARSE_POS_H_
#define LARD_COARSE_POS_H_

#include <optional>
#include <string_view>

namespace lard {

enum class CoarsePos { kNoun, kVerb, kAdjective, kOther };

// "noun", "verb", "adjective", "other".
std::string_view PosName(CoarsePos pos);

// Accepts the long names plus the short forms used on the command line and
// in tagged corpora: noun|n, verb|v, adj|adjective|a, other|o (any case).
std::optional<CoarsePos> ParsePos(std::string_view text);

inline bool IsContentPos(CoarsePos pos) { return pos != CoarsePos::kOther; }

}  // namespace lard

#endif  // LARD_COARSE_POS_H_
