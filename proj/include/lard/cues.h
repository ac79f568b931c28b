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

#ifndef LARD_CUES_H_
#define LARD_CUES_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lard {

inline constexpr size_t kMaxCueTokens = 5;

// Repair cues for replacement interregnums. Never contains filled pauses.
class CueLexicon {
 public:
  static CueLexicon Default();
  static CueLexicon FromFile(const std::filesystem::path& path);
  // One phrase per line, '#' comments. Throws ParseError on filled pauses,
  // phrases longer than kMaxCueTokens, or an empty list.
  static CueLexicon FromText(std::string_view text, const std::string& origin);

  const std::vector<std::string>& cues() const { return cues_; }

 private:
  std::vector<std::string> cues_;  // whitespace-normalised, file order
};

bool IsFilledPause(std::string_view word);

}  // namespace lard

#endif  // LARD_CUES_H_
