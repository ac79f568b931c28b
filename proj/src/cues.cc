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

#include "lard/cues.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "lard/error.h"
#include "lard/resources.h"
#include "lard/text.h"

namespace lard {

bool IsFilledPause(std::string_view word) {
  static constexpr std::array<std::string_view, 6> kPauses = {
      "um", "uh", "umm", "uhm", "uh-huh", "er"};
  std::string w = ToLower(word);
  while (!w.empty() && (w.back() == ',' || w.back() == '.')) w.pop_back();
  return std::find(kPauses.begin(), kPauses.end(), w) != kPauses.end();
}

CueLexicon CueLexicon::Default() {
  return FromText(resources::kDefaultCues, "<packaged cues>");
}

CueLexicon CueLexicon::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMissingFile, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return FromText(ss.str(), path.string());
}

CueLexicon CueLexicon::FromText(std::string_view text, const std::string& origin) {
  CueLexicon out;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto words = SplitWhitespace(line);
    if (words.empty()) continue;
    if (words.size() > kMaxCueTokens) {
      throw ParseError(origin, line_no, "cue longer than 5 tokens");
    }
    for (const auto& w : words) {
      if (IsFilledPause(w)) {
        throw ParseError(origin, line_no, "filled pause '" + w + "' is not a repair cue");
      }
    }
    std::string cue = Detokenize(words);
    if (std::find(out.cues_.begin(), out.cues_.end(), cue) == out.cues_.end()) {
      out.cues_.push_back(std::move(cue));
    }
  }
  if (out.cues_.empty()) throw ParseError(origin, line_no, "no cues");
  return out;
}

}  // namespace lard
