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

#include "lard/annotation.h"

#include <string>
#include <vector>

#include "lard/error.h"

namespace lard {
namespace {

enum class State {
  kBefore,         // outside, no region seen yet
  kReparandum,
  kAfterPlus,      // interregnum or repair may start
  kInterregnum,
  kAfterInterregnum,
  kRepair,
  kAfter,          // region closed
};

bool HasStructural(std::string_view chunk) {
  return chunk == "+" || chunk.find_first_of("[]{}") != std::string_view::npos;
}

}  // namespace

ParsedAnnotation ParseAnnotation(std::string_view text) {
  const std::vector<std::string> chunks = SplitWhitespace(text);
  std::vector<std::string> words;
  State state = State::kBefore;
  size_t rep_begin = 0, rep_end = 0, int_begin = 0, int_end = 0;
  size_t region_end = 0;
  bool has_interregnum = false;

  auto fail = [](size_t at, const std::string& why) -> void {
    throw MalformedAnnotation(at, why);
  };
  // A payload must be free of structural characters once its own markers
  // are peeled off.
  auto push = [&](size_t at, std::string_view word) {
    if (word.empty()) return;
    if (HasStructural(word)) fail(at, "nested or misplaced bracket in '" + std::string(word) + "'");
    words.emplace_back(word);
  };
  auto close = [&](size_t at) {
    if (state == State::kInterregnum) fail(at, "unterminated interregnum");
    region_end = words.size();
    state = State::kAfter;
  };

  for (size_t at = 0; at < chunks.size(); ++at) {
    std::string_view c = chunks[at];
    switch (state) {
      case State::kBefore:
      case State::kAfter: {
        if (c.front() == '[') {
          if (state == State::kAfter) fail(at, "more than one bracketed region");
          c.remove_prefix(1);
          rep_begin = words.size();
          state = State::kReparandum;
          if (!c.empty() && c.back() == ']') fail(at, "missing '+' inside brackets");
          push(at, c);
        } else {
          if (c.find(']') != std::string_view::npos) fail(at, "unbalanced ']'");
          if (c == "+") fail(at, "'+' outside brackets");
          push(at, c);
        }
        break;
      }
      case State::kReparandum: {
        if (c == "+") {
          rep_end = words.size();
          if (rep_end == rep_begin) fail(at, "empty reparandum");
          state = State::kAfterPlus;
        } else if (!c.empty() && c.back() == ']') {
          fail(at, "missing '+' inside brackets");
        } else {
          push(at, c);
        }
        break;
      }
      case State::kAfterPlus:
      case State::kAfterInterregnum: {
        if (c.front() == '{') {
          if (state == State::kAfterInterregnum) fail(at, "second interregnum");
          has_interregnum = true;
          int_begin = words.size();
          c.remove_prefix(1);
          state = State::kInterregnum;
          if (!c.empty() && c.back() == '}') {
            c.remove_suffix(1);
            push(at, c);
            int_end = words.size();
            if (int_end == int_begin) fail(at, "empty interregnum");
            state = State::kAfterInterregnum;
          } else {
            push(at, c);
          }
          break;
        }
        state = State::kRepair;
        [[fallthrough]];
      }
      case State::kRepair: {
        if (c.back() == ']') {
          c.remove_suffix(1);
          push(at, c);
          close(at);
        } else {
          push(at, c);
        }
        break;
      }
      case State::kInterregnum: {
        if (c.back() == '}') {
          c.remove_suffix(1);
          push(at, c);
          int_end = words.size();
          if (int_end == int_begin) fail(at, "empty interregnum");
          state = State::kAfterInterregnum;
        } else {
          push(at, c);
        }
        break;
      }
    }
  }
  if (state != State::kBefore && state != State::kAfter) {
    fail(chunks.size(), "unbalanced brackets");
  }
  if (words.empty()) fail(0, "no tokens");

  ParsedAnnotation out;
  const bool had_region = state == State::kAfter;
  if (had_region) {
    out.reparandum = Span{rep_begin, rep_end};
    if (has_interregnum) out.interregnum = Span{int_begin, int_end};
    const size_t repair_begin = has_interregnum ? int_end : rep_end;
    if (region_end > repair_begin) out.repair = Span{repair_begin, region_end};
  }
  out.disfluent = TokenSequence(std::move(words));
  return out;
}

}  // namespace lard
