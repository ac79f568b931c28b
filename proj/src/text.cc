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

#include "lard/text.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "lard/error.h"

namespace lard {
namespace {

constexpr std::string_view kTerminalPunct = ".,?!;";

// Longest first so "n't" wins over a bare "'t".
constexpr std::array<std::string_view, 7> kClitics = {"n't", "'ll", "'re",
                                                      "'ve", "'m",  "'s",
                                                      "'d"};

bool IsTerminalPunct(char c) {
  return kTerminalPunct.find(c) != std::string_view::npos;
}

bool EndsWithIgnoreCase(std::string_view word, std::string_view suffix) {
  if (word.size() < suffix.size()) return false;
  auto tail = word.substr(word.size() - suffix.size());
  for (size_t i = 0; i < suffix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(tail[i])) != suffix[i]) {
      return false;
    }
  }
  return true;
}

void SplitChunk(std::string_view chunk, std::vector<std::string>* out) {
  // Peel terminal punctuation from the right, unless the chunk is nothing
  // but punctuation ("..." stays whole).
  if (std::all_of(chunk.begin(), chunk.end(), IsTerminalPunct)) {
    out->emplace_back(chunk);
    return;
  }
  std::vector<std::string> trailing;
  while (chunk.size() > 1 && IsTerminalPunct(chunk.back())) {
    trailing.emplace_back(1, chunk.back());
    chunk.remove_suffix(1);
  }
  if (!chunk.empty()) {
    bool split = false;
    for (std::string_view clitic : kClitics) {
      if (chunk.size() > clitic.size() && EndsWithIgnoreCase(chunk, clitic)) {
        out->emplace_back(chunk.substr(0, chunk.size() - clitic.size()));
        out->emplace_back(chunk.substr(chunk.size() - clitic.size()));
        split = true;
        break;
      }
    }
    if (!split) out->emplace_back(chunk);
  }
  out->insert(out->end(), trailing.rbegin(), trailing.rend());
}

}  // namespace

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

TokenSequence::TokenSequence(std::vector<std::string> words,
                             std::string source_id)
    : words_(std::move(words)), source_id_(std::move(source_id)) {
  for (size_t i = 0; i < words_.size(); ++i) {
    const auto& w = words_[i];
    if (w.empty() || std::any_of(w.begin(), w.end(), IsSpace)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "token " + std::to_string(i) + " is empty or has whitespace");
    }
  }
}

TokenSequence TokenSequence::Slice(size_t begin, size_t end) const {
  end = std::min(end, words_.size());
  begin = std::min(begin, end);
  TokenSequence out;
  out.words_.assign(words_.begin() + static_cast<ptrdiff_t>(begin),
                    words_.begin() + static_cast<ptrdiff_t>(end));
  out.source_id_ = source_id_;
  return out;
}

TokenSequence Tokenize(std::string_view raw, bool pretokenized,
                       std::string source_id) {
  std::vector<std::string> chunks = SplitWhitespace(raw);
  if (chunks.empty()) throw Error(ErrorCode::kEmptyInput, "blank input");
  if (pretokenized) return TokenSequence(std::move(chunks), std::move(source_id));

  std::vector<std::string> words;
  for (const auto& chunk : chunks) SplitChunk(chunk, &words);
  return TokenSequence(std::move(words), std::move(source_id));
}

std::string Detokenize(const std::vector<std::string>& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += words[i];
  }
  return out;
}

std::string Detokenize(const TokenSequence& seq) {
  return Detokenize(seq.words());
}

}  // namespace lard
