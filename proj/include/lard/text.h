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

#ifndef LARD_TEXT_H_
#define LARD_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lard {

// A single surface token together with its position in the owning sequence.
struct Token {
  std::string_view surface;
  size_t index = 0;
};

// Half-open token interval [begin, end).
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool Contains(size_t i) const { return i >= begin && i < end; }

  friend bool operator==(const Span&, const Span&) = default;
};

// Ordered list of tokens. Every token is non-empty and whitespace-free, and
// indices are implicit (0..size-1), so the no-gap invariant holds by
// construction.
class TokenSequence {
 public:
  TokenSequence() = default;

  // Throws Error(kInvalidArgument) if any word is empty or holds whitespace.
  explicit TokenSequence(std::vector<std::string> words,
                         std::string source_id = "");

  size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  const std::string& operator[](size_t i) const { return words_[i]; }
  Token token(size_t i) const { return Token{words_.at(i), i}; }

  const std::vector<std::string>& words() const { return words_; }
  const std::string& source_id() const { return source_id_; }
  void set_source_id(std::string id) { source_id_ = std::move(id); }

  // Tokens in [begin, end), keeping the source id.
  TokenSequence Slice(size_t begin, size_t end) const;

  // Token-wise equality, ignoring source ids.
  bool SameTokens(const TokenSequence& other) const {
    return words_ == other.words_;
  }

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;

 private:
  std::vector<std::string> words_;
  std::string source_id_;
};

// Splits raw text into tokens. With `pretokenized` only whitespace separates
// tokens; otherwise trailing . , ? ! ; are detached and apostrophe clitics
// ('m 's 're 've 'll 'd n't) are split from their stem.
// Throws Error(kEmptyInput) if `raw` is blank.
TokenSequence Tokenize(std::string_view raw, bool pretokenized,
                       std::string source_id = "");

// Joins tokens with single spaces; punctuation is not re-attached.
std::string Detokenize(const TokenSequence& seq);
std::string Detokenize(const std::vector<std::string>& words);

// Whitespace split shared by the parsers.
std::vector<std::string> SplitWhitespace(std::string_view text);

bool IsSpace(char c);
std::string ToLower(std::string_view text);

}  // namespace lard

#endif  // LARD_TEXT_H_
