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

#ifndef LARD_ERROR_H_
#define LARD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lard {

// Every failure raised by the library carries one of these codes so callers
// (and the CLI) can branch on the kind without parsing messages.
enum class ErrorCode {
  kEmptyInput,
  kInvalidPos,
  kMissingFile,
  kParseError,
  kSequenceTooShort,
  kNoCandidate,
  kIdenticalSequences,
  kPrefixCollision,
  kInvalidPlan,
  kMalformedAnnotation,
  kJsonError,
  kTooFewSequences,
  kBadRatios,
  kInvalidArgument,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised while reading line-oriented resources (WordNet files, stoplists,
// cue lists, tagged corpora).
class ParseError : public Error {
 public:
  ParseError(std::string file, size_t line, const std::string& reason)
      : Error(ErrorCode::kParseError,
              file + ":" + std::to_string(line) + ": " + reason),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  size_t line() const { return line_; }

 private:
  std::string file_;
  size_t line_;
};

class MalformedAnnotation : public Error {
 public:
  MalformedAnnotation(size_t position, const std::string& reason)
      : Error(ErrorCode::kMalformedAnnotation,
              "at token " + std::to_string(position) + ": " + reason),
        position_(position) {}

  // Index of the offending whitespace-separated chunk.
  size_t position() const { return position_; }

 private:
  size_t position_;
};

class JsonError : public Error {
 public:
  JsonError(std::string file, std::string path, const std::string& reason)
      : Error(ErrorCode::kJsonError,
              file + " at " + (path.empty() ? "document root" : path) + ": " + reason),
        file_(std::move(file)),
        path_(std::move(path)) {}

  const std::string& file() const { return file_; }
  const std::string& path() const { return path_; }

 private:
  std::string file_;
  std::string path_;
};

}  // namespace lard

#endif  // LARD_ERROR_H_
