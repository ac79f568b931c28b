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

#include "lard/error.h"

namespace lard {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidPos: return "InvalidPos";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSequenceTooShort: return "SequenceTooShort";
    case ErrorCode::kNoCandidate: return "NoCandidate";
    case ErrorCode::kIdenticalSequences: return "IdenticalSequences";
    case ErrorCode::kPrefixCollision: return "PrefixCollision";
    case ErrorCode::kInvalidPlan: return "InvalidPlan";
    case ErrorCode::kMalformedAnnotation: return "MalformedAnnotation";
    case ErrorCode::kJsonError: return "JsonError";
    case ErrorCode::kTooFewSequences: return "TooFewSequences";
    case ErrorCode::kBadRatios: return "BadRatios";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace lard
