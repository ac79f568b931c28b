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

#ifndef LARD_ANNOTATION_H_
#define LARD_ANNOTATION_H_

#include <optional>
#include <string_view>

#include "lard/text.h"

namespace lard {

struct ParsedAnnotation {
  TokenSequence disfluent;
  std::optional<Span> reparandum;
  std::optional<Span> interregnum;
  std::optional<Span> repair;  // nullopt when the repair is empty
};

// Parses "[reparandum + {interregnum} repair]" notation embedded in a
// whitespace-separated sentence. Brackets and braces may be attached to the
// neighbouring token or stand alone ("red ] one"). At most one bracketed
// region is accepted. Throws MalformedAnnotation.
ParsedAnnotation ParseAnnotation(std::string_view text);

}  // namespace lard

#endif  // LARD_ANNOTATION_H_
