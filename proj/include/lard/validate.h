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

#ifndef LARD_VALIDATE_H_
#define LARD_VALIDATE_H_

#include <string>
#include <vector>

#include "lard/disfluency.h"

namespace lard {

// Checks span layout, tag consistency, reconstruction (removing disfluent
// tokens yields the fluent sequence), class/subclass agreement and the
// annotation round trip. `annotated` is the stored bracket string. Returns
// one message per violation; empty means the record is valid.
std::vector<std::string> ValidateRecord(const DisfluencyRecord& record,
                                        const std::string& annotated);

// Tokens of `disfluent` whose tag is 0.
std::vector<std::string> DeleteDisfluent(const DisfluencyRecord& record);

}  // namespace lard

#endif  // LARD_VALIDATE_H_
