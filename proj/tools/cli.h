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

#ifndef LARD_TOOLS_CLI_H_
#define LARD_TOOLS_CLI_H_

#include <iosfwd>

namespace lard::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Entry point shared by the binary and the tests. Subcommands:
// generate | stats | validate | export | wordnet lookup | tag.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lard::cli

#endif  // LARD_TOOLS_CLI_H_
