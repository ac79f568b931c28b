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

#ifndef LARD_TESTS_TEST_UTIL_H_
#define LARD_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <string>

#include "gtest/gtest.h"
#include "lard/cues.h"
#include "lard/pos.h"
#include "lard/text.h"
#include "lard/wordnet.h"

namespace lard::test {

inline std::filesystem::path DataDir() { return LARD_TEST_DATA_DIR; }
inline std::filesystem::path MiniWordnetDir() { return DataDir() / "mini_wordnet"; }
inline std::filesystem::path FullWordnetDir() { return LARD_TEST_WORDNET_DIR; }

// Loaded once per binary; the fixture is a few hundred bytes.
inline const wordnet::Database& MiniWordnet() {
  static const auto* db = new wordnet::Database(wordnet::Database::Load(MiniWordnetDir()));
  return *db;
}

inline TokenSequence Seq(const std::string& text, const std::string& id = "t") {
  return Tokenize(text, /*pretokenized=*/true, id);
}

// A scratch directory removed when the object goes out of scope.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("lard-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace lard::test

#endif  // LARD_TESTS_TEST_UTIL_H_
