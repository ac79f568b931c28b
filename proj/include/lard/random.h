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

#ifndef LARD_RANDOM_H_
#define LARD_RANDOM_H_

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace lard {

// SplitMix64 generator with hand-rolled bounded draws. Standard library
// distributions are implementation-defined, so they cannot back the
// byte-identical output contract.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t Next();

  // Uniform integer in the inclusive range [lo, hi]; requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi);

  // Uniform index in [0, n); requires n > 0.
  size_t Index(size_t n) {
    return static_cast<size_t>(UniformInt(0, static_cast<int64_t>(n) - 1));
  }

  bool Coin() { return (Next() >> 63) != 0; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = Index(i);
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  uint64_t state_;
};

// Stable per-stream seed: the same (seed, stream, k) always yields the same
// value, independent of which worker asks for it.
uint64_t DeriveSeed(uint64_t global_seed, std::string_view stream, uint64_t k);

}  // namespace lard

#endif  // LARD_RANDOM_H_
