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

#include "lard/dataset.h"

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "lard/error.h"
#include "lard/random.h"

namespace lard {
namespace {

constexpr std::string_view kResampleStream = "replacement-resample";

bool IsRetryable(ErrorCode code) {
  return code == ErrorCode::kIdenticalSequences ||
         code == ErrorCode::kPrefixCollision ||
         code == ErrorCode::kSequenceTooShort;
}

std::optional<DisfluencyRecord> TryReplacement(const TokenSequence& seq,
                                               uint64_t seed,
                                               const ReplacementContext& ctx) {
  ChoiceSource source = ChoiceSource::Seeded(seed);
  try {
    return GenerateReplacement(seq, ctx, source);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoCandidate) return std::nullopt;
    throw;
  }
}

std::optional<DisfluencyRecord> TryRestart(const std::vector<TokenSequence>& part,
                                           size_t k, uint64_t seed,
                                           const GenerationConfig& config) {
  const size_t n = part.size();
  if (n < 2 || part[k].size() < 2) return std::nullopt;
  for (size_t attempt = 0; attempt < config.max_restart_attempts; ++attempt) {
    size_t partner = (k + 1) % n;
    uint64_t attempt_seed = seed;
    if (attempt > 0) {
      Rng rng(DeriveSeed(seed, "partner", attempt));
      partner = rng.Index(n - 1);
      if (partner >= k) ++partner;
      attempt_seed = DeriveSeed(seed, "attempt", attempt);
    }
    ChoiceSource source = ChoiceSource::Seeded(attempt_seed);
    try {
      return MakeRestart(part[k], part[partner], source);
    } catch (const Error& e) {
      if (!IsRetryable(e.code())) throw;
    }
  }
  return std::nullopt;
}

struct Job {
  DisfluencyClass cls;
  size_t slot;
};

}  // namespace

std::string RecordId(DisfluencyClass cls, size_t slot) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%06zu", slot);
  return std::string(ClassName(cls)) + "-" + buf;
}

GenerationResult GenerateDataset(const Partition& partition,
                                 const GenerationConfig& config,
                                 const ReplacementContext& ctx) {
  std::vector<Job> jobs;
  for (DisfluencyClass cls : partition.classes) {
    for (size_t k = 0; k < partition.part(cls).size(); ++k) jobs.push_back({cls, k});
  }
  std::vector<std::optional<DisfluencyRecord>> slots(jobs.size());

  auto run = [&](const Job& job) -> std::optional<DisfluencyRecord> {
    const auto& seq = partition.part(job.cls)[job.slot];
    const uint64_t seed = DeriveSeed(config.seed, ClassName(job.cls), job.slot);
    std::optional<DisfluencyRecord> r;
    switch (job.cls) {
      case DisfluencyClass::kFluent:
        r = MakeFluent(seq);
        break;
      case DisfluencyClass::kRepetition: {
        ChoiceSource source = ChoiceSource::Seeded(seed);
        r = GenerateRepetition(seq, source);
        break;
      }
      case DisfluencyClass::kReplacement:
        r = TryReplacement(seq, seed, ctx);
        break;
      case DisfluencyClass::kRestart:
        r = TryRestart(partition.part(job.cls), job.slot, seed, config);
        break;
    }
    if (r) {
      r->id = RecordId(job.cls, job.slot);
      r->seed = seed;
    }
    return r;
  };

  const size_t workers = std::max<size_t>(1, std::min(config.workers, jobs.size()));
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
      try {
        slots[i] = run(jobs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(jobs.size());
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Sequential refill keeps the overflow consumption order independent of
  // scheduling.
  GenerationResult result;
  size_t overflow_at = 0;
  for (size_t i = 0; i < jobs.size(); ++i) {
    if (slots[i] || jobs[i].cls != DisfluencyClass::kReplacement) continue;
    while (overflow_at < partition.overflow.size()) {
      const size_t o = overflow_at++;
      ++result.replacement_resamples;
      const uint64_t seed = DeriveSeed(config.seed, kResampleStream, o);
      if (auto r = TryReplacement(partition.overflow[o], seed, ctx)) {
        r->id = RecordId(jobs[i].cls, jobs[i].slot);
        r->seed = seed;
        slots[i] = std::move(r);
        break;
      }
    }
  }

  for (DisfluencyClass cls : partition.classes) {
    result.deficits[std::string(ClassName(cls))] = 0;
  }
  for (size_t i = 0; i < jobs.size(); ++i) {
    if (slots[i]) {
      result.records.push_back(std::move(*slots[i]));
    } else {
      ++result.deficits[std::string(ClassName(jobs[i].cls))];
    }
  }
  return result;
}

}  // namespace lard
