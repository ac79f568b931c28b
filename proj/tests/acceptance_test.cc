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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Needs the WordNet 3.0 dict directory
// (LARD_WORDNET_DIR at configure time, or the first argument).

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "acceptance_corpus.h"
#include "cli.h"
#include "json.hpp"
#include "lard/annotation.h"
#include "lard/checksum.h"
#include "lard/disfluency.h"
#include "lard/export.h"
#include "lard/record_io.h"
#include "lard/split.h"
#include "lard/validate.h"
#include "lard/wordnet.h"

namespace lard::acceptance {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a failed check; keeps the first few messages.
  void Check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass || detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    pass = false;
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fixed(double v, int digits = 2) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(digits);
  ss << v;
  return ss.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lard");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Context {
  fs::path wordnet;
  fs::path work;
  fs::path oracle;
  std::unique_ptr<wordnet::Database> db;
  std::vector<std::string> gloss;  // the 10K+ utterance corpus, one per line
  fs::path gloss_path;
  fs::path dataset_dir;            // criterion 2 output, reused by 3, 4 and 8
  std::vector<StoredRecord> dataset;
};

std::vector<StoredRecord> ReadSplits(const fs::path& dir) {
  std::vector<StoredRecord> out;
  for (const char* name : {"train.jsonl", "dev.jsonl", "test.jsonl"}) {
    auto part = ReadRecords(dir / name);
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

// 1. The worked examples, rebuilt from explicit choice plans.
Outcome PaperExamples(Context& ctx) {
  Outcome o;
  const auto start = Clock::now();
  LexiconTagger tagger(*ctx.db, Stoplist::Default());
  const CueLexicon cues = CueLexicon::Default();
  const ReplacementContext rctx{tagger, *ctx.db, cues, kDefaultReplacementDegreeCap};
  auto seq = [](const char* text, const char* id = "ex") { return Tokenize(text, true, id); };
  auto replay = [](std::vector<Choice> choices) {
    return ChoiceSource::Replay(ChoicePlan{std::move(choices)});
  };
  int strings = 0;
  auto expect = [&](const std::string& got, const std::string& want) {
    ++strings;
    o.Check(got == want, "got '" + got + "' want '" + want + "'");
  };

  auto p1 = replay({IndexChoice("start", 3)});
  expect(AnnotateExample(MakeRepetition(seq("I need to find a flight"), 1, p1)),
         "I need to [find + find] a flight");
  auto p2 = replay({IndexChoice("start", 0)});
  expect(AnnotateExample(MakeRepetition(seq("I need to find a flight"), 2, p2)),
         "[I need + I need] to find a flight");
  // Replay checks that the index is a tagger candidate and that the word is
  // in the lexical substitute pool, so these also exercise the real database.
  auto p3 = replay({IndexChoice("repair_index", 3), WordChoice("repair_lemma", "different"),
                    WordChoice("substitute", "same"), DegreeChoice("degree", 0),
                    CueChoice("cue", "sorry")});
  expect(AnnotateExample(MakeReplacement(seq("Find me a different one"),
                                         CoarsePos::kAdjective, true, rctx, p3)),
         "Find me a [same + {sorry} different] one");
  auto p4 = replay({IndexChoice("repair_index", 5), WordChoice("repair_lemma", "salon"),
                    WordChoice("substitute", "beauty shop"), DegreeChoice("degree", 1),
                    CueChoice("cue", "I mean")});
  expect(AnnotateExample(MakeReplacement(seq("I 'm looking for a salon in San Mateo"),
                                         CoarsePos::kNoun, true, rctx, p4)),
         "I 'm looking for [a beauty shop + {I mean} a salon] in San Mateo");
  auto p5 = replay({PartnerChoice("partner", "s2"), IndexChoice("break", 4)});
  expect(AnnotateExample(MakeRestart(seq("Do you want to check out on March 11th ?", "s1"),
                                     seq("When is the check-out date ?", "s2"), p5)),
         "[Do you want to + ] When is the check-out date ?");

  DisfluencyRecord fig;
  fig.cls = DisfluencyClass::kReplacement;
  fig.disfluent = seq("Can we meet on Tuesday I mean on Friday ?");
  fig.reparandum = Span{3, 5};
  fig.interregnum = Span{5, 7};
  fig.repair = Span{7, 9};
  expect(AnnotateExample(fig), "Can we meet [on Tuesday + {I mean} on Friday] ?");
  auto p6 = replay({IndexChoice("start", 2)});
  expect(AnnotateExample(MakeRepetition(seq("Let's meet today ."), 1, p6)),
         "Let's meet [today + today] .");
  expect(AnnotateExample(MakeFluent(seq("Hello there"))), "Hello there");

  // The other two table rows, read back through the codec.
  const ParsedAnnotation blue = ParseAnnotation("I want [the blue + {no} the red ] one .");
  o.Check(blue.reparandum == Span{2, 4} && blue.interregnum == Span{4, 5} &&
              blue.repair == Span{5, 7},
          "table replacement spans");
  const ParsedAnnotation why = ParseAnnotation("[Why don't you + ] I will do it later .");
  DisfluencyRecord why_record;
  why_record.disfluent = why.disfluent;
  why_record.reparandum = why.reparandum;
  expect(AnnotateExample(why_record), "[Why don't you + ] I will do it later .");

  const double elapsed = Seconds(start);
  o.Check(elapsed < 1.0, "took " + Fixed(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(strings) + " strings byte-exact in " + Fixed(elapsed, 3) + " s";
  return o;
}

// 2. Every record of a 10,000-record dataset passes `validate`.
Outcome Reconstruction(Context& ctx) {
  Outcome o;
  const auto start = Clock::now();
  ctx.dataset_dir = ctx.work / "dataset";
  CliRun gen = Cli({"generate", "--input", ctx.gloss_path.string(), "--format", "text",
                    "--pretokenized=false", "--wordnet", ctx.wordnet.string(), "--seed", "42",
                    "--per-class", "2500", "--workers", "4", "--out",
                    ctx.dataset_dir.string()});
  o.Check(gen.code == 0, "generate exited " + std::to_string(gen.code) + ": " + gen.err);
  if (!o.pass) return o;
  size_t records = 0;
  for (const char* name : {"train.jsonl", "dev.jsonl", "test.jsonl"}) {
    CliRun v = Cli({"validate", "--input", (ctx.dataset_dir / name).string()});
    o.Check(v.code == 0, std::string(name) + ": " + v.out.substr(0, 300));
    const size_t n = std::strtoull(v.out.c_str() + v.out.rfind('\n', v.out.size() - 2) + 1,
                                   nullptr, 10);
    records += n;
  }
  const double elapsed = Seconds(start);
  ctx.dataset = ReadSplits(ctx.dataset_dir);
  o.Check(records == ctx.dataset.size(), "validate saw " + std::to_string(records) + " of " +
                                             std::to_string(ctx.dataset.size()) + " records");
  o.Check(ctx.dataset.size() >= 10000 * 0.95, "only " + std::to_string(ctx.dataset.size()) +
                                                   " records");
  // Re-check the reconstruction directly rather than trusting `validate`.
  size_t reconstructed = 0;
  for (const auto& s : ctx.dataset) {
    reconstructed += DeleteDisfluent(s.record) == s.record.fluent.words();
  }
  o.Check(reconstructed == ctx.dataset.size(),
          std::to_string(ctx.dataset.size() - reconstructed) + " records do not reconstruct");
  o.Check(elapsed < 30.0, "took " + Fixed(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(ctx.dataset.size()) + "/" + std::to_string(ctx.dataset.size()) +
               " records valid in " + Fixed(elapsed) + " s";
  }
  return o;
}

// 3. Class and subclass balance of the criterion 2 dataset.
Outcome Balance(Context& ctx) {
  Outcome o;
  std::map<std::string, double> cls, sub;
  for (const auto& s : ctx.dataset) {
    ++cls[std::string(ClassName(s.record.cls))];
    ++sub[s.record.subclass];
  }
  const double fl = cls["fluent"], rep = cls["repetition"], rs = cls["restart"],
               repl = cls["replacement"];
  o.Check(std::abs(fl - rep) <= 1 && std::abs(fl - rs) <= 1 && std::abs(rep - rs) <= 1,
          "fluent/repetition/restart = " + Fixed(fl, 0) + "/" + Fixed(rep, 0) + "/" +
              Fixed(rs, 0));
  const double deficit = rep > 0 ? (rep - repl) / rep : 1.0;
  o.Check(repl <= rep && deficit < 0.05, "replacement deficit " + Fixed(100 * deficit) + "%");
  double worst_sigma = 0;
  for (int d = 1; d <= 3; ++d) {
    const double n = sub["repetition_" + std::to_string(d)];
    const double sigma = std::sqrt(rep * (1.0 / 3) * (2.0 / 3));
    const double z = std::abs(n - rep / 3) / sigma;
    worst_sigma = std::max(worst_sigma, z);
    o.Check(z <= 3, "repetition_" + std::to_string(d) + " = " + Fixed(n, 0) + " (" +
                        Fixed(z) + " sigma)");
  }
  for (const char* pos : {"noun", "verb", "adjective"}) {
    const double with = sub[std::string(pos) + "_replacement_with_cue"];
    const double without = sub[std::string(pos) + "_replacement_without_cue"];
    const double n = with + without;
    if (n == 0) {
      o.Check(false, std::string("no ") + pos + " replacements");
      continue;
    }
    const double z = std::abs(with - n / 2) / std::sqrt(n / 4);
    worst_sigma = std::max(worst_sigma, z);
    o.Check(z <= 3, std::string(pos) + " cue split " + Fixed(with, 0) + "/" +
                        Fixed(without, 0) + " (" + Fixed(z) + " sigma)");
  }
  if (o.pass) {
    o.detail = "classes " + Fixed(fl, 0) + "/" + Fixed(rep, 0) + "/" + Fixed(repl, 0) + "/" +
               Fixed(rs, 0) + ", deficit " + Fixed(100 * deficit) + "%, worst subclass " +
               Fixed(worst_sigma) + " sigma";
  }
  return o;
}

// 4. Split sizes by the rounding rule.
Outcome SplitArithmetic(Context& ctx) {
  Outcome o;
  const SplitSizes ref = ComputeSplitSizes(95992, SplitRatios{});
  o.Check(ref == SplitSizes{57595, 19198, 19199},
          "95992 -> " + std::to_string(ref.train) + "/" + std::to_string(ref.dev) + "/" +
              std::to_string(ref.test));
  // Integer restatement: round-half-up of 3n/5 and n/5, remainder to test.
  size_t checked = 0;
  for (size_t n = 0; n <= 1000000; n += (n < 20000 ? 1 : 97), ++checked) {
    const SplitSizes s = ComputeSplitSizes(n, SplitRatios{});
    const size_t train = (6 * n + 5) / 10, dev = (2 * n + 5) / 10;
    if (s.train != train || s.dev != dev || s.train + s.dev + s.test != n) {
      o.Check(false, "n=" + std::to_string(n));
      break;
    }
  }
  std::map<std::string, size_t> sizes;
  for (const char* name : {"train.jsonl", "dev.jsonl", "test.jsonl"}) {
    sizes[name] = ReadRecords(ctx.dataset_dir / name).size();
  }
  const SplitSizes want = ComputeSplitSizes(ctx.dataset.size(), SplitRatios{});
  o.Check(sizes["train.jsonl"] == want.train && sizes["dev.jsonl"] == want.dev &&
              sizes["test.jsonl"] == want.test,
          "generated split sizes disagree with the rule");
  if (o.pass) {
    o.detail = "95992 -> 57595/19198/19199; rule holds for " + std::to_string(checked) +
               " sizes and the generated dataset";
  }
  return o;
}

// 5. Lexical facts, first from the raw files by an independent script.
Outcome LexicalOracle(Context& ctx) {
  Outcome o;
  const std::string cmd = "python3 '" + ctx.oracle.string() + "' '" + ctx.wordnet.string() +
                          "' > '" + (ctx.work / "oracle.txt").string() + "' 2>&1";
  const int rc = std::system(cmd.c_str());
  o.Check(rc == 0, "oracle script failed (" + std::to_string(rc) + ")");
  if (!o.pass) return o;
  const auto different = ctx.db->Substitutes("different", CoarsePos::kAdjective);
  const auto salon = ctx.db->Substitutes("salon", CoarsePos::kNoun);
  o.Check(different.antonyms.contains("same"), "'same' missing from antonyms of 'different'");
  o.Check(salon.synonyms.contains("beauty shop"), "'beauty shop' missing from synonyms of 'salon'");
  if (o.pass) o.detail = "oracle script and module agree on same/different and salon/beauty shop";
  return o;
}

std::map<std::string, std::string> HashOutputs(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    out[entry.path().filename().string()] = Sha256File(entry.path());
  }
  return out;
}

// 6. Byte-identical output across reruns and worker counts.
Outcome Determinism(Context& ctx) {
  Outcome o;
  const fs::path corpus = ctx.work / "big.txt";
  WriteCorpus(corpus, ctx.gloss, 100000);
  const fs::path out = ctx.work / "determinism";
  auto run = [&](const std::string& workers, std::map<std::string, std::string>* hashes) {
    const auto start = Clock::now();
    CliRun r = Cli({"generate", "--input", corpus.string(), "--format", "text",
                    "--pretokenized=false", "--wordnet", ctx.wordnet.string(), "--seed", "42",
                    "--workers", workers, "--out", out.string()});
    const double elapsed = Seconds(start);
    o.Check(r.code == 0, "generate failed: " + r.err);
    o.Check(elapsed < 120, "workers=" + workers + " took " + Fixed(elapsed) + " s");
    *hashes = HashOutputs(out);
    return elapsed;
  };
  std::map<std::string, std::string> a, b, c;
  const double ta = run("1", &a);
  run("1", &b);
  const double tc = run("8", &c);
  o.Check(a.size() == 5, std::to_string(a.size()) + " output files");
  o.Check(a == b, "rerun changed the output");
  o.Check(a == c, "--workers 8 changed the output");
  for (const auto& [name, hash] : a) {
    if (c.count(name) && c[name] != hash) o.Check(false, name + " differs");
  }
  if (o.pass) {
    o.detail = std::to_string(a.size()) + " files identical over 3 runs (100000 utterances; " +
               Fixed(ta) + " s with 1 worker, " + Fixed(tc) + " s with 8)";
  }
  return o;
}

// 7. No restart is a disguised repetition.
Outcome RestartGuard(Context& ctx) {
  Outcome o;
  const fs::path out = ctx.work / "restarts";
  CliRun r = Cli({"generate", "--input", ctx.gloss_path.string(), "--format", "text",
                  "--pretokenized=false", "--wordnet", ctx.wordnet.string(), "--seed", "42",
                  "--classes", "restart", "--per-class", "10000", "--workers", "4", "--out",
                  out.string()});
  o.Check(r.code == 0, "generate failed: " + r.err);
  if (!o.pass) return o;
  // Source ids are "<file stem>:<line>", so the first sequence can be
  // re-read from the corpus itself.
  const std::string stem = ctx.gloss_path.stem().string() + ":";
  size_t restarts = 0, collisions = 0, identical = 0, unrecovered = 0;
  for (const auto& s : ReadSplits(out)) {
    const DisfluencyRecord& rec = s.record;
    if (rec.cls != DisfluencyClass::kRestart) continue;
    ++restarts;
    const size_t b = rec.reparandum->size();
    const auto& cont = rec.fluent.words();
    if (cont.size() >= b && std::equal(cont.begin(), cont.begin() + static_cast<long>(b),
                                       rec.disfluent.words().begin())) {
      ++collisions;
    }
    const size_t line = std::stoul(rec.source_ids.at(0).substr(stem.size()));
    const TokenSequence first = Tokenize(ctx.gloss.at(line - 1), false);
    if (!std::equal(first.words().begin(), first.words().begin() + static_cast<long>(b),
                    rec.disfluent.words().begin())) {
      ++unrecovered;
    }
    identical += first.SameTokens(rec.fluent);
  }
  o.Check(restarts >= 10000, std::to_string(restarts) + " restarts generated");
  o.Check(collisions == 0, std::to_string(collisions) + " prefix collisions");
  o.Check(identical == 0, std::to_string(identical) + " with seq1 = seq2");
  o.Check(unrecovered == 0, std::to_string(unrecovered) + " reparanda not from seq1");
  if (o.pass) {
    o.detail = std::to_string(restarts) + " restarts, 0 prefix collisions, 0 identical pairs";
  }
  return o;
}

// 8. Exported rows keep their task invariants.
Outcome ExportConsistency(Context& ctx) {
  Outcome o;
  std::unordered_map<std::string, const DisfluencyRecord*> by_id;
  for (const auto& s : ctx.dataset) by_id[s.record.id] = &s.record;
  size_t rows = 0;
  std::map<std::string, std::string> extraction_corrected;  // id -> detokenized F tokens
  std::map<std::string, std::string> correction_target;
  for (const char* task : {"detection", "classification", "extraction", "correction"}) {
    for (const char* split : {"train", "dev", "test"}) {
      const fs::path out = ctx.work / (std::string(task) + "-" + split + ".jsonl");
      CliRun r = Cli({"export", "--input", (ctx.dataset_dir / (std::string(split) + ".jsonl")).string(),
                      "--task", task, "--out", out.string()});
      o.Check(r.code == 0, std::string(task) + " export failed: " + r.err);
      std::ifstream in(out);
      std::string line;
      while (std::getline(in, line)) {
        ++rows;
        const auto j = nlohmann::json::parse(line);
        const std::string id = j["id"];
        const DisfluencyRecord* rec = by_id.count(id) ? by_id[id] : nullptr;
        if (rec == nullptr) {
          o.Check(false, "unknown id " + id);
          continue;
        }
        const std::string cls(ClassName(rec->cls));
        const std::string t = task;
        if (t == "detection") {
          o.Check(j["target"] == (cls == "fluent" ? "fluent" : "disfluent"), id + " detection");
          o.Check(j["input"] == Detokenize(rec->disfluent), id + " detection input");
        } else if (t == "classification") {
          o.Check(j["target"] == cls, id + " classification");
        } else if (t == "extraction") {
          const auto tokens = j["input"].get<std::vector<std::string>>();
          const auto tags = j["target"].get<std::vector<std::string>>();
          o.Check(tokens == rec->disfluent.words(), id + " extraction tokens");
          o.Check(tokens.size() == tags.size(), id + " extraction lengths");
          std::vector<std::string> kept;
          for (size_t i = 0; i < tags.size() && i < tokens.size(); ++i) {
            o.Check(tags[i] == "F" || tags[i] == "D", id + " tag " + tags[i]);
            o.Check((tags[i] == "D") == (rec->token_tags[i] == 1), id + " tag mismatch");
            if (tags[i] == "F") kept.push_back(tokens[i]);
          }
          extraction_corrected[id] = Detokenize(kept);
        } else {
          o.Check(j["input"] == Detokenize(rec->disfluent), id + " correction input");
          o.Check(j["target"] == Detokenize(rec->fluent), id + " correction target");
          correction_target[id] = j["target"];
        }
        TaskExample ex;
        ex.task = *ParseTask(t);
        ex.id = id;
        if (j["input"].is_array()) {
          ex.input = j["input"].get<std::vector<std::string>>();
        } else {
          ex.input = j["input"].get<std::string>();
        }
        if (j["target"].is_array()) {
          ex.target = j["target"].get<std::vector<std::string>>();
        } else {
          ex.target = j["target"].get<std::string>();
        }
        const auto problem = CheckTaskExample(ex);
        o.Check(!problem, id + ": " + problem.value_or(""));
      }
    }
  }
  o.Check(rows == 4 * ctx.dataset.size(), std::to_string(rows) + " rows for " +
                                              std::to_string(ctx.dataset.size()) + " records");
  o.Check(extraction_corrected == correction_target,
          "deleting D tokens does not give the correction target");
  if (o.pass) {
    o.detail = std::to_string(rows) + " rows over 4 tasks; F-token text equals the correction "
               "target for all " + std::to_string(correction_target.size()) + " records";
  }
  return o;
}

}  // namespace
}  // namespace lard::acceptance

int main(int argc, char** argv) {
  using namespace lard::acceptance;
  Context ctx;
  ctx.wordnet = argc > 1 ? argv[1] : LARD_TEST_WORDNET_DIR;
  ctx.oracle = LARD_ORACLE_SCRIPT;
  ctx.work = fs::temp_directory_path() / ("lard-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(ctx.work);
  fs::create_directories(ctx.work);

  try {
    ctx.db = std::make_unique<lard::wordnet::Database>(lard::wordnet::Database::Load(ctx.wordnet));
    ctx.gloss = GlossExamples(ctx.wordnet, 3, 30);
    ctx.gloss_path = ctx.work / "gloss.txt";
    WriteCorpus(ctx.gloss_path, ctx.gloss, ctx.gloss.size());
  } catch (const std::exception& e) {
    std::cout << "setup failed: " << e.what() << "\n";
    for (int i = 1; i <= 8; ++i) std::cout << "FAIL " << i << "\n";
    return 1;
  }
  std::cout << "WordNet " << ctx.wordnet.string() << ", corpus of " << ctx.gloss.size()
            << " gloss example utterances\n";

  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome(Context&)> run;
  };
  const Criterion criteria[] = {
      {1, "worked examples reproduce byte-exactly", PaperExamples},
      {2, "reconstruction invariant on 10,000 records", Reconstruction},
      {3, "class and subclass balance", Balance},
      {4, "split arithmetic", SplitArithmetic},
      {5, "lexical oracle", LexicalOracle},
      {6, "determinism across runs and workers", Determinism},
      {7, "restart guard", RestartGuard},
      {8, "export consistency", ExportConsistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.number << " " << c.name << ": " << o.detail
              << std::endl;
  }
  fs::remove_all(ctx.work);
  std::cout << (failures == 0 ? "all 8 criteria pass" : std::to_string(failures) + " failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
