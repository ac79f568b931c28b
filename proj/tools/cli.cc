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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lard/error.h"
#include "lard/export.h"
#include "lard/manifest.h"
#include "lard/pipeline.h"
#include "lard/pos.h"
#include "lard/record_io.h"
#include "lard/validate.h"
#include "lard/wordnet.h"

namespace lard::cli {
namespace {

namespace fs = std::filesystem;

std::string DefaultWordnetDir() {
  if (const char* env = std::getenv("LARD_WORDNET_DIR"); env != nullptr && *env) {
    return env;
  }
  return LARD_DEFAULT_WORDNET_DIR;
}

std::vector<DisfluencyClass> ParseClasses(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::vector<DisfluencyClass> out;
  for (const auto& name : SplitWhitespace(s)) {
    auto cls = ParseClass(name);
    if (!cls) throw CLI::ValidationError("--classes", "unknown class '" + name + "'");
    out.push_back(*cls);
  }
  if (out.empty()) throw CLI::ValidationError("--classes", "empty class list");
  return out;
}

struct GenerateFlags {
  std::string input;
  std::string format = "sgd";
  std::string wordnet = DefaultWordnetDir();
  std::string cues;
  std::string stoplist;
  uint64_t seed = 42;
  std::string out;
  std::string splits = "0.6,0.2,0.2";
  int dmax = 3;
  std::string classes = "fluent,repetition,replacement,restart";
  size_t workers = 1;
  bool pretokenized = true;
  bool dedup = false;
  size_t per_class = 0;
};

int CmdGenerate(const GenerateFlags& f, std::ostream& out) {
  PipelineConfig config;
  config.seed = f.seed;
  config.input = f.input;
  config.format = *ParseFormat(f.format);
  config.wordnet_dir = f.wordnet;
  if (!f.cues.empty()) config.cues_path = f.cues;
  if (!f.stoplist.empty()) config.stoplist_path = f.stoplist;
  config.max_degree = f.dmax;
  config.classes = ParseClasses(f.classes);
  config.ratios = ParseRatios(f.splits);
  config.out_dir = f.out;
  config.workers = f.workers;
  config.pretokenized = f.pretokenized;
  config.dedup = f.dedup;
  config.per_class = f.per_class;

  const DatasetManifest manifest = RunPipeline(config);
  out << FormatStatsTable(manifest.counts);
  out << "split sizes: train=" << manifest.split_sizes.train
      << " dev=" << manifest.split_sizes.dev << " test=" << manifest.split_sizes.test << "\n";
  for (const auto& [cls, n] : manifest.deficits) {
    if (n > 0) out << "deficit: " << cls << " " << n << "\n";
  }
  out << "wrote " << (fs::path(f.out) / kManifestFile).string() << "\n";
  return kExitOk;
}

int CmdStats(const std::vector<std::string>& inputs, bool as_json, std::ostream& out) {
  StatsCounts counts;
  for (const auto& path : inputs) {
    ForEachRecord(path, [&](StoredRecord&& r) { counts.Add(r.record); });
  }
  if (as_json) {
    out << StatsToJson(counts).dump(2) << "\n";
  } else {
    out << FormatStatsTable(counts);
  }
  return kExitOk;
}

int CmdValidate(const std::string& input, size_t max_failures, std::ostream& out) {
  size_t records = 0, failed = 0;
  ForEachRecord(input, [&](StoredRecord&& stored) {
    ++records;
    auto errors = ValidateRecord(stored.record, stored.annotated);
    if (errors.empty()) return;
    ++failed;
    if (failed <= max_failures) {
      for (const auto& e : errors) {
        out << stored.record.id << " (line " << stored.line << "): " << e << "\n";
      }
    }
  });
  if (records == 0) {
    out << "0 records\n";
    return kExitOk;
  }
  out << records << " records, " << failed << " invalid\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

int CmdExport(const std::string& input, const std::string& task_name, bool csv,
              const std::string& output, std::ostream& out, std::ostream& err) {
  std::optional<Task> task;
  if (!csv) {
    task = ParseTask(task_name);
    if (!task) {
      err << "unknown task '" << task_name
          << "' (expected detection, classification, extraction or correction)\n";
      return kExitUsage;
    }
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!output.empty()) {
    file.open(output, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::kIoError, "cannot write " + output);
    sink = &file;
  }
  if (csv) {
    WriteRecordsCsv(*sink, ReadRecords(input));
    return kExitOk;
  }
  ForEachRecord(input, [&](StoredRecord&& stored) {
    *sink << TaskExampleToJson(Export(stored.record, *task))
                 .dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
          << "\n";
  });
  return kExitOk;
}

int CmdLookup(const std::string& wordnet, const std::string& lemma,
              const std::string& pos_name, std::ostream& out) {
  auto pos = ParsePos(pos_name);
  const auto db = wordnet::Database::Load(wordnet);
  const auto subs = db.Substitutes(lemma, *pos);
  nlohmann::ordered_json j;
  j["lemma"] = lemma;
  j["pos"] = std::string(PosName(subs.pos));
  j["source_lemma"] = subs.source_lemma;
  j["synonyms"] = subs.synonyms;
  j["antonyms"] = subs.antonyms;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int CmdTag(const std::string& wordnet, const std::string& stoplist,
           const std::string& text, bool pretokenized, bool as_json, std::ostream& out) {
  const auto db = wordnet::Database::Load(wordnet);
  LexiconTagger tagger(db, stoplist.empty() ? Stoplist::Default() : Stoplist::FromFile(stoplist));
  const TaggedSequence tagged = tagger.Tag(Tokenize(text, pretokenized));
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (size_t i = 0; i < tagged.tags.size(); ++i) {
      j.push_back({{"token", tagged.sequence[i]}, {"pos", std::string(PosName(tagged.tags[i]))}});
    }
    out << j.dump() << "\n";
  } else {
    for (size_t i = 0; i < tagged.tags.size(); ++i) {
      out << (i ? " " : "") << tagged.sequence[i] << "/" << PosName(tagged.tags[i]);
    }
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthesize annotated speech disfluencies from fluent text."};
  app.name("lard");
  app.require_subcommand(1);

  GenerateFlags gen;
  auto* generate = app.add_subcommand("generate", "Build train/dev/test JSONL, manifest and stats");
  generate->add_option("--input", gen.input, "Corpus file or SGD directory")->required();
  generate->add_option("--format", gen.format, "Input format")
      ->check(CLI::IsMember({"sgd", "text", "tsv-tagged"}))
      ->capture_default_str();
  generate->add_option("--wordnet", gen.wordnet, "WordNet dict directory")->capture_default_str();
  generate->add_option("--cues", gen.cues, "Repair cue list (default: packaged list)");
  generate->add_option("--stoplist", gen.stoplist, "Closed-class stoplist (default: packaged list)");
  generate->add_option("--seed", gen.seed, "Global seed; the only source of randomness")
      ->capture_default_str();
  generate->add_option("--out", gen.out, "Output directory")->required();
  generate->add_option("--splits", gen.splits, "train,dev,test ratios")->capture_default_str();
  generate->add_option("--dmax", gen.dmax, "Replacement degree cap (0 = uncapped)")
      ->capture_default_str();
  generate->add_option("--classes", gen.classes, "Classes to generate")->capture_default_str();
  generate->add_option("--workers", gen.workers, "Generation threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_flag("--pretokenized,!--raw-text", gen.pretokenized,
                     "Split input on whitespace only (--pretokenized=false or --raw-text for "
                     "the rule-based tokenizer)")
      ->capture_default_str();
  generate->add_flag("--dedup", gen.dedup, "Drop repeated utterances");
  generate->add_option("--per-class", gen.per_class,
                       "Sequences per class; the remainder refills failed replacements "
                       "(0 = split the whole corpus)")
      ->capture_default_str();

  std::vector<std::string> stats_inputs;
  bool stats_json = false;
  auto* stats = app.add_subcommand("stats", "Count records per class and subclass");
  stats->add_option("--input", stats_inputs, "JSONL files")->required();
  stats->add_flag("--json", stats_json, "Print JSON instead of a table");

  std::string validate_input;
  size_t max_failures = 20;
  auto* validate = app.add_subcommand("validate", "Check every record's invariants");
  validate->add_option("--input", validate_input, "JSONL file")->required();
  validate->add_option("--max-failures", max_failures, "Failures to print")->capture_default_str();

  std::string export_input, export_task, export_out;
  bool export_csv = false;
  auto* exp = app.add_subcommand("export", "Write task examples (JSONL) or a record CSV");
  exp->add_option("--input", export_input, "JSONL file")->required();
  exp->add_option("--task", export_task, "detection|classification|extraction|correction");
  exp->add_flag("--csv", export_csv, "Write the record columns as CSV instead");
  exp->add_option("--out", export_out, "Output file (default: stdout)");

  std::string wn_dir = DefaultWordnetDir(), lemma, pos_name;
  auto* wordnet_cmd = app.add_subcommand("wordnet", "Query the lexical database");
  wordnet_cmd->require_subcommand(1);
  auto* lookup = wordnet_cmd->add_subcommand("lookup", "Print synonyms and antonyms as JSON");
  lookup->add_option("--lemma", lemma, "Word to look up")->required();
  lookup->add_option("--pos", pos_name, "noun|verb|adj")
      ->required()
      ->check(CLI::IsMember({"noun", "verb", "adj"}));
  lookup->add_option("--wordnet", wn_dir, "WordNet dict directory")->capture_default_str();

  std::string tag_text, tag_stoplist;
  bool tag_pretokenized = true, tag_json = false;
  auto* tag = app.add_subcommand("tag", "Print the coarse POS of each token");
  tag->add_option("--text", tag_text, "Utterance")->required();
  tag->add_option("--wordnet", wn_dir, "WordNet dict directory")->capture_default_str();
  tag->add_option("--stoplist", tag_stoplist, "Closed-class stoplist");
  tag->add_flag("--pretokenized,!--raw-text", tag_pretokenized, "Whitespace tokens only");
  tag->add_flag("--json", tag_json, "Print JSON");

  try {
    app.parse(argc, argv);
    if (exp->parsed() && !export_csv && export_task.empty()) {
      throw CLI::RequiredError("--task or --csv");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lard: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return CmdGenerate(gen, out);
    if (stats->parsed()) return CmdStats(stats_inputs, stats_json, out);
    if (validate->parsed()) return CmdValidate(validate_input, max_failures, out);
    if (exp->parsed()) {
      return CmdExport(export_input, export_task, export_csv, export_out, out, err);
    }
    if (lookup->parsed()) return CmdLookup(wn_dir, lemma, pos_name, out);
    if (tag->parsed()) return CmdTag(wn_dir, tag_stoplist, tag_text, tag_pretokenized, tag_json, out);
  } catch (const CLI::ValidationError& e) {
    err << "lard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "lard: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "lard: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lard::cli
