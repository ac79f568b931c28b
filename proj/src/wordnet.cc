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

#include "lard/wordnet.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <span>
#include <sstream>

#include "lard/checksum.h"
#include "lard/error.h"
#include "lard/text.h"

namespace lard::wordnet {
namespace {

namespace fs = std::filesystem;

struct PosFiles {
  CoarsePos pos;
  const char* suffix;  // index.<suffix>, data.<suffix>, <suffix>.exc
  char index_char;
};

constexpr std::array<PosFiles, 3> kPosFiles = {{
    {CoarsePos::kNoun, "noun", 'n'},
    {CoarsePos::kVerb, "verb", 'v'},
    {CoarsePos::kAdjective, "adj", 'a'},
}};

struct Suffix {
  std::string_view from;
  std::string_view to;
};

constexpr Suffix kNounSuffixes[] = {{"s", ""},     {"ses", "s"}, {"xes", "x"},
                                    {"zes", "z"},  {"ches", "ch"},
                                    {"shes", "sh"}, {"men", "man"},
                                    {"ies", "y"}};
constexpr Suffix kVerbSuffixes[] = {{"s", ""},   {"ies", "y"}, {"es", "e"},
                                    {"es", ""},  {"ed", "e"},  {"ed", ""},
                                    {"ing", "e"}, {"ing", ""}};
constexpr Suffix kAdjSuffixes[] = {
    {"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}};

size_t PartSlot(CoarsePos pos) {
  switch (pos) {
    case CoarsePos::kNoun: return 0;
    case CoarsePos::kVerb: return 1;
    case CoarsePos::kAdjective: return 2;
    case CoarsePos::kOther: break;
  }
  return 3;
}

std::optional<CoarsePos> PosFromDataChar(char c) {
  switch (c) {
    case 'n': return CoarsePos::kNoun;
    case 'v': return CoarsePos::kVerb;
    case 'a':
    case 's': return CoarsePos::kAdjective;
    default: return std::nullopt;
  }
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMissingFile, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    fn(line, line_no);
    pos = end + 1;
  }
}

std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool ParseNumber(std::string_view s, T* out, int base = 10) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out, base);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string StripMarker(std::string_view word) {
  // Adjective syntactic markers: "galore(ip)", "elect(p)", "former(a)".
  if (!word.empty() && word.back() == ')') {
    size_t open = word.rfind('(');
    if (open != std::string_view::npos && open > 0) word = word.substr(0, open);
  }
  return std::string(word);
}

std::string Underscored(std::string_view word) {
  std::string out = ToLower(word);
  std::replace(out.begin(), out.end(), ' ', '_');
  return out;
}

std::string Spaced(std::string_view word) {
  std::string out(word);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

size_t WordCount(std::string_view spaced) {
  return SplitWhitespace(spaced).size();
}

bool IsLicenseLine(std::string_view line) {
  return line.size() >= 2 && line[0] == ' ' && line[1] == ' ';
}

void ParseIndex(const std::string& file, std::string_view text,
                char pos_char, CoarsePos pos,
                std::unordered_map<std::string, LexicalEntry>* index,
                std::vector<std::pair<size_t, uint32_t>>* refs) {
  ForEachLine(text, [&](std::string_view line, size_t line_no) {
    if (line.empty() || IsLicenseLine(line)) return;
    auto f = Fields(line);
    auto fail = [&](const std::string& why) {
      throw ParseError(file, line_no, why);
    };
    if (f.size() < 6) fail("truncated line: expected at least 6 fields");
    if (f[1].size() != 1 || f[1][0] != pos_char) fail("unexpected pos field");
    size_t synset_cnt = 0, p_cnt = 0;
    if (!ParseNumber(f[2], &synset_cnt)) fail("bad synset_cnt");
    if (!ParseNumber(f[3], &p_cnt)) fail("bad p_cnt");
    const size_t expected = 4 + p_cnt + 2 + synset_cnt;
    if (f.size() < expected) {
      fail("truncated line: expected " + std::to_string(expected) +
           " fields, got " + std::to_string(f.size()));
    }
    LexicalEntry entry;
    entry.lemma = std::string(f[0]);
    entry.pos = pos;
    if (!ParseNumber(f[4 + p_cnt + 1], &entry.tagged_sense_count)) {
      fail("bad tagsense_cnt");
    }
    for (size_t i = 0; i < synset_cnt; ++i) {
      uint32_t offset = 0;
      if (!ParseNumber(f[4 + p_cnt + 2 + i], &offset)) fail("bad synset offset");
      entry.synset_offsets.push_back(offset);
      refs->emplace_back(line_no, offset);
    }
    std::string key = entry.lemma;
    index->insert_or_assign(std::move(key), std::move(entry));
  });
}

void ParseData(const std::string& file, std::string_view text, CoarsePos pos,
               std::unordered_map<uint32_t, Synset>* synsets) {
  ForEachLine(text, [&](std::string_view line, size_t line_no) {
    if (line.empty() || IsLicenseLine(line)) return;
    auto fail = [&](const std::string& why) {
      throw ParseError(file, line_no, why);
    };
    size_t bar = line.find(" | ");
    std::string_view body = bar == std::string_view::npos ? line : line.substr(0, bar);
    auto f = Fields(body);
    if (f.size() < 4) fail("truncated line: missing synset header");
    Synset s;
    s.pos = pos;
    if (!ParseNumber(f[0], &s.offset)) fail("bad synset offset");
    if (f[2].size() != 1 || !PosFromDataChar(f[2][0])) fail("bad ss_type");
    s.satellite = f[2][0] == 's';
    size_t w_cnt = 0;
    if (!ParseNumber(f[3], &w_cnt, 16)) fail("bad w_cnt");
    size_t at = 4;
    if (f.size() < at + 2 * w_cnt + 1) fail("truncated line: word list");
    for (size_t i = 0; i < w_cnt; ++i) {
      s.words.push_back(StripMarker(f[at]));
      at += 2;
    }
    size_t p_cnt = 0;
    if (!ParseNumber(f[at], &p_cnt)) fail("bad p_cnt");
    ++at;
    if (f.size() < at + 4 * p_cnt) fail("truncated line: pointer list");
    for (size_t i = 0; i < p_cnt; ++i, at += 4) {
      if (f[at] != "!") continue;
      AntonymPointer p;
      if (!ParseNumber(f[at + 1], &p.target_offset)) fail("bad pointer offset");
      if (f[at + 2].size() != 1) fail("bad pointer pos");
      auto target_pos = PosFromDataChar(f[at + 2][0]);
      if (!target_pos) continue;  // adverb targets are out of scope
      p.target_pos = *target_pos;
      uint32_t st = 0;
      if (f[at + 3].size() != 4 || !ParseNumber(f[at + 3], &st, 16)) {
        fail("bad source/target field");
      }
      p.source_word = static_cast<int>(st >> 8);
      p.target_word = static_cast<int>(st & 0xff);
      s.antonyms.push_back(p);
    }
    uint32_t key = s.offset;
    synsets->insert_or_assign(key, std::move(s));
  });
}

void ParseExceptions(std::string_view text,
                     std::unordered_map<std::string, std::vector<std::string>>* exc) {
  ForEachLine(text, [&](std::string_view line, size_t) {
    auto f = Fields(line);
    if (f.size() < 2) return;
    auto& bases = (*exc)[std::string(f[0])];
    for (size_t i = 1; i < f.size(); ++i) bases.emplace_back(f[i]);
  });
}

}  // namespace

std::vector<std::string> SubstituteSet::Pool() const {
  std::set<std::string> pool(synonyms);
  pool.insert(antonyms.begin(), antonyms.end());
  return {pool.begin(), pool.end()};
}

Database Database::Load(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kMissingFile, dir.string() + " is not a directory");
  }
  Database db;
  Sha256 hash;
  for (const auto& pf : kPosFiles) {
    auto& part = db.parts_[PartSlot(pf.pos)];
    const fs::path index_path = dir / (std::string("index.") + pf.suffix);
    const fs::path data_path = dir / (std::string("data.") + pf.suffix);
    const fs::path exc_path = dir / (std::string(pf.suffix) + ".exc");
    if (!fs::exists(index_path)) throw Error(ErrorCode::kMissingFile, index_path.string());
    if (!fs::exists(data_path)) throw Error(ErrorCode::kMissingFile, data_path.string());

    const std::string index_text = ReadFile(index_path);
    const std::string data_text = ReadFile(data_path);
    hash.Update(index_path.filename().string());
    hash.Update(index_text);
    hash.Update(data_path.filename().string());
    hash.Update(data_text);

    std::vector<std::pair<size_t, uint32_t>> refs;
    ParseIndex(index_path.string(), index_text, pf.index_char, pf.pos,
               &part.index, &refs);
    ParseData(data_path.string(), data_text, pf.pos, &part.synsets);
    for (const auto& [line_no, offset] : refs) {
      if (!part.synsets.contains(offset)) {
        throw ParseError(index_path.string(), line_no,
                         "synset offset " + std::to_string(offset) +
                             " not found in " + data_path.filename().string());
      }
    }
    if (fs::exists(exc_path)) {
      const std::string exc_text = ReadFile(exc_path);
      hash.Update(exc_path.filename().string());
      hash.Update(exc_text);
      ParseExceptions(exc_text, &part.exceptions);
    }
  }
  db.checksum_ = hash.HexDigest();
  return db;
}

const Database::PartOfSpeech* Database::Part(CoarsePos pos) const {
  size_t slot = PartSlot(pos);
  return slot < parts_.size() ? &parts_[slot] : nullptr;
}

const LexicalEntry* Database::Find(std::string_view lemma, CoarsePos pos) const {
  const auto* part = Part(pos);
  if (part == nullptr) return nullptr;
  auto it = part->index.find(Underscored(lemma));
  return it == part->index.end() ? nullptr : &it->second;
}

const Synset* Database::FindSynset(CoarsePos pos, uint32_t offset) const {
  const auto* part = Part(pos);
  if (part == nullptr) return nullptr;
  auto it = part->synsets.find(offset);
  return it == part->synsets.end() ? nullptr : &it->second;
}

std::vector<std::string> Database::BaseForms(std::string_view word,
                                             CoarsePos pos) const {
  std::vector<std::string> out;
  const auto* part = Part(pos);
  if (part == nullptr) return out;
  const std::string form = Underscored(word);
  auto add = [&](const std::string& candidate) {
    if (candidate.empty() || !part->index.contains(candidate)) return;
    if (std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(candidate);
    }
  };
  add(form);
  if (auto it = part->exceptions.find(form); it != part->exceptions.end()) {
    for (const auto& base : it->second) add(base);
  }
  std::span<const Suffix> rules;
  switch (pos) {
    case CoarsePos::kNoun: rules = kNounSuffixes; break;
    case CoarsePos::kVerb: rules = kVerbSuffixes; break;
    case CoarsePos::kAdjective: rules = kAdjSuffixes; break;
    case CoarsePos::kOther: break;
  }
  for (const auto& rule : rules) {
    if (form.size() > rule.from.size() && form.ends_with(rule.from)) {
      add(form.substr(0, form.size() - rule.from.size()) + std::string(rule.to));
    }
  }
  return out;
}

SubstituteSet Database::Substitutes(std::string_view lemma, CoarsePos pos) const {
  SubstituteSet out;
  out.pos = pos;
  const std::string query = Underscored(lemma);
  auto bases = BaseForms(lemma, pos);
  if (bases.empty()) {
    out.source_lemma = Spaced(query);
    return out;
  }
  const std::string& base = bases.front();
  out.source_lemma = Spaced(base);
  const LexicalEntry* entry = Find(base, pos);

  auto admissible = [&](const std::string& word) {
    const std::string folded = Underscored(word);
    if (folded == base || folded == query) return false;
    size_t n = WordCount(Spaced(word));
    return n >= 1 && n <= kMaxSubstituteWords;
  };

  for (uint32_t offset : entry->synset_offsets) {
    const Synset* synset = FindSynset(pos, offset);
    int self = 0;  // 1-based word number of the lemma in this synset
    for (size_t i = 0; i < synset->words.size(); ++i) {
      if (ToLower(synset->words[i]) == base) {
        self = static_cast<int>(i) + 1;
        break;
      }
    }
    for (const auto& word : synset->words) {
      if (admissible(word)) out.synonyms.insert(Spaced(word));
    }
    for (const auto& ptr : synset->antonyms) {
      if (ptr.source_word != 0 && ptr.source_word != self) continue;
      const Synset* target = FindSynset(ptr.target_pos, ptr.target_offset);
      if (target == nullptr) continue;
      for (size_t i = 0; i < target->words.size(); ++i) {
        if (ptr.target_word != 0 && ptr.target_word != static_cast<int>(i) + 1) {
          continue;
        }
        if (admissible(target->words[i])) {
          out.antonyms.insert(Spaced(target->words[i]));
        }
      }
    }
  }
  return out;
}

size_t Database::LemmaCount(CoarsePos pos) const {
  const auto* part = Part(pos);
  return part == nullptr ? 0 : part->index.size();
}

size_t Database::SynsetCount(CoarsePos pos) const {
  const auto* part = Part(pos);
  return part == nullptr ? 0 : part->synsets.size();
}

std::string Database::CanonicalDigest() const {
  Sha256 hash;
  for (const auto& pf : kPosFiles) {
    const auto& part = parts_[PartSlot(pf.pos)];
    std::map<std::string, const LexicalEntry*> entries;
    for (const auto& [k, v] : part.index) entries.emplace(k, &v);
    for (const auto& [lemma, e] : entries) {
      std::string line = lemma + " " + std::to_string(e->tagged_sense_count);
      for (uint32_t o : e->synset_offsets) line += " " + std::to_string(o);
      hash.Update(line + "\n");
    }
    std::map<uint32_t, const Synset*> synsets;
    for (const auto& [k, v] : part.synsets) synsets.emplace(k, &v);
    for (const auto& [offset, s] : synsets) {
      std::string line = std::to_string(offset) + (s->satellite ? " s" : " -");
      for (const auto& w : s->words) line += " " + w;
      for (const auto& p : s->antonyms) {
        line += " !" + std::to_string(p.source_word) + ":" +
                std::to_string(p.target_offset) + ":" +
                std::string(PosName(p.target_pos)) + ":" +
                std::to_string(p.target_word);
      }
      hash.Update(line + "\n");
    }
    std::map<std::string, const std::vector<std::string>*> exc;
    for (const auto& [k, v] : part.exceptions) exc.emplace(k, &v);
    for (const auto& [form, bases] : exc) {
      std::string line = form;
      for (const auto& b : *bases) line += " " + b;
      hash.Update(line + "\n");
    }
  }
  return hash.HexDigest();
}

}  // namespace lard::wordnet
