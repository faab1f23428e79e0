// Copyright 2026 The clgkit Authors.
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

#include "clg/resources.h"

#include <algorithm>
#include <filesystem>
#include <functional>

#include "clg/error.h"
#include "clg/strings.h"
#include "clg/utf8.h"

namespace clg {
namespace {

using Fields = std::vector<std::string>;
using LineFn = std::function<void(const Fields &, const std::string &where)>;

// Feeds each non-comment line's tab-separated fields to fn.
void ForEachLine(const std::filesystem::path &path, size_t min_fields,
                 size_t max_fields, const LineFn &fn) {
  if (!std::filesystem::exists(path)) {
    throw ConfigError("resource file missing: " + path.string());
  }
  std::ifstream in = OpenInput(path.string(), ErrorKind::kConfig);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    ChompCr(&line);
    if (Trim(line).empty() || line[0] == '#') continue;
    std::string where = path.filename().string() + ":" + std::to_string(lineno);
    try {
      DecodeUtf8(line);
    } catch (const Error &) {
      throw ParseError(where + ": invalid UTF-8");
    }
    Fields f = Split(line, '\t');
    for (auto &x : f) x = std::string(Trim(x));
    if (f.size() < min_fields || f.size() > max_fields) {
      throw ParseError(where + ": expected " + std::to_string(min_fields) +
                       (min_fields == max_fields
                            ? ""
                            : "-" + std::to_string(max_fields)) +
                       " tab-separated fields, got " + std::to_string(f.size()));
    }
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i].empty()) {
        throw ParseError(where + ": field " + std::to_string(i + 1) + " is empty");
      }
    }
    fn(f, where);
  }
}

std::vector<std::string> ParseList(const std::string &field,
                                   const std::string &where) {
  std::vector<std::string> out;
  for (auto &item : Split(field, ',')) {
    std::string v(Trim(item));
    if (v.empty()) throw ParseError(where + ": empty list item");
    out.push_back(std::move(v));
  }
  return out;
}

void MergeInto(std::vector<std::string> *dst,
               const std::vector<std::string> &src) {
  for (const auto &w : src) {
    if (std::find(dst->begin(), dst->end(), w) == dst->end()) dst->push_back(w);
  }
}

FineType ParseFine(const std::string &name, std::initializer_list<FineType> allowed,
                   const std::string &where) {
  auto fine = ParseFineType(name);
  if (!fine || std::find(allowed.begin(), allowed.end(), *fine) == allowed.end()) {
    throw ParseError(where + ": rule type `" + name +
                     "` is not valid in this file");
  }
  return *fine;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

bool RuleResources::HasFunctionWord(std::string_view category,
                                    std::string_view word) const {
  auto it = function_words.find(std::string(category));
  if (it == function_words.end()) return false;
  return std::find(it->second.begin(), it->second.end(), word) !=
         it->second.end();
}

RuleResources LoadResources(const std::string &dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  if (!fs::is_directory(root)) {
    throw ConfigError("resource directory not found: " + dir);
  }
  for (const char *name : kResourceFiles) {
    if (!fs::exists(root / name)) {
      throw ConfigError("resource file missing: " + (root / name).string());
    }
  }

  RuleResources res;

  ForEachLine(root / "mixed_patterns.tsv", 4, 4,
              [&](const Fields &f, const std::string &where) {
                FineType fine = ParseFine(
                    f[0], {FineType::kMixedPatterns, FineType::kMixedSentences},
                    where);
                if (fine == FineType::kMixedPatterns &&
                    !EndsWith(f[2], f[3])) {
                  throw ParseError(where + ": pattern_b must end with splice_text");
                }
                if (fine == FineType::kMixedSentences && f[2] != f[1] + f[3]) {
                  throw ParseError(where +
                                   ": pattern_b must equal pattern_a + splice_text");
                }
                res.mixed_patterns.push_back({fine, f[1], f[2], f[3]});
              });

  ForEachLine(root / "logic_patterns.tsv", 3, 3,
              [&](const Fields &f, const std::string &where) {
                FineType fine = ParseFine(
                    f[0],
                    {FineType::kMeasureWord, FineType::kUnreasonable,
                     FineType::kImproperNegation, FineType::kReverseHostGuest,
                     FineType::kImposingCauseAndEffect},
                    where);
                if (fine == FineType::kMeasureWord && f[2] != "before" &&
                    f[2] != "after") {
                  throw ParseError(where + ": MeasureWord template must be "
                                           "`before` or `after`");
                }
                if (fine == FineType::kImposingCauseAndEffect) {
                  auto parts = Split(f[2], '|');
                  if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
                    throw ParseError(where + ": template must be `cause|effect`");
                }
                if (fine == FineType::kReverseHostGuest && f[2] != "swap") {
                  throw ParseError(where + ": ReverseHostGuest template must be `swap`");
                }
                if (fine == FineType::kUnreasonable && f[1] == f[2]) {
                  throw ParseError(where + ": conjunct equals the matched phrase");
                }
                res.logic_patterns.push_back({fine, f[1], f[2]});
              });

  ForEachLine(
      root / "collocations.tsv", 4, 4,
      [&](const Fields &f, const std::string &where) {
        FineType fine = ParseFine(
            f[0],
            {FineType::kSubjectPredicate, FineType::kPredicateObject,
             FineType::kSubjectObject, FineType::kModifierHeadWord},
            where);
        auto wrong = ParseList(f[3], where);
        if (std::find(wrong.begin(), wrong.end(), f[1]) != wrong.end()) {
          throw ParseError(where + ": wrong candidates contain the target itself");
        }
        for (auto &e : res.collocations) {
          if (e.fine == fine && e.target == f[1] && e.partner == f[2]) {
            MergeInto(&e.wrong, wrong);
            return;
          }
        }
        res.collocations.push_back({fine, f[1], f[2], std::move(wrong)});
      });

  ForEachLine(root / "synonyms.tsv", 2, 3,
              [&](const Fields &f, const std::string &where) {
                auto cands = ParseList(f[1], where);
                if (std::find(cands.begin(), cands.end(), f[0]) != cands.end()) {
                  throw ParseError(where + ": candidate equals the word itself");
                }
                std::string relation = f.size() == 3 ? f[2] : "synonym";
                if (relation == "synonym") {
                  MergeInto(&res.synonyms[f[0]], cands);
                } else if (relation == "subsumed") {
                  MergeInto(&res.subsumed[f[0]], cands);
                } else {
                  throw ParseError(where + ": relation must be `synonym` or "
                                           "`subsumed`");
                }
              });

  ForEachLine(root / "connectives.tsv", 3, 3,
              [&](const Fields &f, const std::string &where) {
                auto wrong = ParseList(f[2], where);
                if (std::find(wrong.begin(), wrong.end(), f[1]) != wrong.end()) {
                  throw ParseError(where + ": wrong partners contain the "
                                           "correct connective");
                }
                for (auto &p : res.connective_pairs) {
                  if (p.first == f[0] && p.second == f[1]) {
                    MergeInto(&p.wrong, wrong);
                    return;
                  }
                }
                res.connective_pairs.push_back({f[0], f[1], std::move(wrong)});
              });

  ForEachLine(root / "function_words.tsv", 2, 2,
              [&](const Fields &f, const std::string &where) {
                MergeInto(&res.function_words[f[0]], ParseList(f[1], where));
              });

  return res;
}

}  // namespace clg
