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

#ifndef CLG_RESOURCES_H_
#define CLG_RESOURCES_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "clg/text.h"

namespace clg {

// mixed_patterns.tsv: `fine<TAB>pattern_a<TAB>pattern_b<TAB>splice_text`.
//  MixedPatterns:  pattern_a is a trigger span; pattern_b is the competing
//                  structure, which must end with splice_text.
//  MixedSentences: pattern_a is the final phrase; pattern_b is a sentence
//                  that starts with it and equals pattern_a + splice_text.
struct MixedPatternEntry {
  FineType fine;
  std::string pattern_a;
  std::string pattern_b;
  std::string splice_text;
};

// logic_patterns.tsv: `fine<TAB>match<TAB>template`.
//  MeasureWord:            approximate word; template `before` or `after`.
//  Unreasonable:           superset phrase; template is the subsumed conjunct.
//  ImproperNegation:       negative-meaning verb; template is the negator.
//  ReverseHostGuest:       relational verb; template `swap`.
//  ImposingCauseAndEffect: non-causal marker in a later clause; template
//                          `cause|effect` connectives.
struct LogicPatternEntry {
  FineType fine;
  std::string match;
  std::string templ;
};

// collocations.tsv: `fine<TAB>target<TAB>partner<TAB>wrong,wrong`. The
// target word is replaced by a wrong candidate.
struct CollocationEntry {
  FineType fine;
  std::string target;
  std::string partner;
  std::vector<std::string> wrong;
};

// connectives.tsv: `first<TAB>second<TAB>wrong,wrong`; wrong partners
// replace the second connective.
struct ConnectivePair {
  std::string first;
  std::string second;
  std::vector<std::string> wrong;
};

struct RuleResources {
  std::vector<MixedPatternEntry> mixed_patterns;
  std::vector<LogicPatternEntry> logic_patterns;
  std::vector<CollocationEntry> collocations;
  // synonyms.tsv: `word<TAB>cand,cand[<TAB>relation]`, relation `synonym`
  // (default) or `subsumed`. Subsumed candidates are words whose meaning
  // the anchor already carries (亲眼 for 目睹).
  std::map<std::string, std::vector<std::string>> synonyms;
  std::map<std::string, std::vector<std::string>> subsumed;
  std::vector<ConnectivePair> connective_pairs;
  // function_words.tsv: `category<TAB>word,word`.
  std::map<std::string, std::vector<std::string>> function_words;

  bool HasFunctionWord(std::string_view category, std::string_view word) const;
};

inline constexpr const char *kResourceFiles[] = {
    "mixed_patterns.tsv", "logic_patterns.tsv", "collocations.tsv",
    "synonyms.tsv",       "connectives.tsv",    "function_words.tsv",
};

// Missing files are configuration errors; malformed lines are parse errors
// carrying file and line number. Duplicate keys merge candidate lists.
RuleResources LoadResources(const std::string &dir);

}  // namespace clg

#endif  // CLG_RESOURCES_H_
