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


#ifndef CLG_M2_H_
#define CLG_M2_H_

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "clg/text.h"

namespace clg {

// A token-span edit; `correction` is space-joined tokens.
struct M2Edit {
  size_t start = 0;
  size_t end = 0;
  std::string correction;

  auto operator<=>(const M2Edit &) const = default;
};

struct GoldEdit {
  size_t start = 0;
  size_t end = 0;
  std::vector<std::string> corrections;  // alternatives split on `||`

  bool Matches(const M2Edit &e) const;
  bool operator==(const GoldEdit &) const = default;
};

struct M2Sentence {
  std::vector<std::string> source;
  // Annotator id -> edits. A sentence without A lines has annotator 0 with
  // no edits; `-NONE-` annotations register the annotator with no edit.
  std::map<int, std::vector<GoldEdit>> annotators;
};

std::vector<M2Sentence> ParseM2(std::istream &in);

struct ScoreParams {
  double beta = 0.5;
  size_t max_unchanged = 2;
  bool char_tokenize = false;
};

// Among minimal-cost token alignments of source and hypothesis, the edit
// set with the most gold matches, then the fewest edits, then the
// lexicographically smallest (start, end, correction) sequence. Edits
// start and end with a change and hold at most `max_unchanged` matches.
std::vector<M2Edit> ExtractSystemEdits(const std::vector<std::string> &source,
                                       const std::vector<std::string> &hyp,
                                       const std::vector<GoldEdit> &gold,
                                       const ScoreParams &params);

struct MatchCounts {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;

  bool operator==(const MatchCounts &) const = default;
};

MatchCounts CountMatches(const std::vector<M2Edit> &system,
                         const std::vector<GoldEdit> &gold);

struct Prf {
  double precision = 1;
  double recall = 1;
  double f = 1;
};

// P = 1 when tp + fp = 0, R = 1 when tp + fn = 0, F = 0 when P * R = 0.
Prf ComputePrf(const MatchCounts &counts, double beta);

struct ScoreReport {
  MatchCounts counts;
  Prf prf;
  double beta = 0.5;
  bool char_tokenize = false;
  std::vector<int> chosen_annotators;

  // `Precision : x.xxxx` etc., F labelled with beta.
  std::string ToText() const;
  std::string ToJson() const;
};

// Splits every token into characters; gold offsets are remapped.
M2Sentence CharTokenize(const M2Sentence &sentence);
std::vector<std::string> CharTokens(std::string_view text);

// Hypotheses are whitespace-tokenized lines aligned with `gold`.
ScoreReport ScoreCorpus(const std::vector<M2Sentence> &gold,
                        const std::vector<std::string> &hypotheses,
                        const ScoreParams &params);

// Character-tokenized M2 of generated pairs: the incorrect text is the
// source and the pair's edits are annotator 0's gold.
void WriteGoldM2(const CorpusPair &pair, std::ostream &out);

}  // namespace clg

#endif  // CLG_M2_H_
