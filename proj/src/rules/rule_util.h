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

#ifndef CLG_RULES_RULE_UTIL_H_
#define CLG_RULES_RULE_UTIL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clg/resources.h"
#include "clg/tagging.h"
#include "clg/text.h"

namespace clg {
namespace rules {

// One possible corruption: the rewritten word sequence and the token range
// of the original sentence it was derived from.
struct Candidate {
  std::vector<Word> words;
  TokenRange site;
};

using Candidates = std::vector<Candidate>;

struct RuleInput {
  const TaggedSentence &sentence;
  const RoleSpans &roles;
  const RuleResources &resources;
};

std::vector<Word> Slice(const TaggedSentence &s, TokenRange range);
std::string TextOf(const TaggedSentence &s, TokenRange range);

std::vector<Word> ReplaceRange(const TaggedSentence &s, TokenRange range,
                               const std::vector<Word> &with);
std::vector<Word> InsertAt(const TaggedSentence &s, size_t at,
                           const std::vector<Word> &words);
// Swaps two disjoint ranges; `a` must precede `b`.
std::vector<Word> SwapRanges(const TaggedSentence &s, TokenRange a,
                             TokenRange b);
// Moves `range` so that it sits before original token index `to`.
std::vector<Word> MoveRange(const TaggedSentence &s, TokenRange range,
                            size_t to);

// Token-aligned occurrences of `text`.
std::vector<TokenRange> FindText(const TaggedSentence &s, std::string_view text);
// Indices of tokens whose surface equals `word`.
std::vector<size_t> FindToken(const TaggedSentence &s, std::string_view word);

bool InAny(const std::vector<TokenRange> &ranges, size_t i);
// Index of the last non-punctuation token, if any.
std::optional<size_t> LastContentToken(const TaggedSentence &s);

void StructuralConfusion(FineType fine, const RuleInput &in, Candidates *out);
void ImproperLogicality(FineType fine, const RuleInput &in, Candidates *out);
void MissingComponent(FineType fine, const RuleInput &in, Candidates *out);
void RedundantComponent(FineType fine, const RuleInput &in, Candidates *out);
void ImproperCollocation(FineType fine, const RuleInput &in, Candidates *out);
void ImproperWordOrder(FineType fine, const RuleInput &in, Candidates *out);

}  // namespace rules
}  // namespace clg

#endif  // CLG_RULES_RULE_UTIL_H_
