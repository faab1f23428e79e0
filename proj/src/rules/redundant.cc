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

// Redundant Component: an extra word duplicating existing meaning.

#include "rules/rule_util.h"

namespace clg {
namespace rules {
namespace {

// A near-synonym inserted right after the anchor: 非常十分喜欢.
void MultiWords(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (size_t i = 0; i < s.size(); ++i) {
    auto it = in.resources.synonyms.find(s[i].surface);
    if (it == in.resources.synonyms.end()) continue;
    for (const std::string &syn : it->second) {
      out->push_back({InsertAt(s, i + 1, {{syn, s[i].tag}}), {i, i + 1}});
    }
  }
}

// A word whose meaning the anchor already contains, inserted before it:
// 亲眼目睹.
void MultiMeanings(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (size_t i = 0; i < s.size(); ++i) {
    auto it = in.resources.subsumed.find(s[i].surface);
    if (it == in.resources.subsumed.end()) continue;
    PosTag tag = s[i].tag == PosTag::kVerb ? PosTag::kAdv : PosTag::kAdj;
    for (const std::string &word : it->second) {
      out->push_back({InsertAt(s, i, {{word, tag}}), {i, i + 1}});
    }
  }
}

}  // namespace

void RedundantComponent(FineType fine, const RuleInput &in, Candidates *out) {
  switch (fine) {
    case FineType::kMultiWords: return MultiWords(in, out);
    case FineType::kMultiMeanings: return MultiMeanings(in, out);
    default: return;
  }
}

}  // namespace rules
}  // namespace clg
