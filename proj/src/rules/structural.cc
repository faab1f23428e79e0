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

// Structural Confusion: two structures spliced into one sentence.

#include "rules/rule_util.h"

namespace clg {
namespace rules {
namespace {

// MixedPatterns: a trigger span is present, so the sentence already uses
// one structure; appending the other structure's tail at the end of the
// trigger's clause mixes the two (应该…洗净削皮 + …较为安全).
void MixedPatterns(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (const MixedPatternEntry &e : in.resources.mixed_patterns) {
    if (e.fine != FineType::kMixedPatterns) continue;
    for (TokenRange site : FindText(s, e.pattern_a)) {
      size_t at = ClauseOf(s, site.end - 1).end;
      out->push_back({InsertAt(s, at, {{e.splice_text, PosTag::kOther}}), site});
    }
  }
}

// MixedSubjects: a later clause that continues the first clause's subject
// gets the first clause's object head as a new subject, with no connective.
void MixedSubjects(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  auto object = in.roles.First(SyntacticRole::kObject);
  if (!object) return;
  TokenRange head = HeadOf(s, *object);
  if (head.empty()) return;
  for (size_t i = head.end; i < s.size(); ++i) {
    if (s[i].tag != PosTag::kPunct || i + 1 >= s.size()) continue;
    const Token &first = s[i + 1];
    if (first.tag != PosTag::kVerb && first.tag != PosTag::kAdv &&
        first.tag != PosTag::kX)
      continue;
    out->push_back({InsertAt(s, i + 1, Slice(s, head)), {i + 1, i + 2}});
  }
}

// MixedSentences: the sentence's final phrase is reused as the start of a
// second sentence (…既定的目标 + 目标是大家共同努力的结果).
void MixedSentences(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  auto last = LastContentToken(s);
  if (!last) return;
  for (const MixedPatternEntry &e : in.resources.mixed_patterns) {
    if (e.fine != FineType::kMixedSentences) continue;
    for (TokenRange site : FindText(s, e.pattern_a)) {
      if (site.end != *last + 1) continue;
      out->push_back(
          {InsertAt(s, site.end, {{e.splice_text, PosTag::kOther}}), site});
    }
  }
}

}  // namespace

void StructuralConfusion(FineType fine, const RuleInput &in, Candidates *out) {
  switch (fine) {
    case FineType::kMixedPatterns: return MixedPatterns(in, out);
    case FineType::kMixedSubjects: return MixedSubjects(in, out);
    case FineType::kMixedSentences: return MixedSentences(in, out);
    default: return;
  }
}

}  // namespace rules
}  // namespace clg
