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

// Missing Component: a sentence component is removed.

#include "rules/rule_util.h"

namespace clg {
namespace rules {
namespace {

bool HasContentOutside(const TaggedSentence &s, TokenRange removed) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (!removed.Contains(i) && s[i].tag != PosTag::kPunct) return true;
  }
  return false;
}

void Delete(const TaggedSentence &s, TokenRange range, Candidates *out) {
  if (range.empty() || !HasContentOutside(s, range)) return;
  out->push_back({ReplaceRange(s, range, {}), range});
}

void LackRole(SyntacticRole role, const RuleInput &in, Candidates *out) {
  for (TokenRange r : in.roles[role]) Delete(in.sentence, r, out);
}

// Prefers removing 的 + head so the attribute is left dangling
// (收视冠军的目标 -> 收视冠军).
void LackObject(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (TokenRange object : in.roles[SyntacticRole::kObject]) {
    TokenRange head = HeadOf(s, object);
    if (head.begin > object.begin && IsDe(s[head.begin - 1])) {
      Delete(s, {head.begin - 1, head.end}, out);
    } else {
      Delete(s, object, out);
    }
  }
}

// Only modifiers carrying a resource-listed essential word are removed.
void LackModifier(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (SyntacticRole role : {SyntacticRole::kAttribute, SyntacticRole::kAdverbial}) {
    for (TokenRange r : in.roles[role]) {
      for (size_t i = r.begin; i < r.end; ++i) {
        if (in.resources.HasFunctionWord("essential_modifier", s[i].surface)) {
          Delete(s, r, out);
          break;
        }
      }
    }
  }
}

}  // namespace

void MissingComponent(FineType fine, const RuleInput &in, Candidates *out) {
  switch (fine) {
    case FineType::kLackSubject:
      return LackRole(SyntacticRole::kSubject, in, out);
    case FineType::kLackPredicate:
      return LackRole(SyntacticRole::kPredicate, in, out);
    case FineType::kLackObject: return LackObject(in, out);
    case FineType::kLackModifier: return LackModifier(in, out);
    default: return;
  }
}

}  // namespace rules
}  // namespace clg
