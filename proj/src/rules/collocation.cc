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

// Improper Collocation: one member of a known collocation is replaced by a
// word that does not collocate with the other.

#include <utility>

#include "rules/rule_util.h"

namespace clg {
namespace rules {
namespace {

using RoleSet = std::vector<SyntacticRole>;

// Role pairs that the two collocation members must occupy, in either order.
std::pair<RoleSet, RoleSet> RolesFor(FineType fine) {
  using R = SyntacticRole;
  switch (fine) {
    case FineType::kSubjectPredicate: return {{R::kSubject}, {R::kPredicate}};
    case FineType::kPredicateObject: return {{R::kPredicate}, {R::kObject}};
    case FineType::kSubjectObject: return {{R::kSubject}, {R::kObject}};
    default:
      return {{R::kAttribute, R::kAdverbial},
              {R::kSubject, R::kObject, R::kPredicate}};
  }
}

bool InRoles(const RoleSpans &roles, const RoleSet &set, size_t i) {
  for (SyntacticRole r : set) {
    if (InAny(roles[r], i)) return true;
  }
  return false;
}

void Collocation(FineType fine, const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  const auto [first, second] = RolesFor(fine);
  for (const CollocationEntry &e : in.resources.collocations) {
    if (e.fine != fine) continue;
    for (size_t t : FindToken(s, e.target)) {
      bool matched = false;
      for (size_t p : FindToken(s, e.partner)) {
        if (p == t) continue;
        const RoleSpans &r = in.roles;
        if ((InRoles(r, first, t) && InRoles(r, second, p)) ||
            (InRoles(r, second, t) && InRoles(r, first, p))) {
          matched = true;
          break;
        }
      }
      if (!matched) continue;
      for (const std::string &w : e.wrong) {
        out->push_back({ReplaceRange(s, {t, t + 1}, {{w, s[t].tag}}), {t, t + 1}});
      }
    }
  }
}

// Correlative connectives with a mismatched partner: 不但…所以.
void Connectives(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (const ConnectivePair &pair : in.resources.connective_pairs) {
    auto firsts = FindToken(s, pair.first);
    if (firsts.empty()) continue;
    for (size_t j : FindToken(s, pair.second)) {
      if (j <= firsts.front()) continue;
      for (const std::string &w : pair.wrong) {
        out->push_back({ReplaceRange(s, {j, j + 1}, {{w, s[j].tag}}),
                        {firsts.front(), j + 1}});
      }
    }
  }
}

}  // namespace

void ImproperCollocation(FineType fine, const RuleInput &in, Candidates *out) {
  switch (fine) {
    case FineType::kSubjectPredicate:
    case FineType::kPredicateObject:
    case FineType::kSubjectObject:
    case FineType::kModifierHeadWord:
      return Collocation(fine, in, out);
    case FineType::kConnectives: return Connectives(in, out);
    default: return;
  }
}

}  // namespace rules
}  // namespace clg
