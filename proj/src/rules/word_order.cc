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

// Improper Word Order: components moved or exchanged.

#include <algorithm>

#include "rules/rule_util.h"

namespace clg {
namespace rules {
namespace {

void SwapAdjacent(const TaggedSentence &s, const std::vector<TokenRange> &ranges,
                  Candidates *out) {
  for (size_t i = 0; i + 1 < ranges.size(); ++i) {
    TokenRange a = ranges[i], b = ranges[i + 1];
    if (a.end != b.begin) continue;
    out->push_back({SwapRanges(s, a, b), {a.begin, b.end}});
  }
}

std::vector<TokenRange> Sorted(std::vector<TokenRange> ranges) {
  std::sort(ranges.begin(), ranges.end(),
            [](TokenRange a, TokenRange b) { return a.begin < b.begin; });
  return ranges;
}

// 的-attribute and its head exchanged: 宝贵的意见 -> 意见的宝贵.
void AttributiveHeadWord(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  std::vector<TokenRange> phrases = in.roles[SyntacticRole::kSubject];
  for (TokenRange o : in.roles[SyntacticRole::kObject]) phrases.push_back(o);
  for (TokenRange attr : in.roles[SyntacticRole::kAttribute]) {
    for (TokenRange np : phrases) {
      if (attr.begin < np.begin || attr.end > np.end) continue;
      TokenRange head = HeadOf(s, np);
      if (head.begin != attr.end) continue;
      TokenRange body{attr.begin, attr.end - 1};  // without 的
      std::vector<Word> swapped = Slice(s, head);
      swapped.push_back({s[attr.end - 1].surface, s[attr.end - 1].tag});
      auto mod = Slice(s, body);
      swapped.insert(swapped.end(), mod.begin(), mod.end());
      out->push_back({ReplaceRange(s, {attr.begin, head.end}, swapped),
                      {attr.begin, head.end}});
    }
  }
}

// Preposition phrase out of place. A phrase preceded by a subject chunk
// trades places with it (请你不要把这件事放在心上 -> 请把这件事你不要放在心上);
// otherwise it moves behind its verb.
void Prepositions(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (size_t a = 0; a < s.size(); ++a) {
    if (s[a].tag != PosTag::kAdp) continue;
    TokenRange clause = ClauseOf(s, a);
    size_t v = a + 1;
    while (v < clause.end && s[v].tag != PosTag::kVerb &&
           s[v].tag != PosTag::kAdv && s[v].tag != PosTag::kAdp)
      ++v;
    if (v == a + 1 || v >= clause.end || s[v].tag != PosTag::kVerb) continue;
    TokenRange phrase{a, v};

    size_t c = a;
    while (c > clause.begin &&
           (s[c - 1].tag == PosTag::kAdv || s[c - 1].tag == PosTag::kX))
      --c;
    size_t nominal_end = c;
    while (c > clause.begin &&
           (IsNominal(s[c - 1].tag) || s[c - 1].tag == PosTag::kNum ||
            IsDe(s[c - 1])))
      --c;
    if (c < nominal_end) {
      out->push_back({SwapRanges(s, {c, a}, phrase), {c, v}});
    } else {
      out->push_back({MoveRange(s, phrase, v + 1), {a, v + 1}});
    }
  }
}

bool IsConnective(const RuleInput &in, const Token &t) {
  if (t.tag == PosTag::kCconj) return true;
  for (const ConnectivePair &p : in.resources.connective_pairs) {
    if (t.surface == p.first || t.surface == p.second) return true;
  }
  return false;
}

// Connective and subject exchanged at the start of a clause:
// 他不但成绩优秀 <-> 不但他成绩优秀.
void ConnectivesSubject(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!IsConnective(in, s[i])) continue;
    TokenRange clause = ClauseOf(s, i);
    TokenRange before = NounPhraseBefore(s, i, clause.begin);
    if (!before.empty() && before.begin == clause.begin) {
      out->push_back({SwapRanges(s, before, {i, i + 1}), {before.begin, i + 1}});
    }
    if (i == clause.begin) {
      TokenRange after = NounPhraseAt(s, i + 1, clause.end);
      if (!after.empty()) {
        out->push_back({SwapRanges(s, {i, i + 1}, after), {i, after.end}});
      }
    }
  }
}

// Adverb moved away from the verb it modifies. An adverb of a later verb
// jumps in front of the predicate (学校要求每名学生三个月内完成 ->
// 学校三个月内要求每名学生完成); an adverb of the predicate moves behind it.
void AssociatedWords(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  auto pred = in.roles.First(SyntacticRole::kPredicate);
  if (!pred) return;
  const size_t p = pred->begin;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].tag != PosTag::kAdv || s[i + 1].tag != PosTag::kVerb) continue;
    if (i > p) {
      out->push_back({MoveRange(s, {i, i + 1}, p), {i, i + 2}});
    } else if (i + 1 == p) {
      out->push_back({MoveRange(s, {i, i + 1}, p + 1), {i, p + 1}});
    }
  }
}

// An adverbial and an attribute exchange positions.
void AdverbialAttributives(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (TokenRange adv : in.roles[SyntacticRole::kAdverbial]) {
    if (adv.size() != 1 || s[adv.begin].tag != PosTag::kAdv) continue;
    for (TokenRange attr : in.roles[SyntacticRole::kAttribute]) {
      if (attr.begin >= adv.end) {
        out->push_back({SwapRanges(s, adv, attr), {adv.begin, attr.end}});
      } else if (attr.end <= adv.begin) {
        out->push_back({SwapRanges(s, attr, adv), {attr.begin, adv.end}});
      }
    }
  }
}

}  // namespace

void ImproperWordOrder(FineType fine, const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  switch (fine) {
    case FineType::kMultiAttributives:
      return SwapAdjacent(s, Sorted(in.roles[SyntacticRole::kAttribute]), out);
    case FineType::kMultiAdverbials:
      return SwapAdjacent(s, Sorted(in.roles[SyntacticRole::kAdverbial]), out);
    case FineType::kAttributiveHeadWord: return AttributiveHeadWord(in, out);
    case FineType::kPrepositions: return Prepositions(in, out);
    case FineType::kConnectivesSubject: return ConnectivesSubject(in, out);
    case FineType::kAssociatedWords: return AssociatedWords(in, out);
    case FineType::kAdverbialAttributives:
      return AdverbialAttributives(in, out);
    default: return;
  }
}

}  // namespace rules
}  // namespace clg
