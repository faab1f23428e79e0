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

// Improper Logicality: resource patterns that break formal or causal logic.

#include <algorithm>

#include "clg/strings.h"
#include "clg/utf8.h"
#include "rules/rule_util.h"

namespace clg {
namespace rules {
namespace {

bool HasNumeral(const std::string &surface) {
  static const std::u32string kDigits = U"0123456789０１２３４５６７８９"
                                        U"一二三四五六七八九十百千万亿两零";
  for (char32_t c : DecodeUtf8(surface)) {
    if (kDigits.find(c) != std::u32string::npos) return true;
  }
  return false;
}

// Maximal NUM runs that contain an actual numeral.
std::vector<TokenRange> NumberRuns(const TaggedSentence &s) {
  std::vector<TokenRange> runs;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i].tag != PosTag::kNum) {
      ++i;
      continue;
    }
    size_t j = i;
    bool numeral = false;
    while (j < s.size() && s[j].tag == PosTag::kNum) {
      numeral = numeral || HasNumeral(s[j].surface);
      ++j;
    }
    if (numeral) runs.push_back({i, j});
    i = j;
  }
  return runs;
}

// An approximate quantifier next to an exact number: 共有大约50人.
void MeasureWord(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  auto runs = NumberRuns(s);
  for (const LogicPatternEntry &e : in.resources.logic_patterns) {
    if (e.fine != FineType::kMeasureWord) continue;
    for (TokenRange run : runs) {
      size_t at = e.templ == "before" ? run.begin : run.end;
      out->push_back({InsertAt(s, at, {{e.match, PosTag::kAdv}}), run});
    }
  }
}

// A subsumed concept coordinated with its superset: 各界人士、沿途村庄百姓.
void Unreasonable(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (const LogicPatternEntry &e : in.resources.logic_patterns) {
    if (e.fine != FineType::kUnreasonable) continue;
    for (TokenRange site : FindText(s, e.match)) {
      out->push_back({InsertAt(s, site.end,
                               {{"、", PosTag::kPunct}, {e.templ, PosTag::kNoun}}),
                      site});
    }
  }
}

// A negator inside the scope of a negative-meaning verb: 防止事故不发生.
void ImproperNegation(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (const LogicPatternEntry &e : in.resources.logic_patterns) {
    if (e.fine != FineType::kImproperNegation) continue;
    for (size_t i : FindToken(s, e.match)) {
      TokenRange clause = ClauseOf(s, i);
      size_t at = i + 1;
      for (size_t j = i + 1; j < clause.end; ++j) {
        if (s[j].tag == PosTag::kVerb) {
          at = j;
          break;
        }
      }
      out->push_back({InsertAt(s, at, {{e.templ, PosTag::kAdv}}), {i, i + 1}});
    }
  }
}

// Host and guest exchanged around a relational verb: 歌曲深受年轻人喜爱.
void ReverseHostGuest(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (const LogicPatternEntry &e : in.resources.logic_patterns) {
    if (e.fine != FineType::kReverseHostGuest) continue;
    for (size_t v : FindToken(s, e.match)) {
      TokenRange clause = ClauseOf(s, v);
      TokenRange host = HeadOf(s, NounPhraseBefore(s, v, clause.begin));
      size_t g = v + 1;
      while (g < clause.end && IsAspectMarker(s[g])) ++g;
      size_t ge = g;
      while (ge < clause.end && IsNominal(s[ge].tag)) ++ge;
      TokenRange guest{g, ge};
      if (host.empty() || guest.empty()) continue;
      if (TextOf(s, host) == TextOf(s, guest)) continue;
      out->push_back({SwapRanges(s, host, guest), {host.begin, guest.end}});
    }
  }
}

// Cause and effect connectives forced onto clauses that are not causally
// related: 因为他喜欢读书，所以也喜欢运动.
void ImposingCauseAndEffect(const RuleInput &in, Candidates *out) {
  const TaggedSentence &s = in.sentence;
  for (const LogicPatternEntry &e : in.resources.logic_patterns) {
    if (e.fine != FineType::kImposingCauseAndEffect) continue;
    auto parts = Split(e.templ, '|');
    if (!FindToken(s, parts[0]).empty() || !FindToken(s, parts[1]).empty())
      continue;
    for (size_t i : FindToken(s, e.match)) {
      TokenRange clause = ClauseOf(s, i);
      // clause.begin - 1 is the delimiter between the two clauses.
      if (clause.begin < 2) continue;
      TokenRange previous = ClauseOf(s, clause.begin - 2);
      if (previous.empty()) continue;
      std::vector<Word> words = Slice(s, {0, previous.begin});
      words.push_back({parts[0], PosTag::kCconj});
      auto mid = Slice(s, {previous.begin, clause.begin});
      words.insert(words.end(), mid.begin(), mid.end());
      words.push_back({parts[1], PosTag::kCconj});
      auto tail = Slice(s, {clause.begin, s.size()});
      words.insert(words.end(), tail.begin(), tail.end());
      out->push_back({std::move(words), {i, i + 1}});
    }
  }
}

}  // namespace

void ImproperLogicality(FineType fine, const RuleInput &in, Candidates *out) {
  switch (fine) {
    case FineType::kMeasureWord: return MeasureWord(in, out);
    case FineType::kUnreasonable: return Unreasonable(in, out);
    case FineType::kImproperNegation: return ImproperNegation(in, out);
    case FineType::kReverseHostGuest: return ReverseHostGuest(in, out);
    case FineType::kImposingCauseAndEffect:
      return ImposingCauseAndEffect(in, out);
    default: return;
  }
}

}  // namespace rules
}  // namespace clg
