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

#include "rules/rule_util.h"

namespace clg {
namespace rules {

std::vector<Word> Slice(const TaggedSentence &s, TokenRange range) {
  std::vector<Word> out;
  for (size_t i = range.begin; i < range.end; ++i)
    out.push_back({s[i].surface, s[i].tag});
  return out;
}

std::string TextOf(const TaggedSentence &s, TokenRange range) {
  std::string out;
  for (size_t i = range.begin; i < range.end; ++i) out += s[i].surface;
  return out;
}

std::vector<Word> ReplaceRange(const TaggedSentence &s, TokenRange range,
                               const std::vector<Word> &with) {
  std::vector<Word> out = Slice(s, {0, range.begin});
  out.insert(out.end(), with.begin(), with.end());
  auto tail = Slice(s, {range.end, s.size()});
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<Word> InsertAt(const TaggedSentence &s, size_t at,
                           const std::vector<Word> &words) {
  return ReplaceRange(s, {at, at}, words);
}

std::vector<Word> SwapRanges(const TaggedSentence &s, TokenRange a,
                             TokenRange b) {
  std::vector<Word> out = Slice(s, {0, a.begin});
  auto append = [&](TokenRange r) {
    auto w = Slice(s, r);
    out.insert(out.end(), w.begin(), w.end());
  };
  append(b);
  append({a.end, b.begin});
  append(a);
  append({b.end, s.size()});
  return out;
}

std::vector<Word> MoveRange(const TaggedSentence &s, TokenRange range,
                            size_t to) {
  if (to < range.begin) return SwapRanges(s, {to, range.begin}, range);
  return SwapRanges(s, range, {range.end, to});
}

std::vector<TokenRange> FindText(const TaggedSentence &s,
                                 std::string_view text) {
  std::vector<TokenRange> out;
  if (text.empty()) return out;
  for (size_t b = 0; b < s.size(); ++b) {
    std::string acc;
    for (size_t e = b; e < s.size() && acc.size() < text.size(); ++e) {
      acc += s[e].surface;
      if (acc == text) {
        out.push_back({b, e + 1});
        break;
      }
      if (text.compare(0, acc.size(), acc) != 0) break;
    }
  }
  return out;
}

std::vector<size_t> FindToken(const TaggedSentence &s, std::string_view word) {
  std::vector<size_t> out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].surface == word) out.push_back(i);
  }
  return out;
}

bool InAny(const std::vector<TokenRange> &ranges, size_t i) {
  for (const TokenRange &r : ranges) {
    if (r.Contains(i)) return true;
  }
  return false;
}

std::optional<size_t> LastContentToken(const TaggedSentence &s) {
  for (size_t i = s.size(); i > 0; --i) {
    if (s[i - 1].tag != PosTag::kPunct) return i - 1;
  }
  return std::nullopt;
}

}  // namespace rules
}  // namespace clg
