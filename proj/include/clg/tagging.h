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

#ifndef CLG_TAGGING_H_
#define CLG_TAGGING_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "clg/text.h"

namespace clg {

// Maps external tagger tags (THULAC by default) onto PosTag.
class TagMapping {
 public:
  // The shipped THULAC mapping.
  static TagMapping Default();
  // Default mapping overlaid with the entries of a TSV file
  // `external<TAB>CANONICAL`.
  static TagMapping Load(const std::string &path);

  void Set(const std::string &external, PosTag tag) { map_[external] = tag; }

  // Explicit mapping entries win, then canonical names, then OTHER.
  PosTag Resolve(std::string_view tag) const;

 private:
  std::unordered_map<std::string, PosTag> map_;
};

// Surface -> tag dictionary for greedy longest-match segmentation.
class Lexicon {
 public:
  // TSV `surface<TAB>tag`, UTF-8, `#` comments. Duplicates keep the first.
  static Lexicon Load(const std::string &path, const TagMapping &mapping);

  // Returns false when the surface was already present.
  bool Add(std::string_view surface, PosTag tag);
  std::optional<PosTag> Find(std::u32string_view surface) const;

  size_t size() const { return entries_.size(); }
  size_t max_length() const { return max_length_; }

 private:
  std::unordered_map<std::u32string, PosTag> entries_;
  size_t max_length_ = 0;
};

enum class TaggerMode { kBuiltinLexicon, kPretaggedInput };

struct TaggerConfig {
  TaggerMode mode = TaggerMode::kBuiltinLexicon;
  std::string lexicon_path;
  std::string tag_mapping_path;  // empty: shipped default mapping
};

TaggedSentence SegmentAndTag(std::string_view raw, const Lexicon &lexicon);

// Parses `surface/TAG surface/TAG ...`. The tag follows the last '/'.
TaggedSentence ParsePretagged(std::string_view line,
                              const TagMapping &mapping = TagMapping::Default());

std::string SerializePretagged(const TaggedSentence &sentence);

// Configured front end. Immutable after construction.
class Tagger {
 public:
  static Tagger Create(const TaggerConfig &config);
  Tagger(TaggerMode mode, Lexicon lexicon, TagMapping mapping)
      : mode_(mode), lexicon_(std::move(lexicon)), mapping_(std::move(mapping)) {}

  // Raw text in lexicon mode, `surface/TAG` items in pretagged mode.
  TaggedSentence Tag(std::string_view line) const;

  TaggerMode mode() const { return mode_; }
  const Lexicon &lexicon() const { return lexicon_; }
  const TagMapping &mapping() const { return mapping_; }

 private:
  TaggerMode mode_;
  Lexicon lexicon_;
  TagMapping mapping_;
};

// Half-open token index range.
struct TokenRange {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return begin >= end; }
  bool Contains(size_t i) const { return i >= begin && i < end; }
  bool operator==(const TokenRange &) const = default;
};

struct RoleSpans {
  std::array<std::vector<TokenRange>, kNumRoles> ranges;

  const std::vector<TokenRange> &operator[](SyntacticRole role) const {
    return ranges[static_cast<size_t>(role)];
  }
  std::vector<TokenRange> &operator[](SyntacticRole role) {
    return ranges[static_cast<size_t>(role)];
  }
  std::optional<TokenRange> First(SyntacticRole role) const {
    const auto &r = (*this)[role];
    if (r.empty()) return std::nullopt;
    return r.front();
  }
  bool operator==(const RoleSpans &) const = default;
};

// Shallow component identification:
//  - Predicate: first VERB not directly attached to 的 on either side.
//  - Subject / Object: noun phrase before / after the predicate, including
//    determiners and 的-modifiers.
//  - Attribute: 的-terminated modifier segments nested in Subject/Object.
//  - Adverbial: ADV tokens and ADP-led phrases right before the predicate.
//  - Complement: 得-led phrase right after the predicate.
RoleSpans IdentifyRoles(const TaggedSentence &sentence);

// Helpers shared with the rule engine.
bool IsNominal(PosTag tag);
bool IsDe(const Token &token);
bool IsAspectMarker(const Token &token);
// Clause containing token i; clauses are delimited by PUNCT tokens.
TokenRange ClauseOf(const TaggedSentence &sentence, size_t i);
// Trailing run of nominal tokens of a noun phrase range.
TokenRange HeadOf(const TaggedSentence &sentence, TokenRange phrase);
// Noun phrase ending right before `end`, not crossing `limit`.
TokenRange NounPhraseBefore(const TaggedSentence &sentence, size_t end,
                            size_t limit);
// Noun phrase starting at `begin`, not crossing `limit`.
TokenRange NounPhraseAt(const TaggedSentence &sentence, size_t begin,
                        size_t limit);

}  // namespace clg

#endif  // CLG_TAGGING_H_
