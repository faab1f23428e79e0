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

#ifndef CLG_TEXT_H_
#define CLG_TEXT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clg {

// Universal-style part-of-speech tags. X marks auxiliary verbs.
enum class PosTag {
  kNoun, kVerb, kAdj, kAdv, kPron, kCconj, kAdp, kPart, kX, kNum, kPropn,
  kPunct, kOther,
};

inline constexpr size_t kNumPosTags = 13;

const char *PosTagName(PosTag tag);
// Canonical names only ("NOUN", "VERB", ...). Anything else is OTHER.
PosTag PosTagFromName(std::string_view name);
// Like PosTagFromName but returns nullopt for names outside the closed set.
std::optional<PosTag> ParseCanonicalPosTag(std::string_view name);

struct Token {
  std::string surface;
  PosTag tag = PosTag::kOther;
  size_t char_start = 0;  // code point offset into the sentence
  size_t char_end = 0;    // exclusive

  bool operator==(const Token &) const = default;
};

struct TaggedSentence {
  std::string text;
  std::vector<Token> tokens;

  bool empty() const { return tokens.empty(); }
  size_t size() const { return tokens.size(); }
  const Token &operator[](size_t i) const { return tokens[i]; }

  bool operator==(const TaggedSentence &) const = default;
};

// A (surface, tag) pair before offsets are assigned.
struct Word {
  std::string surface;
  PosTag tag = PosTag::kOther;

  bool operator==(const Word &) const = default;
};

// Builds a sentence by concatenating surfaces and computing offsets.
TaggedSentence BuildSentence(const std::vector<Word> &words);
std::vector<Word> WordsOf(const TaggedSentence &sentence);

enum class SyntacticRole {
  kSubject, kPredicate, kObject, kAttribute, kAdverbial, kComplement,
};

inline constexpr size_t kNumRoles = 6;
const char *SyntacticRoleName(SyntacticRole role);

enum class CoarseType {
  kStructuralConfusion,
  kImproperLogicality,
  kMissingComponent,
  kRedundantComponent,
  kImproperCollocation,
  kImproperWordOrder,
};

inline constexpr size_t kNumCoarseTypes = 6;

// The 26 fine-grained types, grouped by coarse category in declaration
// order: 3 + 5 + 4 + 2 + 5 + 7.
enum class FineType {
  kMixedPatterns, kMixedSubjects, kMixedSentences,
  kMeasureWord, kUnreasonable, kImproperNegation, kReverseHostGuest,
  kImposingCauseAndEffect,
  kLackSubject, kLackPredicate, kLackObject, kLackModifier,
  kMultiWords, kMultiMeanings,
  kSubjectPredicate, kPredicateObject, kSubjectObject, kModifierHeadWord,
  kConnectives,
  kMultiAttributives, kMultiAdverbials, kAttributiveHeadWord, kPrepositions,
  kConnectivesSubject, kAssociatedWords, kAdverbialAttributives,
};

inline constexpr size_t kNumFineTypes = 26;

const std::array<FineType, kNumFineTypes> &AllFineTypes();
const std::array<CoarseType, kNumCoarseTypes> &AllCoarseTypes();

CoarseType CoarseOf(FineType fine);
const char *CoarseTypeName(CoarseType coarse);    // "RedundantComponent"
const char *CoarseTypeLabel(CoarseType coarse);   // "Redundant Component"
const char *FineTypeName(FineType fine);          // "MultiWords"
std::optional<CoarseType> ParseCoarseType(std::string_view name);
std::optional<FineType> ParseFineType(std::string_view name);

struct ErrorType {
  CoarseType coarse;
  FineType fine;

  static ErrorType Of(FineType fine) { return {CoarseOf(fine), fine}; }
  bool operator==(const ErrorType &) const = default;
};

// A replacement of the code point range [start, end) of the incorrect text.
struct EditSpan {
  size_t start = 0;
  size_t end = 0;
  std::string replacement;

  bool operator==(const EditSpan &) const = default;
};

struct CorpusPair {
  std::string id;
  std::string incorrect;
  std::string correct;
  std::vector<EditSpan> edits;
  std::vector<ErrorType> error_types;
  std::string rule_id;
  uint64_t seed = 0;

  bool operator==(const CorpusPair &) const = default;
};

// Checks sortedness, bounds and non-overlap. Throws a validation error
// naming the offending span.
void ValidateEdits(size_t text_length, const std::vector<EditSpan> &edits);

std::string ApplyEdits(std::string_view incorrect,
                       const std::vector<EditSpan> &edits);

// Minimal-cost character edit script from `incorrect` to `correct`, with
// touching atomic operations grouped into maximal spans.
std::vector<EditSpan> DiffEdits(std::string_view incorrect,
                                std::string_view correct);

}  // namespace clg

#endif  // CLG_TEXT_H_
