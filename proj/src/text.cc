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

#include "clg/text.h"

#include <algorithm>

#include "clg/error.h"
#include "clg/utf8.h"

namespace clg {
namespace {

constexpr std::array<const char *, kNumPosTags> kPosTagNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "CCONJ", "ADP",
    "PART", "X",    "NUM", "PROPN", "PUNCT", "OTHER",
};

struct FineInfo {
  FineType fine;
  CoarseType coarse;
  const char *name;
};

constexpr std::array<FineInfo, kNumFineTypes> kFineInfo = {{
    {FineType::kMixedPatterns, CoarseType::kStructuralConfusion,
     "MixedPatterns"},
    {FineType::kMixedSubjects, CoarseType::kStructuralConfusion,
     "MixedSubjects"},
    {FineType::kMixedSentences, CoarseType::kStructuralConfusion,
     "MixedSentences"},
    {FineType::kMeasureWord, CoarseType::kImproperLogicality, "MeasureWord"},
    {FineType::kUnreasonable, CoarseType::kImproperLogicality,
     "Unreasonable"},
    {FineType::kImproperNegation, CoarseType::kImproperLogicality,
     "ImproperNegation"},
    {FineType::kReverseHostGuest, CoarseType::kImproperLogicality,
     "ReverseHostGuest"},
    {FineType::kImposingCauseAndEffect, CoarseType::kImproperLogicality,
     "ImposingCauseAndEffect"},
    {FineType::kLackSubject, CoarseType::kMissingComponent, "LackSubject"},
    {FineType::kLackPredicate, CoarseType::kMissingComponent,
     "LackPredicate"},
    {FineType::kLackObject, CoarseType::kMissingComponent, "LackObject"},
    {FineType::kLackModifier, CoarseType::kMissingComponent, "LackModifier"},
    {FineType::kMultiWords, CoarseType::kRedundantComponent, "MultiWords"},
    {FineType::kMultiMeanings, CoarseType::kRedundantComponent,
     "MultiMeanings"},
    {FineType::kSubjectPredicate, CoarseType::kImproperCollocation,
     "SubjectPredicate"},
    {FineType::kPredicateObject, CoarseType::kImproperCollocation,
     "PredicateObject"},
    {FineType::kSubjectObject, CoarseType::kImproperCollocation,
     "SubjectObject"},
    {FineType::kModifierHeadWord, CoarseType::kImproperCollocation,
     "ModifierHeadWord"},
    {FineType::kConnectives, CoarseType::kImproperCollocation, "Connectives"},
    {FineType::kMultiAttributives, CoarseType::kImproperWordOrder,
     "MultiAttributives"},
    {FineType::kMultiAdverbials, CoarseType::kImproperWordOrder,
     "MultiAdverbials"},
    {FineType::kAttributiveHeadWord, CoarseType::kImproperWordOrder,
     "AttributiveHeadWord"},
    {FineType::kPrepositions, CoarseType::kImproperWordOrder, "Prepositions"},
    {FineType::kConnectivesSubject, CoarseType::kImproperWordOrder,
     "ConnectivesSubject"},
    {FineType::kAssociatedWords, CoarseType::kImproperWordOrder,
     "AssociatedWords"},
    {FineType::kAdverbialAttributives, CoarseType::kImproperWordOrder,
     "AdverbialAttributives"},
}};

constexpr std::array<const char *, kNumCoarseTypes> kCoarseNames = {
    "StructuralConfusion", "ImproperLogicality", "MissingComponent",
    "RedundantComponent",  "ImproperCollocation", "ImproperWordOrder",
};

constexpr std::array<const char *, kNumCoarseTypes> kCoarseLabels = {
    "Structural Confusion", "Improper Logicality", "Missing Component",
    "Redundant Component",  "Improper Collocation", "Improper Word Order",
};

std::string DescribeSpan(const EditSpan &e) {
  return "{start:" + std::to_string(e.start) + ", end:" +
         std::to_string(e.end) + ", replacement:\"" + e.replacement + "\"}";
}

}  // namespace

const char *PosTagName(PosTag tag) {
  return kPosTagNames[static_cast<size_t>(tag)];
}

std::optional<PosTag> ParseCanonicalPosTag(std::string_view name) {
  for (size_t i = 0; i < kNumPosTags; ++i) {
    if (name == kPosTagNames[i]) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

PosTag PosTagFromName(std::string_view name) {
  return ParseCanonicalPosTag(name).value_or(PosTag::kOther);
}

TaggedSentence BuildSentence(const std::vector<Word> &words) {
  TaggedSentence s;
  size_t offset = 0;
  s.tokens.reserve(words.size());
  for (const Word &w : words) {
    size_t len = Utf8Length(w.surface);
    s.text += w.surface;
    s.tokens.push_back({w.surface, w.tag, offset, offset + len});
    offset += len;
  }
  return s;
}

std::vector<Word> WordsOf(const TaggedSentence &sentence) {
  std::vector<Word> words;
  words.reserve(sentence.tokens.size());
  for (const Token &t : sentence.tokens) words.push_back({t.surface, t.tag});
  return words;
}

const char *SyntacticRoleName(SyntacticRole role) {
  static constexpr std::array<const char *, kNumRoles> kNames = {
      "Subject", "Predicate", "Object", "Attribute", "Adverbial", "Complement",
  };
  return kNames[static_cast<size_t>(role)];
}

const std::array<FineType, kNumFineTypes> &AllFineTypes() {
  static const std::array<FineType, kNumFineTypes> all = [] {
    std::array<FineType, kNumFineTypes> a{};
    for (size_t i = 0; i < kNumFineTypes; ++i) a[i] = kFineInfo[i].fine;
    return a;
  }();
  return all;
}

const std::array<CoarseType, kNumCoarseTypes> &AllCoarseTypes() {
  static const std::array<CoarseType, kNumCoarseTypes> all = {
      CoarseType::kStructuralConfusion, CoarseType::kImproperLogicality,
      CoarseType::kMissingComponent,    CoarseType::kRedundantComponent,
      CoarseType::kImproperCollocation, CoarseType::kImproperWordOrder,
  };
  return all;
}

CoarseType CoarseOf(FineType fine) {
  return kFineInfo[static_cast<size_t>(fine)].coarse;
}

const char *CoarseTypeName(CoarseType coarse) {
  return kCoarseNames[static_cast<size_t>(coarse)];
}

const char *CoarseTypeLabel(CoarseType coarse) {
  return kCoarseLabels[static_cast<size_t>(coarse)];
}

const char *FineTypeName(FineType fine) {
  return kFineInfo[static_cast<size_t>(fine)].name;
}

std::optional<CoarseType> ParseCoarseType(std::string_view name) {
  for (size_t i = 0; i < kNumCoarseTypes; ++i) {
    if (name == kCoarseNames[i]) return static_cast<CoarseType>(i);
  }
  return std::nullopt;
}

std::optional<FineType> ParseFineType(std::string_view name) {
  for (const FineInfo &info : kFineInfo) {
    if (name == info.name) return info.fine;
  }
  return std::nullopt;
}

void ValidateEdits(size_t text_length, const std::vector<EditSpan> &edits) {
  size_t prev_end = 0;
  for (size_t i = 0; i < edits.size(); ++i) {
    const EditSpan &e = edits[i];
    if (e.start > e.end || e.end > text_length) {
      throw ValidationError("edit " + std::to_string(i) + " " +
                            DescribeSpan(e) + " is out of bounds for text of " +
                            std::to_string(text_length) + " characters");
    }
    if (i > 0 && e.start < prev_end) {
      throw ValidationError("edit " + std::to_string(i) + " " +
                            DescribeSpan(e) +
                            " overlaps or precedes the previous edit");
    }
    // Two insertions at the same offset have no defined order.
    if (i > 0 && e.start == e.end && edits[i - 1].start == e.start &&
        edits[i - 1].end == e.start) {
      throw ValidationError("edit " + std::to_string(i) + " " +
                            DescribeSpan(e) +
                            " is a second insertion at the same offset");
    }
    prev_end = e.end;
  }
}

std::string ApplyEdits(std::string_view incorrect,
                       const std::vector<EditSpan> &edits) {
  std::u32string text = DecodeUtf8(incorrect);
  ValidateEdits(text.size(), edits);
  // Right to left so earlier offsets stay valid.
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
    text.replace(it->start, it->end - it->start, DecodeUtf8(it->replacement));
  }
  return EncodeUtf8(text);
}

std::vector<EditSpan> DiffEdits(std::string_view incorrect,
                                std::string_view correct) {
  const std::u32string a = DecodeUtf8(incorrect);
  const std::u32string b = DecodeUtf8(correct);
  const size_t n = a.size();
  const size_t m = b.size();

  // Trim the common prefix and suffix; the script only concerns the middle.
  size_t prefix = 0;
  while (prefix < n && prefix < m && a[prefix] == b[prefix]) ++prefix;
  size_t suffix = 0;
  while (suffix < n - prefix && suffix < m - prefix &&
         a[n - 1 - suffix] == b[m - 1 - suffix]) {
    ++suffix;
  }
  const size_t rn = n - prefix - suffix;
  const size_t rm = m - prefix - suffix;

  std::vector<uint32_t> dist((rn + 1) * (rm + 1));
  auto at = [&](size_t i, size_t j) -> uint32_t & {
    return dist[i * (rm + 1) + j];
  };
  for (size_t i = 0; i <= rn; ++i) at(i, 0) = static_cast<uint32_t>(i);
  for (size_t j = 0; j <= rm; ++j) at(0, j) = static_cast<uint32_t>(j);
  for (size_t i = 1; i <= rn; ++i) {
    for (size_t j = 1; j <= rm; ++j) {
      uint32_t sub = at(i - 1, j - 1) +
                     (a[prefix + i - 1] == b[prefix + j - 1] ? 0u : 1u);
      at(i, j) = std::min({sub, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  // Backtrace; true marks an aligned identical pair.
  struct Step {
    bool match;
    bool consumes_a;
    bool consumes_b;
  };
  std::vector<Step> steps;
  size_t i = rn, j = rm;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && a[prefix + i - 1] == b[prefix + j - 1] &&
        at(i, j) == at(i - 1, j - 1)) {
      steps.push_back({true, true, true});
      --i, --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1) {
      steps.push_back({false, true, true});
      --i, --j;
    } else if (j > 0 && at(i, j) == at(i, j - 1) + 1) {
      steps.push_back({false, false, true});
      --j;
    } else {
      steps.push_back({false, true, false});
      --i;
    }
  }
  std::reverse(steps.begin(), steps.end());

  std::vector<EditSpan> edits;
  size_t pa = prefix, pb = prefix;
  bool open = false;
  for (const Step &s : steps) {
    if (s.match) {
      open = false;
    } else {
      if (!open) {
        edits.push_back({pa, pa, ""});
        open = true;
      }
      if (s.consumes_a) edits.back().end = pa + 1;
      if (s.consumes_b) AppendUtf8(b[pb], &edits.back().replacement);
    }
    if (s.consumes_a) ++pa;
    if (s.consumes_b) ++pb;
  }
  return edits;
}

}  // namespace clg
