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


#include "clg/rules.h"

#include <utility>

#include "rules/rule_util.h"

namespace clg {
namespace {

using rules::Candidates;
using rules::RuleInput;

void Collect(FineType fine, const RuleInput &in, Candidates *out) {
  switch (CoarseOf(fine)) {
    case CoarseType::kStructuralConfusion:
      return rules::StructuralConfusion(fine, in, out);
    case CoarseType::kImproperLogicality:
      return rules::ImproperLogicality(fine, in, out);
    case CoarseType::kMissingComponent:
      return rules::MissingComponent(fine, in, out);
    case CoarseType::kRedundantComponent:
      return rules::RedundantComponent(fine, in, out);
    case CoarseType::kImproperCollocation:
      return rules::ImproperCollocation(fine, in, out);
    case CoarseType::kImproperWordOrder:
      return rules::ImproperWordOrder(fine, in, out);
  }
}

}  // namespace

const std::vector<RuleDescriptor> &RuleRegistry() {
  static const std::vector<RuleDescriptor> registry = [] {
    std::vector<RuleDescriptor> r;
    for (FineType fine : AllFineTypes()) {
      r.push_back({FineTypeName(fine), fine, CoarseOf(fine), 1.0});
    }
    return r;
  }();
  return registry;
}

std::optional<FineType> RuleIdToFine(std::string_view rule_id) {
  return ParseFineType(rule_id);
}

std::optional<RuleOutcome> ApplyRule(FineType rule, const TaggedSentence &sentence,
                                     const RoleSpans &roles,
                                     const RuleResources &resources, Rng &rng) {
  if (sentence.empty()) return std::nullopt;
  RuleInput in{sentence, roles, resources};
  Candidates all;
  Collect(rule, in, &all);
  Candidates changed;
  for (auto &c : all) {
    std::string text;
    for (const Word &w : c.words) text += w.surface;
    if (text != sentence.text) changed.push_back(std::move(c));
  }
  if (changed.empty()) return std::nullopt;
  rules::Candidate &pick = changed[rng.Index(changed.size())];
  RuleOutcome outcome;
  outcome.corrupted = BuildSentence(pick.words);
  outcome.incorrect = outcome.corrupted.text;
  outcome.edits = DiffEdits(outcome.incorrect, sentence.text);
  outcome.fine_type = ErrorType::Of(rule);
  outcome.match_site = pick.site;
  return outcome;
}

std::optional<RuleOutcome> CorruptCategory(CoarseType coarse,
                                           const TaggedSentence &sentence,
                                           const RoleSpans &roles,
                                           const RuleResources &resources,
                                           Rng &rng) {
  std::vector<FineType> fines;
  for (FineType f : AllFineTypes()) {
    if (CoarseOf(f) == coarse) fines.push_back(f);
  }
  // Fisher-Yates with the caller's stream; the first type that fires wins.
  for (size_t i = fines.size(); i > 1; --i) {
    std::swap(fines[i - 1], fines[rng.Index(i)]);
  }
  for (FineType f : fines) {
    if (auto out = ApplyRule(f, sentence, roles, resources, rng)) return out;
  }
  return std::nullopt;
}

#define CLG_CORRUPT(Name)                                                   \
  std::optional<RuleOutcome> Corrupt##Name(                                 \
      const TaggedSentence &sentence, const RoleSpans &roles,               \
      const RuleResources &resources, Rng &rng) {                           \
    return CorruptCategory(CoarseType::k##Name, sentence, roles, resources, \
                           rng);                                            \
  }

CLG_CORRUPT(StructuralConfusion)
CLG_CORRUPT(ImproperLogicality)
CLG_CORRUPT(MissingComponent)
CLG_CORRUPT(RedundantComponent)
CLG_CORRUPT(ImproperCollocation)
CLG_CORRUPT(ImproperWordOrder)

#undef CLG_CORRUPT

}  // namespace clg
