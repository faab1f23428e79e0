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

#ifndef CLG_RULES_H_
#define CLG_RULES_H_

#include <optional>
#include <string>
#include <vector>

#include "clg/resources.h"
#include "clg/rng.h"
#include "clg/tagging.h"
#include "clg/text.h"

namespace clg {

struct RuleDescriptor {
  std::string rule_id;  // the fine type name
  FineType fine;
  CoarseType coarse;
  double weight = 1.0;
};

// The 26 rules, one per fine-grained error type, in taxonomy order.
const std::vector<RuleDescriptor> &RuleRegistry();
std::optional<FineType> RuleIdToFine(std::string_view rule_id);

struct RuleOutcome {
  std::string incorrect;
  std::vector<EditSpan> edits;  // on `incorrect`, restoring the original
  ErrorType fine_type;
  TokenRange match_site;        // token range of the input the rule fired on
  TaggedSentence corrupted;     // `incorrect` with propagated tags
};

// Applies one fine-grained rule. When several sites or candidates match,
// one is chosen uniformly with `rng`; a single option consumes no draw.
// Returns nullopt when the rule does not apply or would not change the text.
std::optional<RuleOutcome> ApplyRule(FineType rule, const TaggedSentence &sentence,
                                     const RoleSpans &roles,
                                     const RuleResources &resources, Rng &rng);

// Category-level entry points: try the category's fine rules in a random
// order and return the first that fires.
std::optional<RuleOutcome> CorruptStructuralConfusion(
    const TaggedSentence &sentence, const RoleSpans &roles,
    const RuleResources &resources, Rng &rng);
std::optional<RuleOutcome> CorruptImproperLogicality(
    const TaggedSentence &sentence, const RoleSpans &roles,
    const RuleResources &resources, Rng &rng);
std::optional<RuleOutcome> CorruptMissingComponent(
    const TaggedSentence &sentence, const RoleSpans &roles,
    const RuleResources &resources, Rng &rng);
std::optional<RuleOutcome> CorruptRedundantComponent(
    const TaggedSentence &sentence, const RoleSpans &roles,
    const RuleResources &resources, Rng &rng);
std::optional<RuleOutcome> CorruptImproperCollocation(
    const TaggedSentence &sentence, const RoleSpans &roles,
    const RuleResources &resources, Rng &rng);
std::optional<RuleOutcome> CorruptImproperWordOrder(
    const TaggedSentence &sentence, const RoleSpans &roles,
    const RuleResources &resources, Rng &rng);

std::optional<RuleOutcome> CorruptCategory(CoarseType coarse,
                                           const TaggedSentence &sentence,
                                           const RoleSpans &roles,
                                           const RuleResources &resources,
                                           Rng &rng);

}  // namespace clg

#endif  // CLG_RULES_H_
