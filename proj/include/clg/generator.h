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


#ifndef CLG_GENERATOR_H_
#define CLG_GENERATOR_H_

#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clg/resources.h"
#include "clg/tagging.h"
#include "clg/text.h"

namespace clg {

struct GenConfig {
  uint64_t seed = 0;
  std::vector<std::string> enabled_rules;  // empty: all registered rules
  int per_sentence = 1;
  int combine_max = 1;
  std::map<std::string, double> rule_weights;  // missing ids weigh 1

  // Throws a configuration error on unknown rule ids or bad bounds.
  void Validate() const;
};

inline constexpr int kMaxRuleAttempts = 5;

// Seed of the rng for the `variant`-th pair drawn from sentence `index`.
uint64_t PairSeed(uint64_t seed, uint64_t index, uint64_t variant);

std::optional<CorpusPair> GeneratePair(const TaggedSentence &sentence,
                                       const RoleSpans &roles,
                                       const RuleResources &resources,
                                       const GenConfig &config,
                                       uint64_t sentence_index,
                                       uint64_t variant = 0);

struct GenerationReport {
  uint64_t sentences_read = 0;
  uint64_t pairs_emitted = 0;
  uint64_t skipped = 0;  // sentences that yielded no pair
  uint64_t rule_applications = 0;
  std::map<std::string, uint64_t> rule_fires;

  void Record(const CorpusPair &pair);
  void Merge(const GenerationReport &other);
  // Keys in a fixed order; rule_fires lists every registered rule.
  std::string ToJson() const;
};

using PairSink = std::function<void(const CorpusPair &)>;

// Line-oriented input, processed in batches; pairs reach `sink` in input
// order whatever the worker count.
GenerationReport GenerateCorpus(std::istream &in, const Tagger &tagger,
                                const RuleResources &resources,
                                const GenConfig &config, int workers,
                                const PairSink &sink);

struct AugmentConfig {
  double p_keep = 0.70;
  double p_insert = 0.10;
  double p_replace = 0.10;
  double p_delete = 0.10;
  std::vector<std::string> word_pool;
  uint64_t seed = 0;

  void Validate() const;
};

enum class AugmentOp { kKeep, kInsert, kReplace, kDelete };

struct AugmentResult {
  CorpusPair pair;
  std::array<uint64_t, 4> op_counts{};  // indexed by AugmentOp
};

inline constexpr const char *kRandomAugmentRuleId = "random-augment";

AugmentResult RandomAugment(const TaggedSentence &sentence,
                            const AugmentConfig &config,
                            uint64_t sentence_index);

struct AugmentReport {
  uint64_t sentences_read = 0;
  std::array<uint64_t, 4> op_counts{};

  std::string ToJson() const;
};

AugmentReport AugmentCorpus(std::istream &in, const Tagger &tagger,
                            const AugmentConfig &config, int workers,
                            const PairSink &sink);

}  // namespace clg

#endif  // CLG_GENERATOR_H_
