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


#include "clg/generator.h"

#include <cmath>
#include <utility>

#include "clg/error.h"
#include "clg/parallel.h"
#include "clg/rng.h"
#include "clg/rules.h"
#include "clg/strings.h"
#include "json.hpp"

namespace clg {
namespace {

constexpr size_t kBatchLines = 4096;

// Reads `in` in batches, maps each line in parallel, hands results to
// `emit` in input order.
template <typename Result, typename Map, typename Emit>
void ForEachLineBatch(std::istream &in, int workers, Map map, Emit emit) {
  uint64_t next_index = 0;
  std::vector<std::string> lines;
  std::string line;
  bool more = true;
  while (more) {
    lines.clear();
    while (lines.size() < kBatchLines && (more = static_cast<bool>(
                                              std::getline(in, line)))) {
      ChompCr(&line);
      lines.push_back(line);
    }
    if (in.bad()) throw IoError("read failed after line " +
                                std::to_string(next_index));
    std::vector<Result> results(lines.size());
    const uint64_t base = next_index;
    ParallelFor(lines.size(), workers, [&](size_t i) {
      try {
        results[i] = map(lines[i], base + i);
      } catch (const Error &e) {
        throw Error(e.kind(),
                    "line " + std::to_string(base + i + 1) + ": " + e.what());
      }
    });
    for (Result &r : results) emit(r);
    next_index += lines.size();
  }
}

std::vector<const RuleDescriptor *> EnabledRules(const GenConfig &config) {
  std::vector<const RuleDescriptor *> out;
  for (const RuleDescriptor &d : RuleRegistry()) {
    if (!config.enabled_rules.empty()) {
      bool on = false;
      for (const auto &id : config.enabled_rules) on |= id == d.rule_id;
      if (!on) continue;
    }
    out.push_back(&d);
  }
  return out;
}

double WeightOf(const GenConfig &config, const RuleDescriptor &d) {
  auto it = config.rule_weights.find(d.rule_id);
  return it == config.rule_weights.end() ? d.weight : it->second;
}

}  // namespace

void GenConfig::Validate() const {
  if (combine_max < 1) throw ConfigError("combine_max must be at least 1");
  if (per_sentence < 1) throw ConfigError("per_sentence must be at least 1");
  for (const auto &id : enabled_rules) {
    if (!RuleIdToFine(id)) throw ConfigError("unknown rule id: " + id);
  }
  for (const auto &[id, w] : rule_weights) {
    if (!RuleIdToFine(id)) throw ConfigError("unknown rule id: " + id);
    if (!(w >= 0) || !std::isfinite(w)) {
      throw ConfigError("rule weight must be finite and >= 0: " + id);
    }
  }
}

uint64_t PairSeed(uint64_t seed, uint64_t index, uint64_t variant) {
  uint64_t s = DeriveSeed(seed, index);
  return variant == 0 ? s : DeriveSeed(s, variant);
}

std::optional<CorpusPair> GeneratePair(const TaggedSentence &sentence,
                                       const RoleSpans &roles,
                                       const RuleResources &resources,
                                       const GenConfig &config,
                                       uint64_t sentence_index,
                                       uint64_t variant) {
  if (sentence.empty()) return std::nullopt;
  const uint64_t seed = PairSeed(config.seed, sentence_index, variant);
  Rng rng(seed);

  std::vector<const RuleDescriptor *> pool;
  std::vector<double> weights;
  for (const RuleDescriptor *d : EnabledRules(config)) {
    double w = WeightOf(config, *d);
    if (w <= 0) continue;
    pool.push_back(d);
    weights.push_back(w);
  }

  TaggedSentence current = sentence;
  RoleSpans current_roles = roles;
  std::vector<ErrorType> types;
  std::vector<std::string> ids;
  for (int slot = 0; slot < config.combine_max && !pool.empty(); ++slot) {
    for (int attempt = 0; attempt < kMaxRuleAttempts && !pool.empty();
         ++attempt) {
      double total = 0;
      for (double w : weights) total += w;
      double u = rng.Uniform() * total;
      size_t k = 0;
      while (k + 1 < pool.size() && u >= weights[k]) u -= weights[k++];
      const RuleDescriptor *rule = pool[k];
      pool.erase(pool.begin() + k);
      weights.erase(weights.begin() + k);

      auto outcome =
          ApplyRule(rule->fine, current, current_roles, resources, rng);
      // A later rule that undoes an earlier one leaves no error.
      if (!outcome || outcome->incorrect == sentence.text) continue;
      current = std::move(outcome->corrupted);
      current_roles = IdentifyRoles(current);
      types.push_back(outcome->fine_type);
      ids.push_back(rule->rule_id);
      break;
    }
    if (types.size() < static_cast<size_t>(slot + 1)) break;
  }
  if (types.empty()) return std::nullopt;

  CorpusPair pair;
  pair.id = std::to_string(sentence_index);
  if (config.per_sentence > 1) pair.id += "-" + std::to_string(variant);
  pair.incorrect = current.text;
  pair.correct = sentence.text;
  pair.edits = DiffEdits(pair.incorrect, pair.correct);
  pair.error_types = std::move(types);
  pair.rule_id = Join(ids, "+");
  pair.seed = seed;
  return pair;
}

void GenerationReport::Record(const CorpusPair &pair) {
  ++pairs_emitted;
  for (const ErrorType &t : pair.error_types) {
    ++rule_fires[FineTypeName(t.fine)];
    ++rule_applications;
  }
}

void GenerationReport::Merge(const GenerationReport &other) {
  sentences_read += other.sentences_read;
  pairs_emitted += other.pairs_emitted;
  skipped += other.skipped;
  rule_applications += other.rule_applications;
  for (const auto &[id, n] : other.rule_fires) rule_fires[id] += n;
}

std::string GenerationReport::ToJson() const {
  nlohmann::ordered_json j;
  j["sentences_read"] = sentences_read;
  j["pairs_emitted"] = pairs_emitted;
  j["skipped"] = skipped;
  j["rule_applications"] = rule_applications;
  nlohmann::ordered_json fires = nlohmann::ordered_json::object();
  for (const RuleDescriptor &d : RuleRegistry()) {
    auto it = rule_fires.find(d.rule_id);
    fires[d.rule_id] = it == rule_fires.end() ? 0 : it->second;
  }
  j["rule_fires"] = std::move(fires);
  return j.dump(2);
}

GenerationReport GenerateCorpus(std::istream &in, const Tagger &tagger,
                                const RuleResources &resources,
                                const GenConfig &config, int workers,
                                const PairSink &sink) {
  config.Validate();
  GenerationReport report;
  using Pairs = std::vector<CorpusPair>;
  ForEachLineBatch<Pairs>(
      in, workers,
      [&](const std::string &line, uint64_t index) {
        Pairs pairs;
        TaggedSentence s = tagger.Tag(line);
        if (s.empty()) return pairs;
        RoleSpans roles = IdentifyRoles(s);
        for (int k = 0; k < config.per_sentence; ++k) {
          if (auto p = GeneratePair(s, roles, resources, config, index, k)) {
            pairs.push_back(std::move(*p));
          }
        }
        return pairs;
      },
      [&](const Pairs &pairs) {
        ++report.sentences_read;
        if (pairs.empty()) ++report.skipped;
        for (const CorpusPair &p : pairs) {
          report.Record(p);
          sink(p);
        }
      });
  return report;
}

void AugmentConfig::Validate() const {
  for (double p : {p_keep, p_insert, p_replace, p_delete}) {
    if (!(p >= 0 && p <= 1)) {
      throw ConfigError("augment probabilities must lie in [0, 1]");
    }
  }
  if (std::abs(p_keep + p_insert + p_replace + p_delete - 1.0) > 1e-9) {
    throw ConfigError("augment probabilities must sum to 1");
  }
  if (word_pool.empty() && (p_insert > 0 || p_replace > 0)) {
    throw ConfigError("empty word pool with nonzero insert/replace probability");
  }
}

AugmentResult RandomAugment(const TaggedSentence &sentence,
                            const AugmentConfig &config,
                            uint64_t sentence_index) {
  config.Validate();
  const uint64_t seed = DeriveSeed(config.seed, sentence_index);
  Rng rng(seed);
  AugmentResult result;
  std::string incorrect;
  const double t_keep = config.p_keep;
  const double t_insert = t_keep + config.p_insert;
  const double t_replace = t_insert + config.p_replace;
  for (const Token &tok : sentence.tokens) {
    const double u = rng.Uniform();
    AugmentOp op = u < t_keep      ? AugmentOp::kKeep
                   : u < t_insert  ? AugmentOp::kInsert
                   : u < t_replace ? AugmentOp::kReplace
                                   : AugmentOp::kDelete;
    ++result.op_counts[static_cast<size_t>(op)];
    switch (op) {
      case AugmentOp::kKeep:
        incorrect += tok.surface;
        break;
      case AugmentOp::kInsert:
        incorrect += config.word_pool[rng.Index(config.word_pool.size())];
        incorrect += tok.surface;
        break;
      case AugmentOp::kReplace:
        incorrect += config.word_pool[rng.Index(config.word_pool.size())];
        break;
      case AugmentOp::kDelete:
        break;
    }
  }
  CorpusPair &pair = result.pair;
  pair.id = std::to_string(sentence_index);
  pair.incorrect = std::move(incorrect);
  pair.correct = sentence.text;
  pair.edits = DiffEdits(pair.incorrect, pair.correct);
  pair.rule_id = kRandomAugmentRuleId;
  pair.seed = seed;
  return result;
}

std::string AugmentReport::ToJson() const {
  nlohmann::ordered_json j;
  j["sentences_read"] = sentences_read;
  j["words"] = op_counts[0] + op_counts[1] + op_counts[2] + op_counts[3];
  j["keep"] = op_counts[0];
  j["insert"] = op_counts[1];
  j["replace"] = op_counts[2];
  j["delete"] = op_counts[3];
  return j.dump(2);
}

AugmentReport AugmentCorpus(std::istream &in, const Tagger &tagger,
                            const AugmentConfig &config, int workers,
                            const PairSink &sink) {
  config.Validate();
  AugmentReport report;
  ForEachLineBatch<AugmentResult>(
      in, workers,
      [&](const std::string &line, uint64_t index) {
        return RandomAugment(tagger.Tag(line), config, index);
      },
      [&](const AugmentResult &r) {
        ++report.sentences_read;
        for (size_t i = 0; i < 4; ++i) report.op_counts[i] += r.op_counts[i];
        sink(r.pair);
      });
  return report;
}

}  // namespace clg
