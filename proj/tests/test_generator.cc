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

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clg/error.h"
#include "clg/generator.h"
#include "clg/pair_io.h"
#include "clg/resources.h"
#include "clg/rng.h"
#include "clg/rules.h"
#include "clg/tagging.h"
#include "clg/text.h"
#include "doctest.h"
#include "json.hpp"

namespace {

using clg::FineType;

const std::string kData = CLG_DATA_DIR;

const clg::RuleResources &Seed() {
  static const clg::RuleResources r = clg::LoadResources(kData + "/seed");
  return r;
}

std::string FixtureText() {
  std::ifstream in(kData + "/fixture/corpus.pretagged.txt");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> FixtureLines() {
  std::istringstream in(FixtureText());
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

clg::Tagger Pretagged() {
  return clg::Tagger(clg::TaggerMode::kPretaggedInput, clg::Lexicon(),
                     clg::TagMapping::Default());
}

std::string RunCorpus(const clg::GenConfig &config, int workers,
                      clg::GenerationReport *report = nullptr,
                      std::vector<clg::CorpusPair> *pairs = nullptr) {
  std::istringstream in(FixtureText());
  std::string out;
  auto r = clg::GenerateCorpus(in, Pretagged(), Seed(), config, workers,
                               [&](const clg::CorpusPair &p) {
                                 out += clg::SerializePair(p) + "\n";
                                 if (pairs) pairs->push_back(p);
                               });
  if (report) *report = r;
  return out;
}

std::optional<clg::CorpusPair> Generate(const std::string &pretagged,
                                        const clg::GenConfig &config,
                                        uint64_t index,
                                        const clg::RuleResources &res = Seed()) {
  auto s = clg::ParsePretagged(pretagged);
  return clg::GeneratePair(s, clg::IdentifyRoles(s), res, config, index);
}

}  // namespace

TEST_CASE("config validation") {
  clg::GenConfig ok;
  CHECK_NOTHROW(ok.Validate());
  clg::GenConfig unknown;
  unknown.enabled_rules = {"NoSuchRule"};
  CHECK_THROWS_AS(unknown.Validate(), clg::Error);
  clg::GenConfig combine;
  combine.combine_max = 0;
  CHECK_THROWS_AS(combine.Validate(), clg::Error);
  clg::GenConfig weight;
  weight.rule_weights["MultiWords"] = -1;
  CHECK_THROWS_AS(weight.Validate(), clg::Error);
}

TEST_CASE("single applicable rule") {
  clg::GenConfig config;
  int fired = 0;
  for (uint64_t index = 0; index < 200; ++index) {
    auto p = Generate("非常/ADV", config, index);
    if (!p) continue;
    ++fired;
    REQUIRE(p->error_types.size() == 1);
    CHECK(p->error_types[0] ==
          clg::ErrorType{clg::CoarseType::kRedundantComponent, FineType::kMultiWords});
    CHECK(p->rule_id == "MultiWords");
    CHECK(clg::ApplyEdits(p->incorrect, p->edits) == "非常");
  }
  CHECK(fired > 0);

  clg::GenConfig only;
  only.enabled_rules = {"MultiWords"};
  for (uint64_t index = 0; index < 20; ++index) {
    auto p = Generate("非常/ADV", only, index);
    REQUIRE(p);
    CHECK(p->id == std::to_string(index));
    CHECK(p->seed == clg::PairSeed(0, index, 0));
  }
}

TEST_CASE("no applicable rule") {
  clg::GenConfig config;
  for (uint64_t index = 0; index < 20; ++index) {
    CHECK(!Generate("苹果/NOUN", config, index, clg::RuleResources()));
  }
  CHECK(!clg::GeneratePair(clg::TaggedSentence(), clg::RoleSpans(), Seed(),
                           config, 0));
}

TEST_CASE("two stacked rules") {
  clg::GenConfig config;
  config.combine_max = 2;
  config.enabled_rules = {"MultiMeanings", "MultiWords"};
  const std::string line = FixtureLines()[12];
  const std::string text = clg::ParsePretagged(line).text;
  for (uint64_t index = 0; index < 20; ++index) {
    auto p = Generate(line, config, index);
    REQUIRE(p);
    CHECK(p->error_types.size() == 2);
    CHECK(p->error_types[0].fine != p->error_types[1].fine);
    CHECK(p->correct == text);
    CHECK(clg::ApplyEdits(p->incorrect, p->edits) == text);
    CHECK((p->rule_id == "MultiMeanings+MultiWords" ||
           p->rule_id == "MultiWords+MultiMeanings"));
  }
}

TEST_CASE("corpus determinism and worker invariance") {
  clg::GenConfig config;
  config.seed = 42;
  std::string one = RunCorpus(config, 1);
  CHECK(!one.empty());
  CHECK(RunCorpus(config, 1) == one);
  CHECK(RunCorpus(config, 8) == one);
  config.seed = 43;
  CHECK(RunCorpus(config, 1) != one);
}

TEST_CASE("report invariants") {
  clg::GenConfig config;
  config.seed = 7;
  config.combine_max = 3;
  config.per_sentence = 2;
  clg::GenerationReport report;
  std::vector<clg::CorpusPair> pairs;
  RunCorpus(config, 4, &report, &pairs);
  CHECK(report.sentences_read == 50);
  CHECK(report.pairs_emitted == pairs.size());
  uint64_t fires = 0, applications = 0;
  for (const auto &[id, n] : report.rule_fires) fires += n;
  for (const auto &p : pairs) {
    applications += p.error_types.size();
    CHECK(!p.error_types.empty());
    CHECK(p.error_types.size() <= 3);
    CHECK(clg::ApplyEdits(p.incorrect, p.edits) == p.correct);
    CHECK(p.id.find('-') != std::string::npos);
  }
  CHECK(fires == applications);
  CHECK(report.rule_applications == applications);
  auto json = nlohmann::json::parse(report.ToJson());
  CHECK(json["sentences_read"] == 50);
  CHECK(json["rule_fires"].size() == 26);
  CHECK(json["rule_fires"].contains("AdverbialAttributives"));
}

TEST_CASE("single enabled rule") {
  clg::GenConfig config;
  config.seed = 42;
  config.enabled_rules = {"LackSubject"};
  std::vector<clg::CorpusPair> pairs;
  RunCorpus(config, 2, nullptr, &pairs);
  CHECK(!pairs.empty());
  for (const auto &p : pairs) CHECK(p.rule_id == "LackSubject");
}

TEST_CASE("empty corpus") {
  std::istringstream in("");
  size_t n = 0;
  auto report = clg::GenerateCorpus(in, Pretagged(), Seed(), clg::GenConfig(), 4,
                                    [&](const clg::CorpusPair &) { ++n; });
  CHECK(n == 0);
  CHECK(report.sentences_read == 0);
  CHECK(report.pairs_emitted == 0);
  CHECK(report.skipped == 0);
  CHECK(report.rule_applications == 0);
}

TEST_CASE("bad input line reports its line number") {
  std::istringstream in("他/PRON 喜欢/VERB\n坏行\n");
  try {
    clg::GenerateCorpus(in, Pretagged(), Seed(), clg::GenConfig(), 1,
                        [](const clg::CorpusPair &) {});
    FAIL("expected a parse error");
  } catch (const clg::Error &e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("selection is uniform over applicable rules") {
  auto lines = FixtureLines();
  clg::GenConfig config;
  for (size_t li : {0, 12, 20, 25}) {
    auto s = clg::ParsePretagged(lines[li]);
    auto roles = clg::IdentifyRoles(s);
    std::set<std::string> applicable;
    for (const auto &d : clg::RuleRegistry()) {
      clg::Rng rng(0);
      if (clg::ApplyRule(d.fine, s, roles, Seed(), rng)) applicable.insert(d.rule_id);
    }
    REQUIRE(applicable.size() >= 2);
    std::map<std::string, double> counts;
    double total = 0;
    for (uint64_t index = 0; index < 20000; ++index) {
      auto p = clg::GeneratePair(s, roles, Seed(), config, index);
      if (!p) continue;
      counts[p->rule_id] += 1;
      total += 1;
    }
    REQUIRE(total > 0);
    for (const auto &id : applicable) {
      INFO("sentence " << li + 1 << " rule " << id);
      CHECK(std::abs(counts[id] / total - 1.0 / double(applicable.size())) <= 0.03);
    }
  }
}

TEST_CASE("augment examples") {
  auto s = clg::ParsePretagged("我/PRON 非常/ADV 喜欢/VERB 苹果/NOUN");
  clg::AugmentConfig keep;
  keep.p_keep = 1;
  keep.p_insert = keep.p_replace = keep.p_delete = 0;
  auto k = clg::RandomAugment(s, keep, 0);
  CHECK(k.pair.incorrect == k.pair.correct);
  CHECK(k.pair.edits.empty());
  CHECK(k.pair.error_types.empty());
  CHECK(k.pair.rule_id == "random-augment");
  CHECK(k.op_counts[0] == 4);

  clg::AugmentConfig del;
  del.p_keep = del.p_insert = del.p_replace = 0;
  del.p_delete = 1;
  auto one = clg::ParsePretagged("苹果/NOUN");
  auto d = clg::RandomAugment(one, del, 3);
  CHECK(d.pair.incorrect.empty());
  CHECK(d.pair.correct == "苹果");
  CHECK(d.pair.edits == std::vector<clg::EditSpan>{{0, 0, "苹果"}});

  clg::AugmentConfig mixed;
  mixed.word_pool = {"书", "读"};
  mixed.seed = 9;
  for (uint64_t i = 0; i < 200; ++i) {
    auto r = clg::RandomAugment(s, mixed, i);
    CHECK(clg::ApplyEdits(r.pair.incorrect, r.pair.edits) == s.text);
    CHECK(r.op_counts[0] + r.op_counts[1] + r.op_counts[2] + r.op_counts[3] == 4);
    auto again = clg::RandomAugment(s, mixed, i);
    CHECK(again.pair == r.pair);
  }
}

TEST_CASE("augment config errors") {
  clg::AugmentConfig empty_pool;
  CHECK_THROWS_AS(empty_pool.Validate(), clg::Error);
  clg::AugmentConfig bad_sum;
  bad_sum.word_pool = {"书"};
  bad_sum.p_keep = 0.5;
  CHECK_THROWS_AS(bad_sum.Validate(), clg::Error);
  clg::AugmentConfig delete_only;
  delete_only.p_keep = 0.5;
  delete_only.p_delete = 0.5;
  delete_only.p_insert = delete_only.p_replace = 0;
  CHECK_NOTHROW(delete_only.Validate());
}

TEST_CASE("augment frequencies") {
  clg::AugmentConfig config;
  config.word_pool = {"书", "读", "看"};
  config.seed = 11;
  auto s = clg::ParsePretagged("我/PRON 非常/ADV 喜欢/VERB 苹果/NOUN 和/CCONJ 书/NOUN");
  std::array<double, 4> counts{};
  double words = 0;
  for (uint64_t i = 0; i < 20000; ++i) {
    auto r = clg::RandomAugment(s, config, i);
    for (size_t k = 0; k < 4; ++k) counts[k] += double(r.op_counts[k]);
    words += double(s.size());
  }
  CHECK(std::abs(counts[0] / words - 0.7) <= 0.01);
  for (size_t k = 1; k < 4; ++k) CHECK(std::abs(counts[k] / words - 0.1) <= 0.01);
}
