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

#include <random>
#include <string>
#include <vector>

#include "clg/error.h"
#include "clg/metrics.h"
#include "clg/pair_io.h"
#include "clg/text.h"
#include "clg/utf8.h"
#include "doctest.h"

namespace {

using clg::EditSpan;

std::string RandomText(std::mt19937_64 &rng, size_t max_len) {
  static const char *kChars[] = {"a", "b", "c", "的", "是", "天"};
  std::string out;
  size_t n = std::uniform_int_distribution<size_t>(0, max_len)(rng);
  for (size_t i = 0; i < n; ++i) out += kChars[rng() % 6];
  return out;
}

// Applies edits left to right, shifting later offsets by each length delta.
std::string ApplyForward(const std::string &text,
                         const std::vector<EditSpan> &edits) {
  std::u32string s = clg::DecodeUtf8(text);
  long shift = 0;
  for (const auto &e : edits) {
    std::u32string r = clg::DecodeUtf8(e.replacement);
    size_t b = static_cast<size_t>(static_cast<long>(e.start) + shift);
    s.replace(b, e.end - e.start, r);
    shift += static_cast<long>(r.size()) - static_cast<long>(e.end - e.start);
  }
  return clg::EncodeUtf8(s);
}

}  // namespace

TEST_CASE("apply edits examples") {
  CHECK(clg::ApplyEdits("昨天是转会的最后一天", {}) == "昨天是转会的最后一天");
  CHECK(clg::ApplyEdits("昨天是转会截止日期的最后一天", {{5, 9, ""}}) ==
        "昨天是转会的最后一天");
  CHECK(clg::ApplyEdits("丝绸之路开拓了…篇章", {{4, 6, "谱写"}}) ==
        "丝绸之路谱写了…篇章");
}

TEST_CASE("apply edits rejects bad spans") {
  CHECK_THROWS_AS(clg::ApplyEdits("abc", {{1, 4, ""}}), clg::Error);
  CHECK_THROWS_AS(clg::ApplyEdits("abc", {{2, 1, ""}}), clg::Error);
  CHECK_THROWS_AS(clg::ApplyEdits("abc", {{0, 2, "x"}, {1, 3, "y"}}), clg::Error);
  try {
    clg::ApplyEdits("abc", {{0, 2, "x"}, {1, 3, "y"}});
  } catch (const clg::Error &e) {
    CHECK(e.kind() == clg::ErrorKind::kValidation);
  }
}

TEST_CASE("diff edits examples") {
  CHECK(clg::DiffEdits("abc", "abc").empty());
  CHECK(clg::DiffEdits("昨天是转会截止日期的最后一天", "昨天是转会的最后一天") ==
        std::vector<EditSpan>{{5, 9, ""}});
  CHECK(clg::DiffEdits("ax", "ay") == std::vector<EditSpan>{{1, 2, "y"}});
}

TEST_CASE("diff round trip and cost") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 3000; ++k) {
    std::string a = RandomText(rng, 30), b = RandomText(rng, 30);
    auto edits = clg::DiffEdits(a, b);
    REQUIRE(clg::ApplyEdits(a, edits) == b);
    CHECK(ApplyForward(a, edits) == b);
    size_t cost = 0;
    for (size_t i = 0; i < edits.size(); ++i) {
      const auto &e = edits[i];
      cost += std::max(e.end - e.start, clg::Utf8Length(e.replacement));
      if (i > 0) CHECK(edits[i - 1].end < e.start);
    }
    CHECK(cost == clg::Levenshtein(a, b).distance);
  }
}

TEST_CASE("utf8 helpers") {
  CHECK(clg::Utf8Length("昨天ab") == 4);
  CHECK(clg::EncodeUtf8(clg::DecodeUtf8("丝绸之路")) == "丝绸之路");
  CHECK(clg::Utf8Substr("昨天是转会", 1, 3) == "天是");
}

TEST_CASE("taxonomy") {
  CHECK(clg::AllFineTypes().size() == 26);
  size_t per_coarse[clg::kNumCoarseTypes] = {};
  for (auto f : clg::AllFineTypes()) {
    ++per_coarse[static_cast<size_t>(clg::CoarseOf(f))];
    CHECK(clg::ParseFineType(clg::FineTypeName(f)) == f);
  }
  // Hierarchy sizes: 3, 5, 4, 2, 5, 7.
  CHECK(per_coarse[0] == 3);
  CHECK(per_coarse[1] == 5);
  CHECK(per_coarse[2] == 4);
  CHECK(per_coarse[3] == 2);
  CHECK(per_coarse[4] == 5);
  CHECK(per_coarse[5] == 7);
  CHECK(clg::PosTagFromName("NOUN") == clg::PosTag::kNoun);
  CHECK(clg::PosTagFromName("zzz") == clg::PosTag::kOther);
}

TEST_CASE("pair serialization") {
  clg::CorpusPair p;
  p.id = "3";
  p.incorrect = "昨天是转会截止日期的最后一天";
  p.correct = "昨天是转会的最后一天";
  p.edits = {{5, 9, ""}};
  p.error_types = {clg::ErrorType::Of(clg::FineType::kMultiWords)};
  p.rule_id = "MultiWords";
  p.seed = 42;
  std::string line = clg::SerializePair(p);
  CHECK(line ==
        "{\"id\":\"3\",\"incorrect\":\"昨天是转会截止日期的最后一天\","
        "\"correct\":\"昨天是转会的最后一天\",\"edits\":[{\"start\":5,\"end\":9,"
        "\"replacement\":\"\"}],\"error_types\":[{\"coarse\":"
        "\"RedundantComponent\",\"fine\":\"MultiWords\"}],\"rule_id\":"
        "\"MultiWords\",\"seed\":42}");
  CHECK(clg::ParsePair(line) == p);
  CHECK_THROWS_AS(clg::ParsePair("{not json"), clg::Error);
}
