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

#include "clg/pair_io.h"

#include "clg/error.h"
#include "json.hpp"

namespace clg {

using ordered_json = nlohmann::ordered_json;

std::string SerializePair(const CorpusPair &pair) {
  ordered_json j;
  j["id"] = pair.id;
  j["incorrect"] = pair.incorrect;
  j["correct"] = pair.correct;
  ordered_json edits = ordered_json::array();
  for (const EditSpan &e : pair.edits) {
    ordered_json je;
    je["start"] = e.start;
    je["end"] = e.end;
    je["replacement"] = e.replacement;
    edits.push_back(std::move(je));
  }
  j["edits"] = std::move(edits);
  ordered_json types = ordered_json::array();
  for (const ErrorType &t : pair.error_types) {
    ordered_json jt;
    jt["coarse"] = CoarseTypeName(t.coarse);
    jt["fine"] = FineTypeName(t.fine);
    types.push_back(std::move(jt));
  }
  j["error_types"] = std::move(types);
  j["rule_id"] = pair.rule_id;
  j["seed"] = pair.seed;
  return j.dump();
}

CorpusPair ParsePair(std::string_view line) {
  CorpusPair pair;
  try {
    ordered_json j = ordered_json::parse(line);
    pair.id = j.at("id").get<std::string>();
    pair.incorrect = j.at("incorrect").get<std::string>();
    pair.correct = j.at("correct").get<std::string>();
    for (const auto &je : j.at("edits")) {
      pair.edits.push_back({je.at("start").get<size_t>(),
                            je.at("end").get<size_t>(),
                            je.at("replacement").get<std::string>()});
    }
    for (const auto &jt : j.at("error_types")) {
      auto fine = ParseFineType(jt.at("fine").get<std::string>());
      auto coarse = ParseCoarseType(jt.at("coarse").get<std::string>());
      if (!fine || !coarse || CoarseOf(*fine) != *coarse) {
        throw ParseError("unknown or inconsistent error type " + jt.dump());
      }
      pair.error_types.push_back({*coarse, *fine});
    }
    pair.rule_id = j.at("rule_id").get<std::string>();
    pair.seed = j.at("seed").get<uint64_t>();
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed pair line: ") + e.what());
  }
  return pair;
}

}  // namespace clg
