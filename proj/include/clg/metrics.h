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


#ifndef CLG_METRICS_H_
#define CLG_METRICS_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "clg/text.h"

namespace clg {

struct EditCounts {
  size_t distance = 0;
  size_t replace = 0;
  size_t insert = 0;
  size_t del = 0;

  bool operator==(const EditCounts &) const = default;
};

// Unit-cost character distance turning `a` into `b`. Op counts follow one
// backtrace from the end preferring match, then replace, insert, delete.
EditCounts Levenshtein(std::string_view a, std::string_view b);
EditCounts Levenshtein(std::u32string_view a, std::u32string_view b);

struct StatsReport {
  uint64_t number_of_sentences = 0;
  uint64_t erroneous_sentences = 0;
  uint64_t number_of_references = 0;
  double average_length_chars = 0;
  double average_edit_distance_chars = 0;
  double references_per_sentence = 0;
  bool empty = true;

  // The six table rows as keys; `"empty": true` is added for empty input.
  std::string ToJson() const;
};

// Incremental form so corpora can be streamed.
class StatsAccumulator {
 public:
  void Add(const CorpusPair &pair);
  StatsReport Report() const;

 private:
  uint64_t sentences_ = 0;
  uint64_t erroneous_ = 0;
  uint64_t references_ = 0;
  uint64_t length_sum_ = 0;
  uint64_t distance_sum_ = 0;
};

StatsReport CorpusStats(const std::vector<CorpusPair> &pairs);

struct TypeEditRow {
  uint64_t pairs = 0;
  double replace = 0;
  double insert = 0;
  double del = 0;
  double total = 0;
};

using TypeEditTable = std::map<CoarseType, TypeEditRow>;

class TypeEditAccumulator {
 public:
  // A pair contributes once to each distinct coarse type it carries.
  void Add(const CorpusPair &pair);
  TypeEditTable Table() const;

 private:
  struct Sums {
    uint64_t pairs = 0, replace = 0, insert = 0, del = 0;
  };
  std::map<CoarseType, Sums> sums_;
};

TypeEditTable PerTypeEditStats(const std::vector<CorpusPair> &pairs);
// Rows keyed by the coarse label, columns Replace/Insert/Delete/Total.
std::string TypeEditTableToJson(const TypeEditTable &table);

// Fleiss' kappa over an items x categories matrix of rating counts; every
// row must sum to the same number of raters n >= 2.
double FleissKappa(const std::vector<std::vector<uint64_t>> &counts);

}  // namespace clg

#endif  // CLG_METRICS_H_
