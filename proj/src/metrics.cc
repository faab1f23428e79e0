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


#include "clg/metrics.h"

#include <set>

#include "clg/error.h"
#include "clg/utf8.h"
#include "json.hpp"

namespace clg {

EditCounts Levenshtein(std::u32string_view a, std::u32string_view b) {
  const size_t n = a.size(), m = b.size();
  std::vector<std::vector<size_t>> d(n + 1, std::vector<size_t>(m + 1));
  for (size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({sub, d[i][j - 1] + 1, d[i - 1][j] + 1});
    }
  }
  EditCounts out;
  out.distance = d[n][m];
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && d[i][j] == d[i - 1][j - 1]) {
      --i, --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      ++out.replace;
      --i, --j;
    } else if (j > 0 && d[i][j] == d[i][j - 1] + 1) {
      ++out.insert;
      --j;
    } else {
      ++out.del;
      --i;
    }
  }
  return out;
}

EditCounts Levenshtein(std::string_view a, std::string_view b) {
  return Levenshtein(DecodeUtf8(a), DecodeUtf8(b));
}

std::string StatsReport::ToJson() const {
  nlohmann::ordered_json j;
  j["Number of Sentences"] = number_of_sentences;
  j["Erroneous Sentences"] = erroneous_sentences;
  j["Number of References"] = number_of_references;
  j["Average Length (Char.)"] = average_length_chars;
  j["Edit Distance (Char.)"] = average_edit_distance_chars;
  j["References / Sentence"] = references_per_sentence;
  if (empty) j["empty"] = true;
  return j.dump(2);
}

void StatsAccumulator::Add(const CorpusPair &pair) {
  ++sentences_;
  ++references_;
  if (pair.incorrect != pair.correct) ++erroneous_;
  length_sum_ += Utf8Length(pair.incorrect);
  distance_sum_ += Levenshtein(pair.incorrect, pair.correct).distance;
}

StatsReport StatsAccumulator::Report() const {
  StatsReport r;
  r.number_of_sentences = sentences_;
  r.erroneous_sentences = erroneous_;
  r.number_of_references = references_;
  r.empty = sentences_ == 0;
  if (sentences_ > 0) {
    const double n = static_cast<double>(sentences_);
    r.average_length_chars = static_cast<double>(length_sum_) / n;
    r.average_edit_distance_chars = static_cast<double>(distance_sum_) / n;
    r.references_per_sentence = static_cast<double>(references_) / n;
  }
  return r;
}

StatsReport CorpusStats(const std::vector<CorpusPair> &pairs) {
  StatsAccumulator acc;
  for (const CorpusPair &p : pairs) acc.Add(p);
  return acc.Report();
}

void TypeEditAccumulator::Add(const CorpusPair &pair) {
  std::set<CoarseType> types;
  for (const ErrorType &t : pair.error_types) types.insert(t.coarse);
  if (types.empty()) return;
  EditCounts c = Levenshtein(pair.incorrect, pair.correct);
  for (CoarseType t : types) {
    Sums &s = sums_[t];
    ++s.pairs;
    s.replace += c.replace;
    s.insert += c.insert;
    s.del += c.del;
  }
}

TypeEditTable TypeEditAccumulator::Table() const {
  TypeEditTable table;
  for (const auto &[type, s] : sums_) {
    const double n = static_cast<double>(s.pairs);
    TypeEditRow row;
    row.pairs = s.pairs;
    row.replace = static_cast<double>(s.replace) / n;
    row.insert = static_cast<double>(s.insert) / n;
    row.del = static_cast<double>(s.del) / n;
    row.total = static_cast<double>(s.replace + s.insert + s.del) / n;
    table[type] = row;
  }
  return table;
}

TypeEditTable PerTypeEditStats(const std::vector<CorpusPair> &pairs) {
  TypeEditAccumulator acc;
  for (const CorpusPair &p : pairs) acc.Add(p);
  return acc.Table();
}

std::string TypeEditTableToJson(const TypeEditTable &table) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto &[type, row] : table) {
    nlohmann::ordered_json r;
    r["Replace"] = row.replace;
    r["Insert"] = row.insert;
    r["Delete"] = row.del;
    r["Total"] = row.total;
    j[CoarseTypeLabel(type)] = std::move(r);
  }
  return j.dump(2);
}

double FleissKappa(const std::vector<std::vector<uint64_t>> &counts) {
  if (counts.empty()) throw ValidationError("kappa: no items");
  const size_t k = counts[0].size();
  if (k == 0) throw ValidationError("kappa: no categories");
  uint64_t n = 0;
  for (uint64_t c : counts[0]) n += c;
  if (n < 2) throw ValidationError("kappa: need at least 2 raters per item");

  const double items = static_cast<double>(counts.size());
  const double raters = static_cast<double>(n);
  std::vector<double> column(k, 0);
  double p_bar = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    const auto &row = counts[i];
    if (row.size() != k) {
      throw ValidationError("kappa: row " + std::to_string(i + 1) +
                            " has " + std::to_string(row.size()) +
                            " categories, expected " + std::to_string(k));
    }
    uint64_t sum = 0, agree = 0;
    for (size_t j = 0; j < k; ++j) {
      sum += row[j];
      agree += row[j] * (row[j] - (row[j] > 0 ? 1 : 0));
      column[j] += static_cast<double>(row[j]);
    }
    if (sum != n) {
      throw ValidationError("kappa: row " + std::to_string(i + 1) +
                            " sums to " + std::to_string(sum) + ", expected " +
                            std::to_string(n));
    }
    p_bar += static_cast<double>(agree) / (raters * (raters - 1));
  }
  p_bar /= items;
  double p_e = 0;
  for (double c : column) {
    const double p = c / (items * raters);
    p_e += p * p;
  }
  if (p_bar == 1.0) return 1.0;
  if (p_e == 1.0) throw ValidationError("kappa: undefined (chance agreement is 1)");
  return (p_bar - p_e) / (1.0 - p_e);
}

}  // namespace clg
