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

#ifndef CLG_LM_H_
#define CLG_LM_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace clg {

struct LMConfig {
  int order = 3;
  double alpha = 1.0;  // additive smoothing constant
};

// Character n-gram model with additive smoothing.
//
// Sentences are padded with order-1 boundary symbols on the left and one on
// the right; the same boundary symbol is predicted at the end. The
// vocabulary is every training character plus UNK and the boundary.
class NGramModel {
 public:
  static constexpr char32_t kBoundary = 0x110000;
  static constexpr char32_t kUnk = 0x110001;

  explicit NGramModel(LMConfig config);

  // Adds one sentence's counts. Counting is order-free, so partial models
  // over disjoint shards can be merged.
  void Add(std::string_view sentence);
  void Merge(const NGramModel &other);

  // p(c | history) with the history given in model symbols.
  double Probability(std::u32string_view history, char32_t c) const;
  double Perplexity(std::string_view sentence) const;

  const LMConfig &config() const { return config_; }
  // Includes UNK and the boundary symbol.
  size_t vocabulary_size() const { return vocab_.size() + 2; }
  std::vector<char32_t> Vocabulary() const;  // sorted, with UNK and boundary

  uint64_t NGramCount(std::u32string_view ngram) const;
  uint64_t ContextCount(std::u32string_view history) const;
  const std::unordered_map<std::u32string, uint64_t> &ngrams() const {
    return ngrams_;
  }
  const std::unordered_map<std::u32string, uint64_t> &contexts() const {
    return contexts_;
  }

  // Versioned line-oriented count file.
  void Save(std::ostream &out) const;
  static NGramModel Load(std::istream &in);

 private:
  char32_t MapSymbol(char32_t c) const;

  LMConfig config_;
  std::unordered_set<char32_t> vocab_;
  std::unordered_map<std::u32string, uint64_t> ngrams_;
  // Number of prediction events observed after each history.
  std::unordered_map<std::u32string, uint64_t> contexts_;
};

// Throws a configuration error on an empty corpus or invalid config.
NGramModel TrainLM(const std::vector<std::string> &corpus,
                   const LMConfig &config);

// Indices of the ceil(keep_percent% * n) lowest-perplexity entries in
// input order. Ties go to the earlier sentence.
std::vector<size_t> SelectLowestPerplexity(const std::vector<double> &ppl,
                                           double keep_percent);

std::vector<double> ComputePerplexities(const NGramModel &model,
                                        const std::vector<std::string> &corpus,
                                        int workers = 1);

std::vector<std::string> FilterPercentile(const std::vector<std::string> &corpus,
                                          const NGramModel &model,
                                          double keep_percent,
                                          int workers = 1);

}  // namespace clg

#endif  // CLG_LM_H_
