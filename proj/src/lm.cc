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

#include "clg/lm.h"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "clg/error.h"
#include "clg/parallel.h"
#include "clg/strings.h"
#include "clg/utf8.h"

namespace clg {
namespace {

constexpr const char *kMagic = "#clg-ngram-lm";
constexpr int kFormatVersion = 1;

void ValidateConfig(const LMConfig &config) {
  if (config.order < 1) throw ConfigError("LM order must be >= 1");
  if (!(config.alpha > 0)) throw ConfigError("LM alpha must be > 0");
}

std::string SymbolToken(char32_t c) {
  if (c == NGramModel::kBoundary) return "<b>";
  if (c == NGramModel::kUnk) return "<unk>";
  std::ostringstream os;
  os << std::hex << static_cast<uint32_t>(c);
  return os.str();
}

char32_t ParseSymbolToken(const std::string &tok) {
  if (tok == "<b>") return NGramModel::kBoundary;
  if (tok == "<unk>") return NGramModel::kUnk;
  size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &used, 16);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != tok.size() || tok.empty() || v > 0x10FFFF) {
    throw ParseError("bad symbol `" + tok + "` in LM file");
  }
  return static_cast<char32_t>(v);
}

}  // namespace

NGramModel::NGramModel(LMConfig config) : config_(config) {
  ValidateConfig(config_);
}

char32_t NGramModel::MapSymbol(char32_t c) const {
  return vocab_.count(c) ? c : kUnk;
}

void NGramModel::Add(std::string_view sentence) {
  const size_t n = static_cast<size_t>(config_.order);
  std::u32string padded(n - 1, kBoundary);
  for (char32_t c : DecodeUtf8(sentence)) {
    vocab_.insert(c);
    padded.push_back(c);
  }
  padded.push_back(kBoundary);
  for (size_t i = n - 1; i < padded.size(); ++i) {
    std::u32string_view gram(padded.data() + i + 1 - n, n);
    ++ngrams_[std::u32string(gram)];
    ++contexts_[std::u32string(gram.substr(0, n - 1))];
  }
}

void NGramModel::Merge(const NGramModel &other) {
  if (other.config_.order != config_.order) {
    throw ConfigError("cannot merge LMs of different order");
  }
  vocab_.insert(other.vocab_.begin(), other.vocab_.end());
  for (const auto &[k, v] : other.ngrams_) ngrams_[k] += v;
  for (const auto &[k, v] : other.contexts_) contexts_[k] += v;
}

uint64_t NGramModel::NGramCount(std::u32string_view ngram) const {
  auto it = ngrams_.find(std::u32string(ngram));
  return it == ngrams_.end() ? 0 : it->second;
}

uint64_t NGramModel::ContextCount(std::u32string_view history) const {
  auto it = contexts_.find(std::u32string(history));
  return it == contexts_.end() ? 0 : it->second;
}

double NGramModel::Probability(std::u32string_view history, char32_t c) const {
  std::u32string gram(history);
  gram.push_back(c);
  const double alpha = config_.alpha;
  const double v = static_cast<double>(vocabulary_size());
  return (static_cast<double>(NGramCount(gram)) + alpha) /
         (static_cast<double>(ContextCount(history)) + alpha * v);
}

double NGramModel::Perplexity(std::string_view sentence) const {
  const size_t n = static_cast<size_t>(config_.order);
  std::u32string padded(n - 1, kBoundary);
  for (char32_t c : DecodeUtf8(sentence)) padded.push_back(MapSymbol(c));
  padded.push_back(kBoundary);
  double log_sum = 0;
  size_t events = 0;
  for (size_t i = n - 1; i < padded.size(); ++i) {
    std::u32string_view history(padded.data() + i + 1 - n, n - 1);
    log_sum += std::log(Probability(history, padded[i]));
    ++events;
  }
  return std::exp(-log_sum / static_cast<double>(events));
}

std::vector<char32_t> NGramModel::Vocabulary() const {
  std::vector<char32_t> v(vocab_.begin(), vocab_.end());
  v.push_back(kBoundary);
  v.push_back(kUnk);
  std::sort(v.begin(), v.end());
  return v;
}

void NGramModel::Save(std::ostream &out) const {
  out << kMagic << " v" << kFormatVersion << "\n";
  char alpha[64];
  std::snprintf(alpha, sizeof alpha, "%.17g", config_.alpha);
  out << "order\t" << config_.order << "\n";
  out << "alpha\t" << alpha << "\n";

  std::vector<char32_t> chars(vocab_.begin(), vocab_.end());
  std::sort(chars.begin(), chars.end());
  out << "vocab\t" << chars.size() << "\n";
  for (char32_t c : chars) out << SymbolToken(c) << "\n";

  std::vector<std::pair<std::u32string, uint64_t>> grams(ngrams_.begin(),
                                                         ngrams_.end());
  std::sort(grams.begin(), grams.end());
  out << "ngrams\t" << grams.size() << "\n";
  for (const auto &[gram, count] : grams) {
    for (size_t i = 0; i < gram.size(); ++i) {
      if (i) out << ' ';
      out << SymbolToken(gram[i]);
    }
    out << '\t' << count << "\n";
  }
}

NGramModel NGramModel::Load(std::istream &in) {
  std::string line;
  size_t lineno = 0;
  auto next = [&](const char *what) {
    if (!std::getline(in, line)) {
      throw ParseError(std::string("LM file truncated, expected ") + what);
    }
    ++lineno;
    ChompCr(&line);
  };
  auto fail = [&](const std::string &msg) {
    throw ParseError("LM file line " + std::to_string(lineno) + ": " + msg);
  };
  auto keyed = [&](const char *key) {
    next(key);
    auto f = Split(line, '\t');
    if (f.size() != 2 || f[0] != key) fail(std::string("expected ") + key);
    return f[1];
  };

  next("header");
  if (line != std::string(kMagic) + " v" + std::to_string(kFormatVersion)) {
    fail("unsupported header `" + line + "`");
  }
  LMConfig config;
  try {
    config.order = std::stoi(keyed("order"));
    config.alpha = std::stod(keyed("alpha"));
  } catch (const std::logic_error &) {
    fail("bad numeric field");
  }
  NGramModel model(config);
  size_t vocab = std::stoul(keyed("vocab"));
  for (size_t i = 0; i < vocab; ++i) {
    next("vocabulary entry");
    model.vocab_.insert(ParseSymbolToken(line));
  }
  size_t grams = std::stoul(keyed("ngrams"));
  for (size_t i = 0; i < grams; ++i) {
    next("n-gram entry");
    auto f = Split(line, '\t');
    if (f.size() != 2) fail("expected `symbols<TAB>count`");
    std::u32string gram;
    for (const auto &tok : SplitWhitespace(f[0]))
      gram.push_back(ParseSymbolToken(tok));
    if (gram.size() != static_cast<size_t>(config.order)) fail("wrong n-gram length");
    uint64_t count = std::stoull(f[1]);
    if (count == 0) fail("zero count");
    model.ngrams_[gram] += count;
    model.contexts_[gram.substr(0, gram.size() - 1)] += count;
  }
  return model;
}

NGramModel TrainLM(const std::vector<std::string> &corpus,
                   const LMConfig &config) {
  if (corpus.empty()) throw ConfigError("cannot train an LM on an empty corpus");
  NGramModel model(config);
  for (const auto &s : corpus) model.Add(s);
  return model;
}

std::vector<size_t> SelectLowestPerplexity(const std::vector<double> &ppl,
                                           double keep_percent) {
  if (!(keep_percent > 0 && keep_percent <= 100)) {
    throw ConfigError("keep percent must be in (0, 100]");
  }
  const size_t n = ppl.size();
  const double exact = keep_percent * static_cast<double>(n) / 100.0;
  size_t keep = static_cast<size_t>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
  keep = std::min(keep, n);
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return ppl[a] < ppl[b]; });
  order.resize(keep);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<double> ComputePerplexities(const NGramModel &model,
                                        const std::vector<std::string> &corpus,
                                        int workers) {
  std::vector<double> ppl(corpus.size());
  ParallelFor(corpus.size(), workers,
              [&](size_t i) { ppl[i] = model.Perplexity(corpus[i]); });
  return ppl;
}

std::vector<std::string> FilterPercentile(const std::vector<std::string> &corpus,
                                          const NGramModel &model,
                                          double keep_percent, int workers) {
  std::vector<std::string> kept;
  for (size_t i : SelectLowestPerplexity(
           ComputePerplexities(model, corpus, workers), keep_percent)) {
    kept.push_back(corpus[i]);
  }
  return kept;
}

}  // namespace clg
