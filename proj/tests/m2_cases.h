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


// Random MaxMatch scoring cases for oracle comparisons.

#ifndef CLG_TESTS_M2_CASES_H_
#define CLG_TESTS_M2_CASES_H_

#include <random>
#include <string>
#include <vector>

#include "clg/m2.h"
#include "oracles.h"

namespace oracle {

inline size_t Uniform(std::mt19937_64 &rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

// A token sequence of length <= 8 derived from `src` by random edits.
inline Tokens Mutate(const Tokens &src, std::mt19937_64 &rng) {
  static const char *kAlphabet[] = {"a", "b", "c", "d", "e"};
  Tokens out = src;
  size_t n_ops = Uniform(rng, 0, 3);
  for (size_t k = 0; k < n_ops; ++k) {
    size_t op = Uniform(rng, 0, 2);
    std::string tok = kAlphabet[Uniform(rng, 0, 4)];
    if (op == 0 && out.size() < 8) {
      out.insert(out.begin() + static_cast<long>(Uniform(rng, 0, out.size())), tok);
    } else if (op == 1 && !out.empty()) {
      out.erase(out.begin() + static_cast<long>(Uniform(rng, 0, out.size() - 1)));
    } else if (!out.empty()) {
      out[Uniform(rng, 0, out.size() - 1)] = tok;
    }
  }
  return out;
}

inline Tokens RandomTokens(std::mt19937_64 &rng) {
  static const char *kAlphabet[] = {"a", "b", "c", "d"};
  Tokens t(Uniform(rng, 0, 8));
  for (auto &x : t) x = kAlphabet[Uniform(rng, 0, 3)];
  return t;
}

// Gold edits of one annotator: a random segmentation of an optimal
// alignment towards `target`, sometimes with an alternative correction or a
// stray edit.
inline std::vector<clg::GoldEdit> RandomGold(const Tokens &src,
                                             const Tokens &target,
                                             size_t max_unchanged,
                                             std::mt19937_64 &rng) {
  std::vector<clg::GoldEdit> gold;
  if (src != target) {
    auto paths = AllOptimalPaths(src, target);
    const auto &path = paths[Uniform(rng, 0, paths.size() - 1)];
    std::vector<std::vector<clg::M2Edit>> segs;
    Segmentations(path, target, max_unchanged, &segs);
    for (const auto &e : segs[Uniform(rng, 0, segs.size() - 1)]) {
      clg::GoldEdit g{e.start, e.end, {e.correction}};
      if (Uniform(rng, 0, 5) == 0) g.corrections.push_back("e");
      gold.push_back(g);
    }
  }
  if (Uniform(rng, 0, 6) == 0) {
    size_t b = Uniform(rng, 0, src.size());
    gold.push_back({b, Uniform(rng, b, src.size()), {"d"}});
  }
  return gold;
}

struct M2Case {
  clg::M2Sentence gold;
  Tokens hyp;
};

inline M2Case RandomCase(std::mt19937_64 &rng, size_t max_unchanged) {
  M2Case c;
  c.gold.source = RandomTokens(rng);
  c.hyp = Mutate(c.gold.source, rng);
  size_t annotators = Uniform(rng, 1, 3);
  for (size_t a = 0; a < annotators; ++a) {
    // Half of the annotators agree with the hypothesis' changes.
    Tokens target = Uniform(rng, 0, 1) ? c.hyp : Mutate(c.gold.source, rng);
    c.gold.annotators[static_cast<int>(a)] =
        RandomGold(c.gold.source, target, max_unchanged, rng);
  }
  return c;
}

}  // namespace oracle

#endif  // CLG_TESTS_M2_CASES_H_
