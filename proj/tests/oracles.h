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


// Independent reference implementations used by the tests.

#ifndef CLG_TESTS_ORACLES_H_
#define CLG_TESTS_ORACLES_H_

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "clg/m2.h"

namespace oracle {

// Top-down recursive edit distance with memoization.
template <typename Seq>
size_t EditDistance(const Seq &a, const Seq &b) {
  std::map<std::pair<size_t, size_t>, size_t> memo;
  std::function<size_t(size_t, size_t)> go = [&](size_t i, size_t j) -> size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    size_t best = std::min({go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1),
                            go(i + 1, j) + 1, go(i, j + 1) + 1});
    memo[key] = best;
    return best;
  };
  return go(0, 0);
}

struct OpCounts {
  size_t replace = 0, insert = 0, del = 0;
};

// Walks an optimal script from the end of both strings, preferring a free
// match, then replace, insert, delete, checking optimality by recursion.
template <typename Seq>
OpCounts PreferredOps(const Seq &a, const Seq &b) {
  OpCounts out;
  size_t i = a.size(), j = b.size();
  auto dist = [&](size_t x, size_t y) {
    return EditDistance(Seq(a.begin(), a.begin() + x),
                        Seq(b.begin(), b.begin() + y));
  };
  while (i > 0 || j > 0) {
    size_t here = dist(i, j);
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && dist(i - 1, j - 1) == here) {
      --i, --j;
    } else if (i > 0 && j > 0 && dist(i - 1, j - 1) + 1 == here) {
      ++out.replace, --i, --j;
    } else if (j > 0 && dist(i, j - 1) + 1 == here) {
      ++out.insert, --j;
    } else {
      ++out.del, --i;
    }
  }
  return out;
}

using Tokens = std::vector<std::string>;

enum class Op { kMatch, kSub, kDel, kIns };

struct Step {
  Op op;
  size_t i, j;  // source/hypothesis position before the step
};

// Every minimal-cost alignment path, by exhaustive recursion.
inline std::vector<std::vector<Step>> AllOptimalPaths(const Tokens &src,
                                                      const Tokens &hyp) {
  const size_t best = EditDistance(src, hyp);
  std::vector<std::vector<Step>> paths;
  std::vector<Step> cur;
  std::function<void(size_t, size_t, size_t)> go = [&](size_t i, size_t j,
                                                        size_t cost) {
    if (cost > best) return;
    // Prune with the exact remaining distance.
    if (cost + EditDistance(Tokens(src.begin() + i, src.end()),
                            Tokens(hyp.begin() + j, hyp.end())) > best)
      return;
    if (i == src.size() && j == hyp.size()) {
      paths.push_back(cur);
      return;
    }
    if (i < src.size() && j < hyp.size()) {
      bool same = src[i] == hyp[j];
      cur.push_back({same ? Op::kMatch : Op::kSub, i, j});
      go(i + 1, j + 1, cost + (same ? 0 : 1));
      cur.pop_back();
    }
    if (i < src.size()) {
      cur.push_back({Op::kDel, i, j});
      go(i + 1, j, cost + 1);
      cur.pop_back();
    }
    if (j < hyp.size()) {
      cur.push_back({Op::kIns, i, j});
      go(i, j + 1, cost + 1);
      cur.pop_back();
    }
  };
  go(0, 0, 0);
  return paths;
}

inline std::string JoinRange(const Tokens &t, size_t b, size_t e) {
  std::string out;
  for (size_t k = b; k < e; ++k) {
    if (k > b) out += ' ';
    out += t[k];
  }
  return out;
}

// All edit sets a path can be segmented into: every change belongs to one
// edit; an edit starts and ends with a change and spans at most
// `max_unchanged` matches.
inline void Segmentations(const std::vector<Step> &path, const Tokens &hyp,
                          size_t max_unchanged,
                          std::vector<std::vector<clg::M2Edit>> *out) {
  std::vector<clg::M2Edit> cur;
  std::function<void(size_t)> go = [&](size_t p) {
    while (p < path.size() && path[p].op == Op::kMatch) ++p;
    if (p == path.size()) {
      out->push_back(cur);
      return;
    }
    size_t matches = 0;
    for (size_t q = p; q < path.size(); ++q) {
      if (path[q].op == Op::kMatch) {
        if (++matches > max_unchanged) break;
        continue;
      }
      size_t end_i = path[q].i + (path[q].op == Op::kIns ? 0 : 1);
      size_t end_j = path[q].j + (path[q].op == Op::kDel ? 0 : 1);
      cur.push_back({path[p].i, end_i, JoinRange(hyp, path[p].j, end_j)});
      go(q + 1);
      cur.pop_back();
    }
  };
  go(0);
}

inline bool MatchesGold(const clg::M2Edit &e,
                        const std::vector<clg::GoldEdit> &gold) {
  for (const auto &g : gold) {
    if (g.start != e.start || g.end != e.end) continue;
    for (const auto &c : g.corrections) {
      if (c == e.correction) return true;
    }
  }
  return false;
}

inline bool HasDuplicateSpan(const std::vector<clg::M2Edit> &edits) {
  std::set<std::pair<size_t, size_t>> spans;
  for (const auto &e : edits) {
    if (!spans.insert({e.start, e.end}).second) return true;
  }
  return false;
}

// Exhaustive MaxMatch edit extraction: most gold matches, then fewest
// edits, then the lexicographically smallest edit sequence.
inline std::vector<clg::M2Edit> ExtractEdits(
    const Tokens &src, const Tokens &hyp, const std::vector<clg::GoldEdit> &gold,
    size_t max_unchanged) {
  if (src == hyp) return {};
  std::vector<std::vector<clg::M2Edit>> all;
  for (const auto &path : AllOptimalPaths(src, hyp)) {
    Segmentations(path, hyp, max_unchanged, &all);
  }
  bool have = false;
  long best_tp = 0;
  size_t best_count = 0;
  std::vector<clg::M2Edit> best;
  for (const auto &edits : all) {
    if (HasDuplicateSpan(edits)) continue;
    long tp = 0;
    for (const auto &e : edits) tp += MatchesGold(e, gold) ? 1 : 0;
    bool better = !have || tp > best_tp ||
                  (tp == best_tp && (edits.size() < best_count ||
                                     (edits.size() == best_count && edits < best)));
    if (better) {
      have = true;
      best_tp = tp;
      best_count = edits.size();
      best = edits;
    }
  }
  return best;
}

struct Counts {
  long tp = 0, fp = 0, fn = 0;
};

inline Counts Count(const std::vector<clg::M2Edit> &sys,
                    const std::vector<clg::GoldEdit> &gold) {
  Counts c;
  for (const auto &e : sys) (MatchesGold(e, gold) ? c.tp : c.fp) += 1;
  for (const auto &g : gold) {
    bool hit = false;
    for (const auto &e : sys) {
      if (e.start != g.start || e.end != g.end) continue;
      for (const auto &cand : g.corrections) hit |= cand == e.correction;
    }
    if (!hit) ++c.fn;
  }
  return c;
}

inline double F(const Counts &c, double beta, double *p_out = nullptr,
                double *r_out = nullptr) {
  double p = c.tp + c.fp == 0 ? 1.0 : double(c.tp) / double(c.tp + c.fp);
  double r = c.tp + c.fn == 0 ? 1.0 : double(c.tp) / double(c.tp + c.fn);
  if (p_out) *p_out = p;
  if (r_out) *r_out = r;
  if (p * r == 0) return 0.0;
  return (1 + beta * beta) * p * r / (beta * beta * p + r);
}

struct CorpusScore {
  Counts counts;
  double p = 1, r = 1, f = 1;
  std::vector<int> chosen;
};

// Sequential running-F annotator choice; ties go to the lowest id.
inline CorpusScore Score(const std::vector<clg::M2Sentence> &gold,
                         const std::vector<Tokens> &hyps, double beta,
                         size_t max_unchanged) {
  CorpusScore s;
  for (size_t k = 0; k < gold.size(); ++k) {
    int chosen = -1;
    double chosen_f = -1;
    Counts chosen_c;
    for (const auto &[id, edits] : gold[k].annotators) {
      Counts c = Count(ExtractEdits(gold[k].source, hyps[k], edits, max_unchanged),
                       edits);
      Counts run{s.counts.tp + c.tp, s.counts.fp + c.fp, s.counts.fn + c.fn};
      double f = F(run, beta);
      if (f > chosen_f) {
        chosen_f = f;
        chosen = id;
        chosen_c = c;
      }
    }
    s.counts.tp += chosen_c.tp;
    s.counts.fp += chosen_c.fp;
    s.counts.fn += chosen_c.fn;
    s.chosen.push_back(chosen);
  }
  s.f = F(s.counts, beta, &s.p, &s.r);
  return s;
}

}  // namespace oracle

#endif  // CLG_TESTS_ORACLES_H_
