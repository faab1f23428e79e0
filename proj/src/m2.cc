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


#include "clg/m2.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <tuple>

#include "clg/error.h"
#include "clg/strings.h"
#include "clg/utf8.h"
#include "json.hpp"

namespace clg {
namespace {

constexpr std::string_view kNone = "-NONE-";

size_t ParseOffset(const std::string &text, size_t line_no) {
  try {
    size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    if (v < -1) throw std::out_of_range(text);
    return v < 0 ? static_cast<size_t>(-1) : static_cast<size_t>(v);
  } catch (const std::logic_error &) {
    throw ParseError("m2 line " + std::to_string(line_no) +
                     ": bad offset '" + text + "'");
  }
}

void ParseEditLine(std::string_view body, size_t line_no, M2Sentence *s) {
  std::vector<std::string> fields;
  size_t pos = 0;
  while (true) {
    size_t bar = body.find("|||", pos);
    fields.emplace_back(body.substr(pos, bar - pos));
    if (bar == std::string_view::npos) break;
    pos = bar + 3;
  }
  if (fields.size() < 3) {
    throw ParseError("m2 line " + std::to_string(line_no) +
                     ": expected 'start end|||type|||correction|||...'");
  }
  std::vector<std::string> span = SplitWhitespace(fields[0]);
  if (span.size() != 2) {
    throw ParseError("m2 line " + std::to_string(line_no) +
                     ": expected two offsets");
  }
  const size_t start = ParseOffset(span[0], line_no);
  const size_t end = ParseOffset(span[1], line_no);
  int annotator = 0;
  if (fields.size() >= 6) {
    try {
      annotator = std::stoi(std::string(Trim(fields[5])));
    } catch (const std::logic_error &) {
      throw ParseError("m2 line " + std::to_string(line_no) +
                       ": bad annotator id '" + fields[5] + "'");
    }
  }
  auto &edits = s->annotators[annotator];
  const bool noop_span = start == static_cast<size_t>(-1) ||
                         end == static_cast<size_t>(-1);
  if (noop_span) {
    if (start != end) {
      throw ParseError("m2 line " + std::to_string(line_no) +
                       ": -1 offsets must come in pairs");
    }
    return;
  }
  if (start > end) {
    throw ParseError("m2 line " + std::to_string(line_no) + ": start " +
                     std::to_string(start) + " > end " + std::to_string(end));
  }
  if (end > s->source.size()) {
    throw ParseError("m2 line " + std::to_string(line_no) + ": end " +
                     std::to_string(end) + " beyond sentence length " +
                     std::to_string(s->source.size()));
  }
  const std::string correction(Trim(fields[2]));
  if (correction == kNone || Trim(fields[1]) == "noop") return;
  GoldEdit g{start, end, {}};
  size_t p = 0;
  while (true) {
    size_t bar = correction.find("||", p);
    std::string alt(correction.substr(p, bar - p));
    g.corrections.push_back(Join(SplitWhitespace(alt), " "));
    if (bar == std::string::npos) break;
    p = bar + 2;
  }
  edits.push_back(std::move(g));
}

// Alignment lattice over all minimal-cost token alignments.
class Lattice {
 public:
  Lattice(const std::vector<std::string> &src,
          const std::vector<std::string> &hyp)
      : src_(src), hyp_(hyp), n_(src.size()), m_(hyp.size()),
        fwd_((n_ + 1) * (m_ + 1)), bwd_((n_ + 1) * (m_ + 1)) {
    for (size_t i = 0; i <= n_; ++i) {
      for (size_t j = 0; j <= m_; ++j) {
        size_t best = (i == 0 && j == 0) ? 0 : SIZE_MAX;
        if (i > 0 && j > 0) best = std::min(best, fwd_[Id(i - 1, j - 1)] + Sub(i - 1, j - 1));
        if (i > 0) best = std::min(best, fwd_[Id(i - 1, j)] + 1);
        if (j > 0) best = std::min(best, fwd_[Id(i, j - 1)] + 1);
        fwd_[Id(i, j)] = best;
      }
    }
    for (size_t i = n_ + 1; i-- > 0;) {
      for (size_t j = m_ + 1; j-- > 0;) {
        size_t best = (i == n_ && j == m_) ? 0 : SIZE_MAX;
        if (i < n_ && j < m_) best = std::min(best, bwd_[Id(i + 1, j + 1)] + Sub(i, j));
        if (i < n_) best = std::min(best, bwd_[Id(i + 1, j)] + 1);
        if (j < m_) best = std::min(best, bwd_[Id(i, j + 1)] + 1);
        bwd_[Id(i, j)] = best;
      }
    }
    total_ = bwd_[Id(0, 0)];
  }

  struct Step {
    size_t to;
    bool match;
  };

  // Optimal outgoing steps of node (i, j).
  std::vector<Step> Steps(size_t i, size_t j) const {
    std::vector<Step> out;
    const size_t here = fwd_[Id(i, j)];
    if (i < n_ && j < m_) {
      size_t c = Sub(i, j);
      if (here + c + bwd_[Id(i + 1, j + 1)] == total_)
        out.push_back({Id(i + 1, j + 1), c == 0});
    }
    if (i < n_ && here + 1 + bwd_[Id(i + 1, j)] == total_)
      out.push_back({Id(i + 1, j), false});
    if (j < m_ && here + 1 + bwd_[Id(i, j + 1)] == total_)
      out.push_back({Id(i, j + 1), false});
    return out;
  }

  bool OnLattice(size_t id) const { return fwd_[id] + bwd_[id] == total_; }
  size_t Id(size_t i, size_t j) const { return i * (m_ + 1) + j; }
  size_t I(size_t id) const { return id / (m_ + 1); }
  size_t J(size_t id) const { return id % (m_ + 1); }
  size_t size() const { return fwd_.size(); }
  size_t end_id() const { return Id(n_, m_); }

  std::string HypText(size_t j0, size_t j1) const {
    std::string out;
    for (size_t j = j0; j < j1; ++j) {
      if (j > j0) out += ' ';
      out += hyp_[j];
    }
    return out;
  }

 private:
  size_t Sub(size_t i, size_t j) const { return src_[i] == hyp_[j] ? 0 : 1; }

  const std::vector<std::string> &src_;
  const std::vector<std::string> &hyp_;
  size_t n_, m_;
  std::vector<size_t> fwd_, bwd_;
  size_t total_ = 0;
};

struct Best {
  bool valid = false;
  long tp = 0;
  long count = 0;
  std::vector<M2Edit> seq;
};

bool Better(long tp, long count, const std::vector<M2Edit> &seq,
            const Best &b) {
  if (!b.valid) return true;
  if (tp != b.tp) return tp > b.tp;
  if (count != b.count) return count < b.count;
  return seq < b.seq;
}

bool MatchesAny(const M2Edit &e, const std::vector<GoldEdit> &gold) {
  for (const GoldEdit &g : gold) {
    if (g.Matches(e)) return true;
  }
  return false;
}

std::string FormatBeta(double beta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", beta);
  return buf;
}

}  // namespace

bool GoldEdit::Matches(const M2Edit &e) const {
  if (e.start != start || e.end != end) return false;
  return std::find(corrections.begin(), corrections.end(), e.correction) !=
         corrections.end();
}

std::vector<M2Sentence> ParseM2(std::istream &in) {
  std::vector<M2Sentence> out;
  std::string line;
  size_t line_no = 0;
  bool open = false;
  while (std::getline(in, line)) {
    ++line_no;
    ChompCr(&line);
    if (Trim(line).empty()) {
      open = false;
      continue;
    }
    if (line.rfind("S", 0) == 0 && (line.size() == 1 || line[1] == ' ')) {
      M2Sentence s;
      s.source = SplitWhitespace(std::string_view(line).substr(1));
      out.push_back(std::move(s));
      open = true;
    } else if (line.rfind("A ", 0) == 0) {
      if (!open) {
        throw ParseError("m2 line " + std::to_string(line_no) +
                         ": A line outside a sentence block");
      }
      ParseEditLine(std::string_view(line).substr(2), line_no, &out.back());
    } else {
      throw ParseError("m2 line " + std::to_string(line_no) +
                       ": expected an S or A line");
    }
  }
  if (in.bad()) throw IoError("m2 read failed");
  for (M2Sentence &s : out) {
    if (s.annotators.empty()) s.annotators[0];
  }
  return out;
}

std::vector<M2Edit> ExtractSystemEdits(const std::vector<std::string> &source,
                                       const std::vector<std::string> &hyp,
                                       const std::vector<GoldEdit> &gold,
                                       const ScoreParams &params) {
  if (source == hyp) return {};
  Lattice lat(source, hyp);
  const size_t nodes = lat.size();
  std::vector<std::vector<Lattice::Step>> steps(nodes);
  for (size_t id = 0; id < nodes; ++id) {
    if (lat.OnLattice(id)) steps[id] = lat.Steps(lat.I(id), lat.J(id));
  }

  // best[u]: optimum from node u to the end outside any edit. best_nonempty
  // additionally bars an edit with an empty source span starting at u, so
  // two insertions at one position are never split into equal spans.
  std::vector<Best> best(nodes), best_nonempty(nodes);
  std::vector<size_t> order;
  for (size_t id = 0; id < nodes; ++id) {
    if (lat.OnLattice(id)) order.push_back(id);
  }
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return lat.I(a) + lat.J(a) > lat.I(b) + lat.J(b);
  });

  const size_t k_max = params.max_unchanged;
  for (size_t u : order) {
    Best &b = best[u];
    Best &bn = best_nonempty[u];
    if (u == lat.end_id()) {
      b.valid = bn.valid = true;
      continue;
    }
    auto offer = [](Best &target, long tp, long count,
                    std::vector<M2Edit> &&seq) {
      if (Better(tp, count, seq, target)) {
        target.valid = true;
        target.tp = tp;
        target.count = count;
        target.seq = std::move(seq);
      }
    };
    for (const auto &st : steps[u]) {
      if (!st.match || !best[st.to].valid) continue;
      const Best &next = best[st.to];
      offer(b, next.tp, next.count, std::vector<M2Edit>(next.seq));
      offer(bn, next.tp, next.count, std::vector<M2Edit>(next.seq));
    }

    // Edit end nodes reachable from u: paths that open with a change, close
    // with a change, and pass at most k_max matches.
    std::set<size_t> ends;
    std::set<std::tuple<size_t, size_t, bool>> seen;
    std::vector<std::tuple<size_t, size_t, bool>> stack;
    for (const auto &st : steps[u]) {
      if (!st.match) stack.emplace_back(st.to, 0, true);
    }
    while (!stack.empty()) {
      auto state = stack.back();
      stack.pop_back();
      if (!seen.insert(state).second) continue;
      auto [v, k, changed] = state;
      if (changed) ends.insert(v);
      for (const auto &st : steps[v]) {
        if (st.match) {
          if (k < k_max) stack.emplace_back(st.to, k + 1, false);
        } else {
          stack.emplace_back(st.to, k, true);
        }
      }
    }
    for (size_t w : ends) {
      M2Edit e{lat.I(u), lat.I(w), lat.HypText(lat.J(u), lat.J(w))};
      const bool empty_span = e.start == e.end;
      const Best &next = empty_span ? best_nonempty[w] : best[w];
      if (!next.valid) continue;
      std::vector<M2Edit> seq;
      seq.reserve(next.seq.size() + 1);
      seq.push_back(e);
      seq.insert(seq.end(), next.seq.begin(), next.seq.end());
      const long tp = next.tp + (MatchesAny(e, gold) ? 1 : 0);
      if (!empty_span) {
        offer(bn, tp, next.count + 1, std::vector<M2Edit>(seq));
      }
      offer(b, tp, next.count + 1, std::move(seq));
    }
  }
  return best[lat.Id(0, 0)].seq;
}

MatchCounts CountMatches(const std::vector<M2Edit> &system,
                         const std::vector<GoldEdit> &gold) {
  MatchCounts c;
  for (const M2Edit &e : system) {
    if (MatchesAny(e, gold)) ++c.tp; else ++c.fp;
  }
  for (const GoldEdit &g : gold) {
    bool hit = false;
    for (const M2Edit &e : system) hit |= g.Matches(e);
    if (!hit) ++c.fn;
  }
  return c;
}

Prf ComputePrf(const MatchCounts &c, double beta) {
  Prf r;
  r.precision = c.tp + c.fp == 0 ? 1.0
                                 : static_cast<double>(c.tp) /
                                       static_cast<double>(c.tp + c.fp);
  r.recall = c.tp + c.fn == 0 ? 1.0
                              : static_cast<double>(c.tp) /
                                    static_cast<double>(c.tp + c.fn);
  const double b2 = beta * beta;
  r.f = r.precision * r.recall == 0
            ? 0.0
            : (1 + b2) * r.precision * r.recall / (b2 * r.precision + r.recall);
  return r;
}

std::string ScoreReport::ToText() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "Precision : %.4f\nRecall : %.4f\nF_%s : %.4f\n",
                prf.precision, prf.recall, FormatBeta(beta).c_str(), prf.f);
  return buf;
}

std::string ScoreReport::ToJson() const {
  nlohmann::ordered_json j;
  j["tp"] = counts.tp;
  j["fp"] = counts.fp;
  j["fn"] = counts.fn;
  j["precision"] = prf.precision;
  j["recall"] = prf.recall;
  j["f_beta"] = prf.f;
  j["beta"] = beta;
  j["char_tokenize"] = char_tokenize;
  j["chosen_annotators"] = chosen_annotators;
  return j.dump(2);
}

std::vector<std::string> CharTokens(std::string_view text) {
  std::vector<std::string> out;
  for (char32_t c : DecodeUtf8(text)) {
    if (IsSpace(c)) continue;
    out.push_back(EncodeUtf8(std::u32string(1, c)));
  }
  return out;
}

M2Sentence CharTokenize(const M2Sentence &sentence) {
  M2Sentence out;
  std::vector<size_t> offset{0};
  for (const std::string &tok : sentence.source) {
    for (auto &c : CharTokens(tok)) out.source.push_back(std::move(c));
    offset.push_back(out.source.size());
  }
  for (const auto &[id, edits] : sentence.annotators) {
    auto &dst = out.annotators[id];
    for (const GoldEdit &g : edits) {
      GoldEdit c{offset[g.start], offset[g.end], {}};
      for (const std::string &alt : g.corrections) {
        c.corrections.push_back(Join(CharTokens(alt), " "));
      }
      dst.push_back(std::move(c));
    }
  }
  return out;
}

ScoreReport ScoreCorpus(const std::vector<M2Sentence> &gold,
                        const std::vector<std::string> &hypotheses,
                        const ScoreParams &params) {
  if (gold.size() != hypotheses.size()) {
    throw ValidationError("hypothesis count " +
                          std::to_string(hypotheses.size()) +
                          " does not match gold sentence count " +
                          std::to_string(gold.size()));
  }
  ScoreReport report;
  report.beta = params.beta;
  report.char_tokenize = params.char_tokenize;
  for (size_t s = 0; s < gold.size(); ++s) {
    const M2Sentence sentence =
        params.char_tokenize ? CharTokenize(gold[s]) : gold[s];
    std::vector<std::string> hyp = params.char_tokenize
                                       ? CharTokens(hypotheses[s])
                                       : SplitWhitespace(hypotheses[s]);
    if (!params.char_tokenize && hyp.size() == 1 &&
        sentence.source.size() >= 2) {
      size_t longest = 0;
      for (const auto &t : sentence.source) {
        longest = std::max(longest, Utf8Length(t));
      }
      if (Utf8Length(hyp[0]) > longest) {
        throw ValidationError("hypothesis " + std::to_string(s + 1) +
                              " is not segmented like the gold source; "
                              "use character tokenization");
      }
    }
    int chosen = -1;
    MatchCounts chosen_counts;
    double chosen_f = -1;
    for (const auto &[id, edits] : sentence.annotators) {
      auto system = ExtractSystemEdits(sentence.source, hyp, edits, params);
      MatchCounts c = CountMatches(system, edits);
      MatchCounts running{report.counts.tp + c.tp, report.counts.fp + c.fp,
                          report.counts.fn + c.fn};
      double f = ComputePrf(running, params.beta).f;
      if (f > chosen_f) {
        chosen = id;
        chosen_f = f;
        chosen_counts = c;
      }
    }
    report.counts.tp += chosen_counts.tp;
    report.counts.fp += chosen_counts.fp;
    report.counts.fn += chosen_counts.fn;
    report.chosen_annotators.push_back(chosen);
  }
  report.prf = ComputePrf(report.counts, params.beta);
  return report;
}

void WriteGoldM2(const CorpusPair &pair, std::ostream &out) {
  std::vector<std::string> chars = CharTokens(pair.incorrect);
  if (chars.size() != Utf8Length(pair.incorrect)) {
    throw ValidationError("pair " + pair.id +
                          ": whitespace in text cannot be char-tokenized");
  }
  out << "S " << Join(chars, " ") << '\n';
  const std::string type =
      pair.error_types.empty() ? "edit"
                               : CoarseTypeName(pair.error_types[0].coarse);
  if (pair.edits.empty()) {
    out << "A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n";
  }
  for (const EditSpan &e : pair.edits) {
    out << "A " << e.start << ' ' << e.end << "|||" << type << "|||"
        << Join(CharTokens(e.replacement), " ") << "|||REQUIRED|||-NONE-|||0\n";
  }
  out << '\n';
}

}  // namespace clg
