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

#include "clg/tagging.h"

#include <algorithm>

#include "clg/error.h"
#include "clg/strings.h"
#include "clg/utf8.h"

namespace clg {

// THULAC tag set.
TagMapping TagMapping::Default() {
  TagMapping m;
  static const std::pair<const char *, PosTag> kThulac[] = {
      {"n", PosTag::kNoun},   {"np", PosTag::kPropn}, {"ns", PosTag::kPropn},
      {"ni", PosTag::kPropn}, {"nz", PosTag::kPropn}, {"m", PosTag::kNum},
      {"q", PosTag::kNum},    {"mq", PosTag::kNum},   {"t", PosTag::kNoun},
      {"f", PosTag::kNoun},   {"s", PosTag::kNoun},   {"v", PosTag::kVerb},
      {"a", PosTag::kAdj},    {"d", PosTag::kAdv},    {"h", PosTag::kOther},
      {"k", PosTag::kOther},  {"i", PosTag::kOther},  {"j", PosTag::kNoun},
      {"r", PosTag::kPron},   {"c", PosTag::kCconj},  {"p", PosTag::kAdp},
      {"u", PosTag::kPart},   {"y", PosTag::kPart},   {"e", PosTag::kOther},
      {"o", PosTag::kOther},  {"g", PosTag::kOther},  {"w", PosTag::kPunct},
      {"x", PosTag::kOther},
  };
  for (const auto &[ext, tag] : kThulac) m.Set(ext, tag);
  return m;
}

TagMapping TagMapping::Load(const std::string &path) {
  TagMapping m = Default();
  std::ifstream in = OpenInput(path, ErrorKind::kConfig);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    ChompCr(&line);
    if (Trim(line).empty() || line[0] == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected `external<TAB>TAG`");
    }
    auto tag = ParseCanonicalPosTag(Trim(fields[1]));
    if (!tag) {
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": unknown target tag `" + fields[1] + "`");
    }
    m.Set(fields[0], *tag);
  }
  return m;
}

PosTag TagMapping::Resolve(std::string_view tag) const {
  auto it = map_.find(std::string(tag));
  if (it != map_.end()) return it->second;
  return PosTagFromName(tag);
}

Lexicon Lexicon::Load(const std::string &path, const TagMapping &mapping) {
  Lexicon lex;
  std::ifstream in = OpenInput(path, ErrorKind::kConfig);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    ChompCr(&line);
    if (Trim(line).empty() || line[0] == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected `surface<TAB>tag`");
    }
    lex.Add(fields[0], mapping.Resolve(Trim(fields[1])));
  }
  return lex;
}

bool Lexicon::Add(std::string_view surface, PosTag tag) {
  std::u32string key = DecodeUtf8(surface);
  if (key.empty()) return false;
  auto [it, inserted] = entries_.emplace(key, tag);
  if (inserted) max_length_ = std::max(max_length_, key.size());
  return inserted;
}

std::optional<PosTag> Lexicon::Find(std::u32string_view surface) const {
  auto it = entries_.find(std::u32string(surface));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

TaggedSentence SegmentAndTag(std::string_view raw, const Lexicon &lexicon) {
  TaggedSentence s;
  s.text = std::string(raw);
  const std::u32string cps = DecodeUtf8(raw);
  size_t i = 0;
  while (i < cps.size()) {
    if (IsSpace(cps[i])) {
      ++i;
      continue;
    }
    size_t longest = std::min(lexicon.max_length(), cps.size() - i);
    size_t len = 0;
    PosTag tag = PosTag::kOther;
    for (size_t l = longest; l >= 1; --l) {
      std::u32string_view cand(cps.data() + i, l);
      if (cand.find_first_of(U" \t　") != std::u32string_view::npos)
        continue;
      if (auto t = lexicon.Find(cand)) {
        len = l;
        tag = *t;
        break;
      }
    }
    if (len == 0) len = 1;  // unknown character
    s.tokens.push_back(
        {EncodeUtf8(std::u32string_view(cps.data() + i, len)), tag, i, i + len});
    i += len;
  }
  return s;
}

TaggedSentence ParsePretagged(std::string_view line, const TagMapping &mapping) {
  std::vector<Word> words;
  auto items = SplitWhitespace(line);
  for (size_t k = 0; k < items.size(); ++k) {
    const std::string &item = items[k];
    size_t slash = item.rfind('/');
    if (slash == std::string::npos) {
      throw ParseError("pretagged item " + std::to_string(k) + " `" + item +
                       "` has no tag separator");
    }
    if (slash == 0) {
      throw ParseError("pretagged item " + std::to_string(k) + " `" + item +
                       "` has an empty surface");
    }
    words.push_back({item.substr(0, slash),
                     mapping.Resolve(std::string_view(item).substr(slash + 1))});
  }
  return BuildSentence(words);
}

std::string SerializePretagged(const TaggedSentence &sentence) {
  std::string out;
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i) out += ' ';
    out += sentence.tokens[i].surface;
    out += '/';
    out += PosTagName(sentence.tokens[i].tag);
  }
  return out;
}

Tagger Tagger::Create(const TaggerConfig &config) {
  TagMapping mapping = config.tag_mapping_path.empty()
                           ? TagMapping::Default()
                           : TagMapping::Load(config.tag_mapping_path);
  Lexicon lexicon;
  if (config.mode == TaggerMode::kBuiltinLexicon) {
    if (config.lexicon_path.empty()) {
      throw ConfigError("lexicon tagger requires a lexicon file");
    }
    lexicon = Lexicon::Load(config.lexicon_path, mapping);
  }
  return Tagger(config.mode, std::move(lexicon), std::move(mapping));
}

TaggedSentence Tagger::Tag(std::string_view line) const {
  if (mode_ == TaggerMode::kPretaggedInput) return ParsePretagged(line, mapping_);
  return SegmentAndTag(line, lexicon_);
}

// ---------------------------------------------------------------------------
// Component identification.

bool IsNominal(PosTag tag) {
  return tag == PosTag::kNoun || tag == PosTag::kPron || tag == PosTag::kPropn;
}

bool IsDe(const Token &token) {
  return token.tag == PosTag::kPart && token.surface == "的";
}

bool IsAspectMarker(const Token &token) {
  return token.tag == PosTag::kPart &&
         (token.surface == "了" || token.surface == "着" ||
          token.surface == "过");
}

namespace {

bool IsPhraseTag(PosTag tag) {
  return IsNominal(tag) || tag == PosTag::kAdj || tag == PosTag::kNum;
}

// Token that may sit inside a noun phrase at position i.
bool InPhrase(const TaggedSentence &s, size_t i, size_t limit) {
  const Token &t = s[i];
  if (IsPhraseTag(t.tag) || IsDe(t)) return true;
  // Degree adverb inside a modifier: 最重要, 非常美丽.
  return t.tag == PosTag::kAdv && i + 1 < limit && s[i + 1].tag == PosTag::kAdj;
}

bool IsComplementMarker(const Token &t) {
  return t.tag == PosTag::kPart && t.surface == "得";
}

std::optional<size_t> FindPredicate(const TaggedSentence &s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].tag != PosTag::kVerb) continue;
    if (i > 0 && IsDe(s[i - 1])) continue;
    if (i + 1 < s.size() && IsDe(s[i + 1])) continue;
    return i;
  }
  return std::nullopt;
}

// 的-terminated modifier segments of a noun phrase.
std::vector<TokenRange> AttributesOf(const TaggedSentence &s,
                                     TokenRange phrase) {
  std::vector<TokenRange> out;
  size_t seg = phrase.begin;
  bool first = true;
  for (size_t i = phrase.begin; i < phrase.end; ++i) {
    if (!IsDe(s[i])) continue;
    size_t b = seg;
    if (first) {
      // Leading determiners (这, 首, 一个) are not part of the modifier.
      while (b + 1 < i && (s[b].tag == PosTag::kPron || s[b].tag == PosTag::kNum))
        ++b;
    }
    if (b < i) out.push_back({b, i + 1});
    seg = i + 1;
    first = false;
  }
  return out;
}

}  // namespace

TokenRange ClauseOf(const TaggedSentence &s, size_t i) {
  size_t b = i, e = i;
  while (b > 0 && s[b - 1].tag != PosTag::kPunct) --b;
  while (e < s.size() && s[e].tag != PosTag::kPunct) ++e;
  return {b, e};
}

TokenRange HeadOf(const TaggedSentence &s, TokenRange phrase) {
  size_t e = phrase.end;
  while (e > phrase.begin && !IsNominal(s[e - 1].tag)) --e;
  size_t b = e;
  while (b > phrase.begin && IsNominal(s[b - 1].tag)) --b;
  return {b, e};
}

TokenRange NounPhraseBefore(const TaggedSentence &s, size_t end, size_t limit) {
  if (end <= limit || end > s.size() || !IsNominal(s[end - 1].tag)) {
    return {end, end};
  }
  size_t b = end;
  while (b > limit && InPhrase(s, b - 1, end)) --b;
  while (b < end && (IsDe(s[b]) || s[b].tag == PosTag::kAdv)) ++b;
  return {b, end};
}

TokenRange NounPhraseAt(const TaggedSentence &s, size_t begin, size_t limit) {
  size_t i = begin;
  size_t end = begin;
  while (i < limit) {
    if (InPhrase(s, i, limit)) {
      if (IsDe(s[i]) && i == begin) break;
      if (IsNominal(s[i].tag)) end = i + 1;
      ++i;
      continue;
    }
    // Short relative clause: 千古传诵的篇章, 父母最关心的问题.
    bool absorbed = false;
    if (s[i].tag == PosTag::kVerb || s[i].tag == PosTag::kAdv) {
      for (size_t len = 1; len <= 2 && !absorbed; ++len) {
        size_t d = i + len;
        if (d + 1 >= limit || !IsDe(s[d]) || !InPhrase(s, d + 1, limit))
          continue;
        bool has_verb = false, ok = true;
        for (size_t k = i; k < d; ++k) {
          PosTag t = s[k].tag;
          if (t == PosTag::kVerb) has_verb = true;
          if (t != PosTag::kVerb && t != PosTag::kAdv && t != PosTag::kAdj &&
              t != PosTag::kNoun) {
            ok = false;
          }
        }
        if (ok && has_verb) {
          i = d + 1;
          absorbed = true;
        }
      }
    }
    if (!absorbed) break;
  }
  return {begin, std::max(begin, end)};
}

RoleSpans IdentifyRoles(const TaggedSentence &s) {
  RoleSpans roles;
  if (s.empty()) return roles;

  auto add_attributes = [&](TokenRange phrase) {
    for (TokenRange a : AttributesOf(s, phrase))
      roles[SyntacticRole::kAttribute].push_back(a);
  };

  std::optional<size_t> pred = FindPredicate(s);
  if (!pred) {
    size_t b = 0;
    while (b < s.size() && !InPhrase(s, b, s.size())) ++b;
    if (b < s.size()) {
      TokenRange np = NounPhraseAt(s, b, ClauseOf(s, b).end);
      if (!np.empty()) {
        roles[SyntacticRole::kSubject].push_back(np);
        add_attributes(np);
      }
    }
    return roles;
  }

  const size_t p = *pred;
  const TokenRange clause = ClauseOf(s, p);
  roles[SyntacticRole::kPredicate].push_back({p, p + 1});

  // Adverbials, scanning leftwards from the predicate.
  std::vector<TokenRange> adverbials;
  size_t k = p;
  while (k > clause.begin) {
    const Token &prev = s[k - 1];
    if (prev.tag == PosTag::kAdv) {
      adverbials.push_back({k - 1, k});
      --k;
      continue;
    }
    if (prev.tag == PosTag::kX) {  // auxiliary verbs are transparent
      --k;
      continue;
    }
    size_t a = k - 1;
    while (a > clause.begin) {
      PosTag t = s[a].tag;
      if (t == PosTag::kVerb || t == PosTag::kAdv || t == PosTag::kX ||
          t == PosTag::kAdp || t == PosTag::kCconj)
        break;
      --a;
    }
    if (s[a].tag == PosTag::kAdp && a + 1 < k) {
      adverbials.push_back({a, k});
      k = a;
      continue;
    }
    break;
  }
  std::reverse(adverbials.begin(), adverbials.end());

  TokenRange subject = NounPhraseBefore(s, k, clause.begin);
  if (subject.empty() && clause.begin > 0) {
    // Clause without its own subject shares the sentence-initial one.
    TokenRange first = ClauseOf(s, 0);
    if (!first.empty() && InPhrase(s, 0, first.end))
      subject = NounPhraseAt(s, 0, first.end);
  }
  if (!subject.empty()) {
    roles[SyntacticRole::kSubject].push_back(subject);
    add_attributes(subject);
  }
  roles[SyntacticRole::kAdverbial] = adverbials;

  size_t next = p + 1;
  if (next < clause.end && IsComplementMarker(s[next])) {
    size_t r = next + 1;
    while (r < clause.end &&
           (s[r].tag == PosTag::kAdv || s[r].tag == PosTag::kAdj ||
            s[r].tag == PosTag::kVerb))
      ++r;
    if (r > next + 1) {
      roles[SyntacticRole::kComplement].push_back({next, r});
      next = r;
    }
  }
  while (next < clause.end && IsAspectMarker(s[next])) ++next;
  if (next < clause.end) {
    TokenRange object = NounPhraseAt(s, next, clause.end);
    if (!object.empty()) {
      roles[SyntacticRole::kObject].push_back(object);
      add_attributes(object);
    }
  }

  std::sort(roles[SyntacticRole::kAttribute].begin(),
            roles[SyntacticRole::kAttribute].end(),
            [](TokenRange a, TokenRange b) { return a.begin < b.begin; });
  return roles;
}

}  // namespace clg
