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


#include "clg/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "clg/error.h"
#include "clg/generator.h"
#include "clg/lm.h"
#include "clg/m2.h"
#include "clg/metrics.h"
#include "clg/pair_io.h"
#include "clg/resources.h"
#include "clg/rng.h"
#include "clg/strings.h"
#include "clg/tagging.h"
#include "json.hpp"

namespace clg {
namespace {

Error UsageError(const std::string &msg) { return Error(ErrorKind::kUsage, msg); }

// `-` selects the standard streams.
class Output {
 public:
  explicit Output(const std::string &path) {
    if (path != "-") file_ = OpenOutput(path);
  }
  std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }
  void Close() {
    stream().flush();
    if (!stream()) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
};

class Input {
 public:
  explicit Input(const std::string &path) {
    if (path != "-") file_ = OpenInput(path);
  }
  std::istream &stream() { return file_.is_open() ? file_ : std::cin; }

 private:
  std::ifstream file_;
};

void WriteFile(const std::string &path, const std::string &text) {
  Output out(path);
  out.stream() << text << '\n';
  out.Close();
}

struct Globals {
  uint64_t seed = 0;
  std::string resources;
  int workers = 1;
};

struct TaggingFlags {
  bool pretagged = false;
  std::string lexicon;
  std::string tag_mapping;

  void Add(CLI::App *cmd) {
    cmd->add_flag("--pretagged", pretagged,
                  "Input lines are space-separated surface/TAG items");
    cmd->add_option("--lexicon", lexicon,
                    "Lexicon TSV (default: <resources>/lexicon.tsv)");
    cmd->add_option("--tag-mapping", tag_mapping,
                    "Tag mapping TSV (default: <resources>/tag_mapping.tsv "
                    "if present, else the shipped mapping)");
  }

  Tagger Build(const Globals &g) const {
    TaggerConfig config;
    config.mode = pretagged ? TaggerMode::kPretaggedInput
                            : TaggerMode::kBuiltinLexicon;
    namespace fs = std::filesystem;
    config.lexicon_path = lexicon;
    if (config.lexicon_path.empty() && !g.resources.empty()) {
      config.lexicon_path = (fs::path(g.resources) / "lexicon.tsv").string();
    }
    if (!pretagged && config.lexicon_path.empty()) {
      throw UsageError("--lexicon or --resources is required unless "
                       "--pretagged is given");
    }
    config.tag_mapping_path = tag_mapping;
    if (config.tag_mapping_path.empty() && !g.resources.empty()) {
      fs::path p = fs::path(g.resources) / "tag_mapping.tsv";
      if (fs::exists(p)) config.tag_mapping_path = p.string();
    }
    return Tagger::Create(config);
  }
};

std::map<std::string, double> ParseWeights(const std::vector<std::string> &items) {
  std::map<std::string, double> out;
  for (const std::string &item : items) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--weight expects rule_id=weight, got '" + item + "'");
    }
    try {
      size_t pos = 0;
      std::string value = item.substr(eq + 1);
      double w = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
      out[item.substr(0, eq)] = w;
    } catch (const std::logic_error &) {
      throw UsageError("bad weight in '" + item + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct FilterCmd {
  std::string input, output = "-", train, model, save_model;
  double keep = 90;
  int order = 3;
  double alpha = 1.0;

  void Run(const Globals &g) const {
    std::unique_ptr<NGramModel> lm;
    if (!model.empty()) {
      Input in(model);
      lm = std::make_unique<NGramModel>(NGramModel::Load(in.stream()));
    } else {
      const std::string &source = train.empty() ? input : train;
      if (source == "-") throw UsageError("--train is required when reading stdin");
      Input in(source);
      lm = std::make_unique<NGramModel>(LMConfig{order, alpha});
      size_t n = 0;
      std::string line;
      while (std::getline(in.stream(), line)) {
        ChompCr(&line);
        lm->Add(line);
        ++n;
      }
      if (n == 0) throw ConfigError("training corpus is empty");
    }
    if (!save_model.empty()) {
      Output out(save_model);
      lm->Save(out.stream());
      out.Close();
    }

    // Pass 1 scores sentences; pass 2 copies the kept ones.
    std::vector<double> ppl;
    std::vector<std::string> buffered;  // only for stdin
    {
      Input in(input);
      std::vector<std::string> batch;
      std::string line;
      auto flush = [&] {
        auto scores = ComputePerplexities(*lm, batch, g.workers);
        ppl.insert(ppl.end(), scores.begin(), scores.end());
        if (input == "-") {
          buffered.insert(buffered.end(), batch.begin(), batch.end());
        }
        batch.clear();
      };
      while (std::getline(in.stream(), line)) {
        ChompCr(&line);
        batch.push_back(line);
        if (batch.size() == 4096) flush();
      }
      flush();
    }
    std::vector<size_t> kept = SelectLowestPerplexity(ppl, keep);
    Output out(output);
    size_t next = 0;
    auto emit = [&](size_t index, const std::string &line) {
      if (next < kept.size() && kept[next] == index) {
        out.stream() << line << '\n';
        ++next;
      }
    };
    if (input == "-") {
      for (size_t i = 0; i < buffered.size(); ++i) emit(i, buffered[i]);
    } else {
      Input in(input);
      std::string line;
      for (size_t i = 0; std::getline(in.stream(), line); ++i) {
        ChompCr(&line);
        emit(i, line);
      }
    }
    out.Close();
  }
};

struct GenerateCmd {
  std::string input, output = "-", report, m2_out;
  TaggingFlags tagging;
  std::vector<std::string> rules, weights;
  int per_sentence = 1, combine_max = 1;

  void Run(const Globals &g) const {
    if (g.resources.empty()) {
      throw UsageError("generate requires --resources (or CLG_RESOURCES)");
    }
    RuleResources resources = LoadResources(g.resources);
    Tagger tagger = tagging.Build(g);
    GenConfig config;
    config.seed = g.seed;
    for (const std::string &r : rules) {
      for (std::string id : Split(r, ',')) {
        if (!Trim(id).empty()) config.enabled_rules.emplace_back(Trim(id));
      }
    }
    config.per_sentence = per_sentence;
    config.combine_max = combine_max;
    config.rule_weights = ParseWeights(weights);

    Input in(input);
    Output out(output);
    std::unique_ptr<Output> m2;
    if (!m2_out.empty()) m2 = std::make_unique<Output>(m2_out);
    GenerationReport rep = GenerateCorpus(
        in.stream(), tagger, resources, config, g.workers,
        [&](const CorpusPair &p) {
          out.stream() << SerializePair(p) << '\n';
          if (m2) WriteGoldM2(p, m2->stream());
        });
    out.Close();
    if (m2) m2->Close();
    if (!report.empty()) WriteFile(report, rep.ToJson());
  }
};

struct AugmentCmd {
  std::string input, output = "-", report, word_pool;
  TaggingFlags tagging;
  double p_keep = 0.70, p_insert = 0.10, p_replace = 0.10, p_delete = 0.10;

  void Run(const Globals &g) const {
    AugmentConfig config;
    config.seed = g.seed;
    config.p_keep = p_keep;
    config.p_insert = p_insert;
    config.p_replace = p_replace;
    config.p_delete = p_delete;
    std::string pool_path = word_pool;
    if (pool_path.empty() && !g.resources.empty()) {
      pool_path =
          (std::filesystem::path(g.resources) / "lexicon.tsv").string();
    }
    if (!pool_path.empty()) {
      std::ifstream in = OpenInput(pool_path, ErrorKind::kConfig);
      std::string line;
      while (std::getline(in, line)) {
        ChompCr(&line);
        if (line.empty() || line[0] == '#') continue;
        std::string word(Trim(line.substr(0, line.find('\t'))));
        if (!word.empty()) config.word_pool.push_back(word);
      }
    }
    Tagger tagger = tagging.Build(g);
    Input in(input);
    Output out(output);
    AugmentReport rep =
        AugmentCorpus(in.stream(), tagger, config, g.workers,
                      [&](const CorpusPair &p) {
                        out.stream() << SerializePair(p) << '\n';
                      });
    out.Close();
    if (!report.empty()) WriteFile(report, rep.ToJson());
  }
};

struct StatsCmd {
  std::string input, output = "-";

  void Run(const Globals &) const {
    Input in(input);
    StatsAccumulator stats;
    TypeEditAccumulator types;
    std::string line;
    for (size_t n = 1; std::getline(in.stream(), line); ++n) {
      ChompCr(&line);
      if (Trim(line).empty()) continue;
      CorpusPair pair;
      try {
        pair = ParsePair(line);
      } catch (const Error &e) {
        throw Error(e.kind(), "line " + std::to_string(n) + ": " + e.what());
      }
      stats.Add(pair);
      types.Add(pair);
    }
    nlohmann::ordered_json j;
    j["corpus_stats"] = nlohmann::ordered_json::parse(stats.Report().ToJson());
    j["per_type_edit_stats"] =
        nlohmann::ordered_json::parse(TypeEditTableToJson(types.Table()));
    WriteFile(output, j.dump(2));
  }
};

struct ScoreCmd {
  std::string hyp, m2, json_out;
  ScoreParams params;

  void Run(const Globals &) const {
    std::vector<M2Sentence> gold;
    {
      Input in(m2);
      gold = ParseM2(in.stream());
    }
    std::vector<std::string> hyps;
    {
      Input in(hyp);
      std::string line;
      while (std::getline(in.stream(), line)) {
        ChompCr(&line);
        hyps.push_back(line);
      }
    }
    ScoreReport report = ScoreCorpus(gold, hyps, params);
    if (params.char_tokenize) std::cout << "Tokenization : characters\n";
    std::cout << report.ToText();
    if (!json_out.empty()) WriteFile(json_out, report.ToJson());
  }
};

struct KappaCmd {
  std::string input = "-";

  void Run(const Globals &) const {
    Input in(input);
    std::vector<std::vector<uint64_t>> counts;
    std::string line;
    for (size_t n = 1; std::getline(in.stream(), line); ++n) {
      ChompCr(&line);
      if (Trim(line).empty() || Trim(line)[0] == '#') continue;
      std::vector<uint64_t> row;
      for (const std::string &cell : SplitWhitespace(line)) {
        try {
          size_t pos = 0;
          if (cell[0] == '-') throw std::invalid_argument(cell);
          row.push_back(std::stoull(cell, &pos));
          if (pos != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::logic_error &) {
          throw ParseError("line " + std::to_string(n) + ": bad count '" +
                           cell + "'");
        }
      }
      counts.push_back(std::move(row));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "kappa : %.6f\n", FleissKappa(counts));
    std::cout << buf;
  }
};

struct SampleCmd {
  std::string input, output = "-";
  size_t count = 1000;

  void Run(const Globals &g) const {
    Input in(input);
    Rng rng(g.seed);
    std::vector<std::pair<size_t, std::string>> reservoir;
    std::string line;
    for (size_t i = 0; std::getline(in.stream(), line); ++i) {
      ChompCr(&line);
      if (reservoir.size() < count) {
        reservoir.emplace_back(i, line);
      } else {
        size_t j = rng.Index(i + 1);
        if (j < count) reservoir[j] = {i, line};
      }
    }
    std::sort(reservoir.begin(), reservoir.end());
    Output out(output);
    for (const auto &[i, l] : reservoir) out.stream() << l << '\n';
    out.Close();
  }
};

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return kExitUsage;
    case ErrorKind::kValidation:
    case ErrorKind::kParse: return kExitValidation;
    case ErrorKind::kConfig:
    case ErrorKind::kIo: return kExitRuntime;
  }
  return kExitRuntime;
}

}  // namespace

int Run(int argc, const char *const *argv) {
  CLI::App app{"Chinese grammatical error corpus generation and evaluation",
               "clg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file supplying option values");

  Globals g;
  app.add_option("--seed", g.seed, "Seed for all randomness")->capture_default_str();
  app.add_option("--resources", g.resources, "Rule resource directory")
      ->envname("CLG_RESOURCES");
  app.add_option("--workers", g.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  FilterCmd filter;
  auto *f = app.add_subcommand("filter", "Keep the lowest-perplexity sentences");
  f->add_option("--input", filter.input, "Sentences, one per line")->required();
  f->add_option("--output", filter.output, "Kept sentences")->capture_default_str();
  f->add_option("--keep", filter.keep, "Percent of sentences to keep")
      ->check(CLI::Range(0.0, 100.0))->capture_default_str();
  f->add_option("--train", filter.train, "Training corpus (default: --input)");
  f->add_option("--model", filter.model, "Load a saved model instead of training");
  f->add_option("--save-model", filter.save_model, "Write the model to a file");
  f->add_option("--order", filter.order, "N-gram order")
      ->check(CLI::PositiveNumber)->capture_default_str();
  f->add_option("--alpha", filter.alpha, "Additive smoothing constant")
      ->check(CLI::PositiveNumber)->capture_default_str();

  GenerateCmd generate;
  auto *gen = app.add_subcommand("generate", "Generate labeled error pairs");
  gen->add_option("--input", generate.input, "Correct sentences, one per line")
      ->required();
  gen->add_option("--output", generate.output, "Pairs as JSON lines")
      ->capture_default_str();
  gen->add_option("--report", generate.report, "Generation report JSON");
  gen->add_option("--m2-out", generate.m2_out, "Gold edits as character M2");
  gen->add_option("--rules", generate.rules, "Enabled rule ids (comma list)");
  gen->add_option("--weight", generate.weights, "Rule weight as rule_id=w");
  gen->add_option("--per-sentence", generate.per_sentence, "Pairs tried per sentence")
      ->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--combine-max", generate.combine_max, "Max rules per pair")
      ->check(CLI::PositiveNumber)->capture_default_str();
  generate.tagging.Add(gen);

  AugmentCmd augment;
  auto *aug = app.add_subcommand("augment", "Random word-level augmentation baseline");
  aug->add_option("--input", augment.input, "Correct sentences, one per line")
      ->required();
  aug->add_option("--output", augment.output, "Pairs as JSON lines")
      ->capture_default_str();
  aug->add_option("--report", augment.report, "Operation counts JSON");
  aug->add_option("--word-pool", augment.word_pool,
                  "Words for insert/replace, first TSV column "
                  "(default: <resources>/lexicon.tsv)");
  aug->add_option("--p-keep", augment.p_keep)->capture_default_str();
  aug->add_option("--p-insert", augment.p_insert)->capture_default_str();
  aug->add_option("--p-replace", augment.p_replace)->capture_default_str();
  aug->add_option("--p-delete", augment.p_delete)->capture_default_str();
  augment.tagging.Add(aug);

  StatsCmd stats;
  auto *st = app.add_subcommand("stats", "Corpus and per-type edit statistics");
  st->add_option("--input", stats.input, "Pairs as JSON lines")->required();
  st->add_option("--output", stats.output, "Report JSON")->capture_default_str();

  ScoreCmd score;
  auto *sc = app.add_subcommand("score", "MaxMatch precision, recall and F");
  sc->add_option("--hyp", score.hyp, "System output, one tokenized sentence per line")
      ->required();
  sc->add_option("--m2", score.m2, "Gold M2 file")->required();
  sc->add_option("--json-out", score.json_out, "Score report JSON");
  sc->add_option("--beta", score.params.beta, "F beta")
      ->check(CLI::PositiveNumber)->capture_default_str();
  sc->add_option("--max-unchanged", score.params.max_unchanged,
                 "Unchanged tokens allowed inside a merged edit")
      ->capture_default_str();
  sc->add_flag("--char-tokenize", score.params.char_tokenize,
               "Score over characters instead of tokens");

  KappaCmd kappa;
  auto *ka = app.add_subcommand("kappa", "Fleiss' kappa of a rating-count matrix");
  ka->add_option("--input", kappa.input,
                 "One item per line: whitespace-separated category counts")
      ->capture_default_str();

  SampleCmd sample;
  auto *sa = app.add_subcommand("sample", "Reproducible uniform line sample");
  sa->add_option("--input", sample.input, "Lines to sample from")->required();
  sa->add_option("--output", sample.output, "Sampled lines in input order")
      ->capture_default_str();
  sa->add_option("-n,--count", sample.count, "Sample size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (f->parsed()) filter.Run(g);
    else if (gen->parsed()) generate.Run(g);
    else if (aug->parsed()) augment.Run(g);
    else if (st->parsed()) stats.Run(g);
    else if (sc->parsed()) score.Run(g);
    else if (ka->parsed()) kappa.Run(g);
    else if (sa->parsed()) sample.Run(g);
  } catch (const Error &e) {
    std::cerr << "error: " << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "error: runtime: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int Run(const std::vector<std::string> &args) {
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  return Run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace clg
