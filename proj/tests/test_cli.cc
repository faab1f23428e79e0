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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "clg/cli.h"
#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

const std::string kData = CLG_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  args.insert(args.begin(), "clg");
  std::ostringstream out, err;
  auto *old_out = std::cout.rdbuf(out.rdbuf());
  auto *old_err = std::cerr.rdbuf(err.rdbuf());
  int code = clg::Run(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("clg_cli_" + std::to_string(reinterpret_cast<uintptr_t>(this)) +
             "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string File(const std::string &name) const { return (path_ / name).string(); }
  std::string Write(const std::string &name, const std::string &text) const {
    std::ofstream(File(name)) << text;
    return File(name);
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string Slurp(const std::string &path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kCorpus = kData + "/fixture/corpus.txt";
const std::string kSeed = kData + "/seed";

}  // namespace

TEST_CASE("help exits zero") {
  unsetenv("CLG_RESOURCES");
  CHECK(Call({"--help"}).code == 0);
  for (const char *sub :
       {"filter", "generate", "augment", "stats", "score", "kappa", "sample"}) {
    auto r = Call({sub, "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--") != std::string::npos);
  }
  CHECK(Call({"generate", "--help"}).out.find("--combine-max") != std::string::npos);
}

TEST_CASE("usage errors exit two") {
  unsetenv("CLG_RESOURCES");
  auto no_res = Call({"generate", "--input", kCorpus});
  CHECK(no_res.code == 2);
  CHECK(no_res.err.rfind("error: usage:", 0) == 0);
  CHECK(Call({"generate", "--bogus"}).code == 2);
  CHECK(Call({}).code == 2);
  CHECK(Call({"score", "--hyp", "x"}).code == 2);
}

TEST_CASE("runtime and validation errors") {
  TempDir tmp;
  auto missing = Call({"--resources", kSeed, "generate", "--input",
                       tmp.File("missing.txt")});
  CHECK(missing.code == 1);
  CHECK(missing.err.rfind("error: io:", 0) == 0);
  CHECK(Call({"--resources", tmp.File("nowhere"), "generate", "--input", kCorpus})
            .code == 1);

  auto bad_m2 = tmp.Write("bad.m2", "S a b\nA 2 1|||R|||x|||REQUIRED|||-NONE-|||0\n");
  auto hyp = tmp.Write("hyp.txt", "a b\n");
  auto r = Call({"score", "--hyp", hyp, "--m2", bad_m2});
  CHECK(r.code == 3);
  CHECK(r.err.rfind("error: parse:", 0) == 0);

  auto gold = tmp.Write("gold.m2", "S a b\n\nS c d\n");
  CHECK(Call({"score", "--hyp", hyp, "--m2", gold}).code == 3);
}

TEST_CASE("score prints the three lines") {
  TempDir tmp;
  auto gold = tmp.Write("gold.m2",
                        "S a b c\nA 1 2|||R|||x|||REQUIRED|||-NONE-|||0\n\n"
                        "S d e\n");
  auto hyp = tmp.Write("hyp.txt", "a x c\nd e\n");
  auto r = Call({"score", "--hyp", hyp, "--m2", gold, "--json-out",
                 tmp.File("score.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "Precision : 1.0000\nRecall : 1.0000\nF_0.5 : 1.0000\n");
  auto j = nlohmann::json::parse(Slurp(tmp.File("score.json")));
  CHECK(j["tp"] == 1);

  auto chars = tmp.Write("chars.m2", "S 我 喜欢\n");
  auto chyp = tmp.Write("chyp.txt", "我喜欢\n");
  auto c = Call({"score", "--hyp", chyp, "--m2", chars, "--char-tokenize"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("Tokenization : characters\n", 0) == 0);
}

TEST_CASE("generate is deterministic") {
  TempDir tmp;
  auto run = [&](const std::string &name, const std::string &workers) {
    auto r = Call({"--resources", kSeed, "--seed", "42", "--workers", workers,
                   "generate", "--input", kCorpus, "--output", tmp.File(name),
                   "--report", tmp.File(name + ".report")});
    CHECK(r.code == 0);
    return Slurp(tmp.File(name));
  };
  auto a = run("a.jsonl", "1");
  CHECK(!a.empty());
  CHECK(run("b.jsonl", "1") == a);
  CHECK(run("c.jsonl", "8") == a);
  auto report = nlohmann::json::parse(Slurp(tmp.File("a.jsonl.report")));
  CHECK(report["sentences_read"] == 50);

  setenv("CLG_RESOURCES", kSeed.c_str(), 1);
  auto env = Call({"--seed", "42", "generate", "--input", kCorpus, "--output",
                   tmp.File("env.jsonl")});
  unsetenv("CLG_RESOURCES");
  CHECK(env.code == 0);
  CHECK(Slurp(tmp.File("env.jsonl")) == a);

  auto config = tmp.Write("clg.toml", "seed = 42\nresources = \"" + kSeed + "\"\n");
  auto cfg = Call({"--config", config, "generate", "--input", kCorpus, "--output",
                   tmp.File("cfg.jsonl")});
  CHECK(cfg.code == 0);
  CHECK(Slurp(tmp.File("cfg.jsonl")) == a);

  auto pretagged = Call({"--resources", kSeed, "--seed", "42", "generate",
                         "--pretagged", "--input",
                         kData + "/fixture/corpus.pretagged.txt", "--output",
                         tmp.File("pre.jsonl")});
  CHECK(pretagged.code == 0);
  CHECK(Slurp(tmp.File("pre.jsonl")) == a);
}

TEST_CASE("stats, augment, filter, sample and kappa") {
  TempDir tmp;
  REQUIRE(Call({"--resources", kSeed, "--seed", "1", "generate", "--input", kCorpus,
                "--output", tmp.File("pairs.jsonl")})
              .code == 0);
  auto stats = Call({"stats", "--input", tmp.File("pairs.jsonl")});
  CHECK(stats.code == 0);
  auto j = nlohmann::json::parse(stats.out);
  CHECK(j["corpus_stats"]["References / Sentence"] == 1.0);
  CHECK(j.contains("per_type_edit_stats"));

  auto aug = Call({"--resources", kSeed, "--seed", "3", "augment", "--input",
                   kCorpus, "--output", tmp.File("aug.jsonl"), "--report",
                   tmp.File("aug.json")});
  CHECK(aug.code == 0);
  auto ar = nlohmann::json::parse(Slurp(tmp.File("aug.json")));
  CHECK(ar["sentences_read"] == 50);
  CHECK(Call({"--resources", kSeed, "augment", "--input", kCorpus, "--p-keep",
              "0.5"}).code == 1);

  auto filtered = Call({"filter", "--input", kCorpus, "--keep", "90", "--output",
                        tmp.File("kept.txt"), "--save-model", tmp.File("lm.txt")});
  CHECK(filtered.code == 0);
  std::istringstream kept(Slurp(tmp.File("kept.txt")));
  size_t lines = 0;
  for (std::string line; std::getline(kept, line);) ++lines;
  CHECK(lines == 45);
  CHECK(Call({"filter", "--input", kCorpus, "--model", tmp.File("lm.txt"),
              "--keep", "90", "--output", tmp.File("kept2.txt")})
            .code == 0);
  CHECK(Slurp(tmp.File("kept2.txt")) == Slurp(tmp.File("kept.txt")));

  auto s1 = Call({"--seed", "5", "sample", "--input", kCorpus, "-n", "10"});
  auto s2 = Call({"--seed", "5", "sample", "--input", kCorpus, "-n", "10"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);

  auto matrix = tmp.Write("m.tsv", "2\t0\n1\t1\n");
  auto k = Call({"kappa", "--input", matrix});
  CHECK(k.code == 0);
  CHECK(k.out == "kappa : -0.333333\n");
  auto bad = tmp.Write("bad.tsv", "2\t0\n1\t2\n");
  CHECK(Call({"kappa", "--input", bad}).code == 3);
}
