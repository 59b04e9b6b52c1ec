// Copyright 2026 The Centering Kit Authors.
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

// Drives the centering-kit executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

std::string Data(const std::string &name) {
  return std::string(CENTERING_TEST_DATA_DIR) + "/" + name;
}

std::string Slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("centering_cli_") + info->name() + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result Run(const std::string &args) {
    const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd = std::string(CENTERING_KIT_CLI) + " " + args +
                            " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    Result r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = Slurp(out);
    r.err = Slurp(err);
    return r;
  }

  std::string Out(const std::string &name) { return (dir_ / name).string(); }
  std::string Write(const std::string &name, const std::string &content) {
    std::ofstream(dir_ / name, std::ios::binary) << content;
    return Out(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, ScoreWorkedExample) {
  Result r = Run("--aggregator sum --cf-candidate include_singleton -o " +
                 Out("s") + " score " + Data("john_mike.conll"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string csv = Slurp(dir_ / "s" / "scores.csv");
  EXPECT_NE(csv.find("worked/john_mike:0,4,1.000000,1.000000,0.500000,"
                     "0.750000,3.250000,2,1,1,0"),
            std::string::npos)
      << csv;
  std::istringstream frames(Slurp(dir_ / "s" / "frames.jsonl"));
  std::string line;
  int count = 0;
  while (std::getline(frames, line)) {
    auto j = nlohmann::json::parse(line);
    for (const char *k : {"ordinal", "cf", "cp", "cb", "transition"}) {
      EXPECT_TRUE(j.contains(k)) << k;
    }
    ++count;
  }
  EXPECT_EQ(count, 5);
  auto manifest = nlohmann::json::parse(Slurp(dir_ / "s" / "manifest.json"));
  EXPECT_EQ(manifest["command"], "score");
  EXPECT_EQ(manifest["config"]["aggregator"], "sum");
  EXPECT_EQ(manifest["manifest_hash"].get<std::string>().size(), 16u);
}

TEST_F(CliTest, SemanticWithoutSrlWarnsAndFallsBack) {
  Result r = Run("--weighting semantic -o " + Out("s") + " score " +
                 Data("nocb_fixture.conll"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.err.find("has no SRL columns"), std::string::npos) << r.err;
  // The fallback ranks everything as Other, so scores still come out.
  EXPECT_NE(Slurp(dir_ / "s" / "scores.csv").find("fixture/nocb_three:0"),
            std::string::npos);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  Result missing = Run("-o " + Out("x") + " score " + Data("no_such.conll"));
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_NE(missing.err.find("no_such.conll"), std::string::npos);
  Result bad = Run("-o " + Out("x") + " score " + Data("bad/unclosed.conll"));
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.err.find("unclosed.conll:"), std::string::npos) << bad.err;
}

TEST_F(CliTest, EmptyCorpusExitsThree) {
  const std::string empty = Write("empty.conll", "");
  EXPECT_EQ(Run("-o " + Out("x") + " score " + empty).exit_code, 3);
  EXPECT_EQ(Run("-o " + Out("x") + " permute " + empty).exit_code, 3);
}

TEST_F(CliTest, PermuteSkipsEverythingExitsThree) {
  const std::string single = Write("single.conll",
                                   "#begin document (one); part 000\n"
                                   "one 0 Anna NNP/S (1)\n"
                                   "one 0 slept VBD -\n"
                                   "\n"
                                   "#end document\n");
  Result r = Run("-o " + Out("x") + " permute " + single);
  EXPECT_EQ(r.exit_code, 3) << r.err;
  EXPECT_NE(r.err.find("skipped"), std::string::npos) << r.err;
}

TEST_F(CliTest, PermuteOracleAndSummary) {
  Result r = Run("-o " + Out("p") + " permute --metric nocb " +
                 Data("nocb_fixture.conll"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string csv = Slurp(dir_ / "p" / "coherence.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "doc_id,metric,n_utt,worse,equal,better,ch");
  EXPECT_NE(csv.find("fixture/nocb_three:0,nocb,3,2,3,0,70.000000"),
            std::string::npos)
      << csv;
  EXPECT_NE(r.out.find("nocb,60.000000,2,0"), std::string::npos) << r.out;
}

TEST_F(CliTest, PermuteAllMetricsGivesSixRowsPerDocument) {
  Result r = Run("-o " + Out("p") + " permute --metric all " +
                 Data("nocb_fixture.conll"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::istringstream csv(Slurp(dir_ / "p" / "coherence.csv"));
  std::string line;
  int rows = 0;
  std::getline(csv, line);
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 12);
}

TEST_F(CliTest, SeededRunsAreByteIdentical) {
  const std::string corpus = Data("synthetic/coherent50_noise25.conll");
  ASSERT_EQ(Run("--seed 9 -j 1 -o " + Out("a") +
                " permute --mode sampled --sample-size 20 -m kp,tran " + corpus)
                .exit_code,
            0);
  ASSERT_EQ(Run("--seed 9 -j 4 -o " + Out("b") +
                " permute --mode sampled --sample-size 20 -m kp,tran " + corpus)
                .exit_code,
            0);
  for (const char *f : {"coherence.csv", "summary.csv", "manifest.json"}) {
    EXPECT_EQ(Slurp(dir_ / "a" / f), Slurp(dir_ / "b" / f)) << f;
  }
  ASSERT_EQ(Run("--seed 10 -o " + Out("c") +
                " permute --mode sampled --sample-size 20 -m kp,tran " + corpus)
                .exit_code,
            0);
  EXPECT_NE(Slurp(dir_ / "a" / "coherence.csv"),
            Slurp(dir_ / "c" / "coherence.csv"));
}

TEST_F(CliTest, ManifestReplayIsByteIdentical) {
  ASSERT_EQ(Run("-o " + Out("a") + " permute -m all " +
                Data("synthetic/coherent50.conll"))
                .exit_code,
            0);
  Result replay =
      Run("--manifest " + Out("a/manifest.json") + " -o " + Out("b"));
  ASSERT_EQ(replay.exit_code, 0) << replay.err;
  for (const char *f : {"coherence.csv", "summary.csv", "manifest.json"}) {
    EXPECT_EQ(Slurp(dir_ / "a" / f), Slurp(dir_ / "b" / f)) << f;
  }
}

TEST_F(CliTest, TamperedManifestIsRejected) {
  ASSERT_EQ(
      Run("-o " + Out("a") + " score " + Data("john_mike.conll")).exit_code, 0);
  std::string m = Slurp(dir_ / "a" / "manifest.json");
  m.replace(m.find("\"max\""), 5, "\"sum\"");
  const std::string tampered = Write("tampered.json", m);
  Result r = Run("--manifest " + tampered + " -o " + Out("b"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("hash"), std::string::npos) << r.err;
}

TEST_F(CliTest, CorrelateLinearAndConstant) {
  const std::string linear = Write("linear.csv",
                                   "id,centering_score,conll_f1\n"
                                   "a,1,0.2\nb,2,0.4\nc,3,0.6\nd,4,0.8\n");
  Result r = Run("-o " + Out("c") + " correlate " + linear);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = nlohmann::json::parse(Slurp(dir_ / "c" / "correlation.json"));
  EXPECT_DOUBLE_EQ(j["a"]["pearson_r"].get<double>(), 1.0);
  EXPECT_LT(j["a"]["p_value"].get<double>(), 1e-12);
  EXPECT_TRUE(j.contains("manifest_hash"));

  const std::string flat = Write("flat.csv",
                                 "id,centering_score,conll_f1\n"
                                 "a,3,0.2\nb,3,0.4\nc,3,0.6\n");
  Result c = Run("-o " + Out("c") + " correlate " + flat);
  EXPECT_EQ(c.exit_code, 4);
  EXPECT_NE(c.err.find("centering_score"), std::string::npos) << c.err;

  const std::string broken = Write("broken.csv",
                                   "id,centering_score,conll_f1\n"
                                   "a,1,0.2\nb,oops,0.4\n");
  Result b = Run("-o " + Out("c") + " correlate " + broken);
  EXPECT_EQ(b.exit_code, 2);
  EXPECT_NE(b.err.find("broken.csv:3"), std::string::npos) << b.err;
}

TEST_F(CliTest, CorrelateBits) {
  const std::string linear = Write("linear.csv",
                                   "id,centering_score,conll_f1\n"
                                   "a,1,0.2\nb,2,0.4\nc,3,0.6\nd,4,0.8\n");
  ASSERT_EQ(Run("-o " + Out("c") + " correlate --bits " + linear).exit_code,
            0);
  auto j = nlohmann::json::parse(Slurp(dir_ / "c" / "correlation.json"));
  EXPECT_NEAR(j["a"]["mi"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["a"]["mi_unit"], "bits");
}

TEST_F(CliTest, RecencyBeatsVanillaThroughCorrelate) {
  Result fit = Run("-o " + Out("f") + " fit-recency --grid decay --gold " +
                   Data("synthetic/lag2_gold.conll") + " " +
                   Data("synthetic/lag2_variants.csv"));
  ASSERT_EQ(fit.exit_code, 0) << fit.err;
  Result r = Run("-o " + Out("c") + " correlate " + Out("f/fit_recency.csv") +
                 " --compare " + Out("f/fit_vanilla.csv"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = nlohmann::json::parse(Slurp(dir_ / "c" / "correlation.json"));
  EXPECT_GE(j["a"]["pearson_r"].get<double>(),
            j["b"]["pearson_r"].get<double>());
  EXPECT_TRUE(j.contains("fisher_z_p"));
  auto report = nlohmann::json::parse(Slurp(dir_ / "f" / "fit.json"));
  EXPECT_GT(report["best"]["forget"]["gamma"].get<double>(), 0.0);
}

TEST_F(CliTest, CorefEvalIdentity) {
  const std::string gold = Data("synthetic/coherent50.conll");
  Result r = Run("-o " + Out("e") + " coref-eval " + gold + " " + gold);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = nlohmann::json::parse(Slurp(dir_ / "e" / "coref.json"));
  EXPECT_DOUBLE_EQ(j["conll_f1"].get<double>(), 1.0);
  EXPECT_EQ(j["documents"].get<int>(), 50);
}

TEST_F(CliTest, InputsAreNotModified) {
  const std::string src = Data("john_mike.conll");
  const std::string before = Slurp(src);
  ASSERT_EQ(Run("-o " + Out("s") + " score " + src).exit_code, 0);
  EXPECT_EQ(Slurp(src), before);
}

}  // namespace
