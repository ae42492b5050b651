//
// Copyright 2026 The tweetaffect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <gtest/gtest.h>

#include <chrono>
#include <regex>

#include "test_util.h"

namespace tweetaffect {
namespace {

using ::tweetaffect::testing::CommandResult;
using ::tweetaffect::testing::Quote;
using ::tweetaffect::testing::ReadText;
using ::tweetaffect::testing::RunCommand;
using ::tweetaffect::testing::TempDir;
using ::tweetaffect::testing::WriteText;

const std::filesystem::path kCli = TWEETAFFECT_CLI;
const std::filesystem::path kSmoke = TWEETAFFECT_SMOKE_DIR;
const std::filesystem::path kData = TWEETAFFECT_TEST_DATA_DIR;

CommandResult Cli(const std::string& args) { return RunCommand(Quote(kCli) + " " + args); }

class SubcommandHelpTest : public ::testing::TestWithParam<const char*> {};

TEST_P(SubcommandHelpTest, HelpExitsZero) {
  const CommandResult r = Cli(std::string(GetParam()) + " --help");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("Usage:"), std::string::npos);
}

INSTANTIATE_TEST_SUITE_P(AllSubcommands, SubcommandHelpTest,
                         ::testing::Values("preprocess", "train", "predict", "score", "run",
                                           "augment", "selftrain", "mine-words", "ensemble",
                                           "select-lexicons", "search-params", "synth",
                                           "defaults"),
                         [](const auto& info) {
                           return std::regex_replace(info.param, std::regex("-"), "_");
                         });

TEST(CliTest, TopLevelHelpAndUsageErrors) {
  EXPECT_EQ(Cli("--help").exit_code, 0);
  EXPECT_EQ(Cli("--help-all").exit_code, 0);
  EXPECT_EQ(Cli("").exit_code, 2);
  EXPECT_EQ(Cli("train --no-such-flag").exit_code, 2);
  EXPECT_EQ(Cli("defaults --task EI-Reg-surprise").exit_code, 2);
}

TEST(CliTest, ExitCodesByErrorKind) {
  TempDir dir;
  WriteText(dir / "gold.tsv", "d1\tx\tanger\t0.1\nd2\ty\tanger\t0.4\n");
  WriteText(dir / "flat.tsv", "d1\t0.5\nd2\t0.5\n");
  const CommandResult flat = Cli("score --task EI-Reg-anger --gold " + Quote(dir / "gold.tsv") +
                                 " --predictions flat=" + Quote(dir / "flat.tsv"));
  EXPECT_EQ(flat.exit_code, 1) << flat.err;

  const CommandResult missing = Cli("train --task EI-Reg-anger --train " +
                                    Quote(dir / "missing.tsv") + " --embeddings " +
                                    Quote(kSmoke / "embeddings.txt") + " --output " +
                                    Quote(dir / "m.json"));
  EXPECT_EQ(missing.exit_code, 3) << missing.err;
  EXPECT_NE(missing.err.find("missing.tsv"), std::string::npos);
}

TEST(CliTest, PreprocessMalformedRowNamesLine) {
  TempDir dir;
  WriteText(dir / "bad.tsv", "1\tok\tanger\t0.1\n2\tbroken\tanger\n");
  const CommandResult r = Cli("preprocess --format tsv --input " + Quote(dir / "bad.tsv") +
                              " --output " + Quote(dir / "out.tsv"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("bad.tsv:2:"), std::string::npos) << r.err;
}

TEST(CliTest, PreprocessIsIdempotent) {
  TempDir dir;
  WriteText(dir / "in.tsv",
            "1\t@ana ¡Qué BUEN día!! http://t.co/x 😀😀\tjoy\t0.8\n"
            "2\t#Lunes :( www.x.com\tjoy\t0.2\n");
  const std::string once = "preprocess --format tsv --input " + Quote(dir / "in.tsv") +
                           " --output " + Quote(dir / "once.tsv");
  ASSERT_EQ(Cli(once).exit_code, 0);
  ASSERT_EQ(Cli("preprocess --format tsv --input " + Quote(dir / "once.tsv") + " --output " +
                Quote(dir / "twice.tsv"))
                .exit_code,
            0);
  EXPECT_EQ(ReadText(dir / "once.tsv"), ReadText(dir / "twice.tsv"));
  EXPECT_NE(ReadText(dir / "once.tsv").find("@username ¡ qué buen día ! ! URL 😀 😀"),
            std::string::npos)
      << ReadText(dir / "once.tsv");
}

TEST(CliTest, EnsembleFixture) {
  const std::filesystem::path f = kData / "ensemble";
  const CommandResult r = Cli("ensemble --task EI-Reg-anger --manifest " +
                              Quote(f / "manifest.tsv") + " --gold " + Quote(f / "dev.tsv"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("remove A: dev 0.9970 accepted"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("remove B: dev 0.9606 rejected"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("kept: B C"), std::string::npos) << r.out;
}

TEST(CliTest, SelfTrainBannerShowsTaskSettings) {
  TempDir dir;
  WriteText(dir / "fear.tsv",
            std::regex_replace(ReadText(kSmoke / "train.tsv"), std::regex("\tanger\t"), "\tfear\t"));
  const CommandResult r =
      Cli("selftrain --task EI-Reg-fear --train " + Quote(dir / "fear.tsv") + " --silver " +
          Quote(kSmoke / "silver.tsv") + " --embeddings " + Quote(kSmoke / "embeddings.txt") +
          " --model feed_forward --layers 8 --epochs 5 --agreement-models 2 --output " +
          Quote(dir / "aug.tsv"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string all = r.out + r.err;
  EXPECT_NE(all.find("threshold 0.1, max added 1500, agreement models 2"), std::string::npos)
      << all;
  EXPECT_NE(all.find("feed_forward threshold 0.1 added 1500; lstm threshold 0.05 added 1500"),
            std::string::npos)
      << all;
  EXPECT_TRUE(std::filesystem::exists(dir / "aug.tsv"));
}

TEST(CliTest, SearchParamsSingleSpec) {
  const CommandResult r = Cli("search-params --task EI-Reg-anger --train " +
                              Quote(kSmoke / "train.tsv") + " --embeddings " +
                              Quote(kSmoke / "embeddings.txt") + " --epsilons 0.05");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("best: kernel_svr(epsilon=0.05"), std::string::npos) << r.out;
}

TEST(CliTest, DefaultsPrintsReferenceRow) {
  const CommandResult r = Cli("defaults --task V-Oc --json");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("0.09"), std::string::npos);
  EXPECT_NE(r.out.find("100"), std::string::npos);
}

TEST(CliTest, RunReportsMissingLexiconPath) {
  TempDir dir;
  std::string conf = ReadText(kSmoke / "experiment.conf");
  conf = std::regex_replace(conf, std::regex("synthlex\\.tsv"), "absent-lexicon.tsv");
  for (const char* f : {"train.tsv", "dev.tsv", "test.tsv", "foreign.tsv", "silver.tsv",
                        "embeddings.txt", "noise.tsv", "dictionary.tsv", "emotion_words.tsv"}) {
    std::filesystem::copy_file(kSmoke / f, dir / f);
  }
  WriteText(dir / "experiment.conf", conf);
  const CommandResult r = Cli("run --quiet --config " + Quote(dir / "experiment.conf"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("absent-lexicon.tsv"), std::string::npos) << r.err;
  EXPECT_FALSE(std::filesystem::exists(dir / "output" / "report.tsv"));
}

TEST(CliTest, SmokeRunUnderOneMinute) {
  TempDir dir;
  const auto start = std::chrono::steady_clock::now();
  const CommandResult r = Cli("run --config " + Quote(kSmoke / "experiment.conf") +
                              " --output " + Quote(dir / "out"));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_LT(seconds, 60.0);
  EXPECT_NE(r.out.find("ensemble"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "report.tsv"));
}

}  // namespace
}  // namespace tweetaffect
