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

#include "tweetaffect/augment.h"

#include <gtest/gtest.h>

#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "test_util.h"
#include "tweetaffect/error.h"

namespace tweetaffect {
namespace {

using ::tweetaffect::testing::TempDir;
using ::tweetaffect::testing::WriteText;

const AffectTarget kAnger(Dimension::kAnger, TaskKind::kRegression);

Dataset Sample(std::initializer_list<std::pair<const char*, double>> rows) {
  Dataset d(kAnger);
  int i = 0;
  for (const auto& [text, label] : rows) {
    d.Add({Preprocess(text, "t" + std::to_string(i++)), label, Origin::kGold});
  }
  return d;
}

DictionaryTranslator EnEs() {
  return DictionaryTranslator({{"i", "yo"},
                               {"am", "estoy"},
                               {"very", "muy"},
                               {"angry", "enojado"},
                               {"happy", "feliz"},
                               {"sad", "triste"}});
}

TEST(DictionaryTranslatorTest, TokenLookupOrder) {
  const DictionaryTranslator t = EnEs();
  EXPECT_EQ(t.TranslateToken("angry"), "enojado");
  EXPECT_EQ(t.TranslateToken("ANGRY"), "enojado");
  EXPECT_EQ(t.TranslateToken("(angry!!"), "(enojado!!");
  EXPECT_EQ(t.TranslateToken("zzz"), "zzz");
  EXPECT_EQ(t.Translate("I am very ANGRY!", "en", "es"), "yo estoy muy enojado!");
}

TEST(DictionaryTranslatorProperty, TokenCountPreserved) {
  const DictionaryTranslator t = EnEs();
  for (const char* text : {"", "a", "i  am\tsad", "very very happy :)", "@x http://y z"}) {
    const std::string out = t.Translate(text, "en", "es");
    std::size_t in_tokens = 0, out_tokens = 0;
    std::istringstream a(text), b(out);
    for (std::string w; a >> w;) ++in_tokens;
    for (std::string w; b >> w;) ++out_tokens;
    EXPECT_EQ(in_tokens, out_tokens) << text;
  }
}

TEST(DictionaryTranslatorTest, LoadsFile) {
  TempDir dir;
  WriteText(dir / "d.tsv", "# en-es\nhappy\tfeliz\n\nsad\ttriste\n");
  const DictionaryTranslator t = DictionaryTranslator::Load(dir / "d.tsv");
  EXPECT_EQ(t.mapping().size(), 2u);
  WriteText(dir / "bad.tsv", "happy feliz\n");
  EXPECT_THROW(DictionaryTranslator::Load(dir / "bad.tsv"), Error);
  EXPECT_THROW(DictionaryTranslator::Load(dir / "none.tsv"), Error);
}

TEST(IdentityTranslatorTest, ReturnsInput) {
  EXPECT_EQ(IdentityTranslator().Translate("¡Hola! 😀", "es", "es"), "¡Hola! 😀");
}

TEST(TranslateDatasetTest, IdentityReproducesTokensAndLabels) {
  const Dataset d = Sample({{"I am ANGRY!! @bob", 0.7}, {"so sad http://t.co/x", 0.2}});
  const TranslationOutcome out = TranslateDataset(d, IdentityTranslator());
  ASSERT_EQ(out.dataset.size(), d.size());
  EXPECT_EQ(out.skipped, 0u);
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(out.dataset[i].tweet.tokens, d[i].tweet.tokens);
    EXPECT_EQ(out.dataset[i].label, d[i].label);
    EXPECT_EQ(out.dataset[i].origin, Origin::kTranslated);
  }
}

TEST(TranslateDatasetTest, DictionaryTranslationAndWorkersKeepOrder) {
  Dataset d(kAnger);
  for (int i = 0; i < 40; ++i) {
    d.Add({Preprocess(i % 2 ? "very angry" : "i am sad", "id" + std::to_string(i)),
           i / 40.0, Origin::kGold});
  }
  TranslateOptions options;
  options.workers = 4;
  const TranslationOutcome out = TranslateDataset(d, EnEs(), options);
  ASSERT_EQ(out.dataset.size(), 40u);
  for (int i = 0; i < 40; ++i) {
    EXPECT_EQ(out.dataset[i].tweet.id, "id" + std::to_string(i));
    EXPECT_EQ(out.dataset[i].label, i / 40.0);
    EXPECT_EQ(out.dataset[i].tweet.JoinedTokens(), i % 2 ? "muy enojado" : "yo estoy triste");
  }
}

// Fails on texts containing "bad".
class FlakyTranslator : public Translator {
 public:
  std::string Translate(std::string_view text, std::string_view,
                        std::string_view) const override {
    if (text.find("bad") != std::string_view::npos) throw IoError("refused");
    return std::string(text);
  }
};

TEST(TranslateDatasetTest, SkipsFailuresUpToHalf) {
  const Dataset d = Sample({{"ok one", 0.1}, {"bad two", 0.2}, {"ok three", 0.3}});
  const TranslationOutcome out = TranslateDataset(d, FlakyTranslator());
  EXPECT_EQ(out.dataset.size(), 2u);
  EXPECT_EQ(out.skipped, 1u);
  ASSERT_EQ(out.failures.size(), 1u);
  EXPECT_NE(out.failures[0].find("t1"), std::string::npos);

  const Dataset mostly_bad = Sample({{"bad", 0.1}, {"bad too", 0.2}, {"ok", 0.3}});
  try {
    TranslateDataset(mostly_bad, FlakyTranslator());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kComputation);
  }
}

TEST(MergeTrainingTest, GoldFirstOriginsKept) {
  const Dataset gold = Sample({{"a", 0.1}, {"b", 0.2}});
  const Dataset translated = TranslateDataset(gold, IdentityTranslator()).dataset;
  const Dataset merged = MergeTraining(gold, translated);
  ASSERT_EQ(merged.size(), 4u);
  EXPECT_EQ(merged[0].origin, Origin::kGold);
  EXPECT_EQ(merged[1].origin, Origin::kGold);
  EXPECT_EQ(merged[2].origin, Origin::kTranslated);
  EXPECT_EQ(merged[3].tweet.id, "t1");
  Dataset joy(AffectTarget(Dimension::kJoy, TaskKind::kRegression));
  EXPECT_THROW(MergeTraining(gold, joy), Error);
}

TEST(TranslateLexiconTest, CollisionsKeepLargestMagnitude) {
  Lexicon lex("en");
  lex.Set("mad", "anger", 0.4);
  lex.Set("angry", "anger", -0.9);
  lex.Set("furious", "anger", 0.9);
  lex.Set("happy", "joy", 0.5);
  const DictionaryTranslator t({{"mad", "enojado"},
                                {"angry", "enojado"},
                                {"furious", "enojado"},
                                {"happy", "feliz"}});
  const LexiconTranslation out = TranslateLexicon(lex, t);
  EXPECT_EQ(out.lexicon.size(), 2u);
  // "angry" precedes "furious" in token order and wins the magnitude tie.
  EXPECT_EQ(out.lexicon.Find("enojado")->at("anger"), -0.9);
  EXPECT_EQ(out.lexicon.Find("feliz")->at("joy"), 0.5);
}

// Local endpoint speaking the translator protocol.
class TranslationServer {
 public:
  explicit TranslationServer(int failures_before_success)
      : remaining_failures_(failures_before_success) {
    server_.Post(R"(/api/([a-z]+)-([a-z]+))",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   ++requests_;
                   if (remaining_failures_-- > 0) {
                     res.status = 503;
                     return;
                   }
                   res.set_content("[" + req.matches[1].str() + ">" +
                                       req.matches[2].str() + "] " + req.body,
                                   "text/plain");
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~TranslationServer() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/api"; }
  int requests() const { return requests_; }

 private:
  httplib::Server server_;
  std::atomic<int> remaining_failures_;
  std::atomic<int> requests_{0};
  int port_ = 0;
  std::thread thread_;
};

TEST(HttpTranslatorTest, PostsTextAndReturnsBody) {
  TranslationServer server(0);
  const HttpTranslator t(server.url());
  EXPECT_EQ(t.Translate("¡hola!", "es", "en"), "[es>en] ¡hola!");
  EXPECT_EQ(server.requests(), 1);
}

TEST(HttpTranslatorTest, RetriesThenSucceeds) {
  TranslationServer server(2);
  const HttpTranslator t(server.url(), 2);
  EXPECT_EQ(t.Translate("x", "en", "es"), "[en>es] x");
  EXPECT_EQ(server.requests(), 3);
}

TEST(HttpTranslatorTest, ExhaustedRetriesRaiseIoError) {
  TranslationServer server(10);
  const HttpTranslator t(server.url(), 1, std::chrono::milliseconds(2000));
  try {
    t.Translate("x", "en", "es");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
    EXPECT_NE(std::string(e.what()).find("503"), std::string::npos);
  }
  EXPECT_EQ(server.requests(), 2);
}

TEST(HttpTranslatorTest, RejectsUnsupportedUrls) {
  EXPECT_THROW(HttpTranslator("https://example.org"), Error);
  EXPECT_THROW(HttpTranslator("http://"), Error);
  EXPECT_THROW(HttpTranslator("http://h", -1), Error);
}

TEST(HttpTranslatorTest, TranslatesDatasetConcurrently) {
  TranslationServer server(0);
  const HttpTranslator t(server.url());
  Dataset d(kAnger);
  for (int i = 0; i < 12; ++i) {
    d.Add({Preprocess("w" + std::to_string(i), "id" + std::to_string(i)), 0.5, Origin::kGold});
  }
  TranslateOptions options;
  options.workers = 3;
  const TranslationOutcome out = TranslateDataset(d, t, options);
  ASSERT_EQ(out.dataset.size(), 12u);
  for (int i = 0; i < 12; ++i) {
    EXPECT_EQ(out.dataset[i].tweet.JoinedTokens(), "[ en>es ] w" + std::to_string(i));
  }
}

}  // namespace
}  // namespace tweetaffect
