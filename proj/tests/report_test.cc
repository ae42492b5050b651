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

#include "tweetaffect/report.h"

#include <gtest/gtest.h>

#include "tweetaffect/error.h"

namespace tweetaffect {
namespace {

ScoreReport Sample() {
  ScoreReport r;
  r.Add({"EI-Reg-anger", "ff-r", 0.7123456789, 1.0 / 3.0});
  r.Add({"EI-Reg-anger", "svr-r", -0.25, std::nullopt});
  r.Add({"V-Reg", "ensemble", 0.8, 0.79});
  return r;
}

TEST(ScoreReportTest, TsvRoundTripIsExact) {
  const ScoreReport r = Sample();
  const std::string tsv = r.ToTsv();
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "task\tmodel\tmetric\tdev\ttest");
  EXPECT_NE(tsv.find("svr-r\tpearson\t-0.25\t-\n"), std::string::npos);
  EXPECT_EQ(ScoreReport::FromTsv(tsv), r);
  EXPECT_EQ(ScoreReport::FromTsv(tsv).ToTsv(), tsv);
}

TEST(ScoreReportTest, JsonRoundTrip) {
  const ScoreReport r = Sample();
  const nlohmann::json j = r.ToJson();
  EXPECT_EQ(j["metric"], "pearson");
  EXPECT_TRUE(j["rows"][1]["test"].is_null());
  EXPECT_EQ(ScoreReport::FromJson(j), r);
}

TEST(ScoreReportTest, TextTableUsesFourDecimals) {
  const std::string text = Sample().ToText();
  EXPECT_NE(text.find("0.7123"), std::string::npos);
  EXPECT_NE(text.find("0.3333"), std::string::npos);
  EXPECT_EQ(text.find("0.71234"), std::string::npos);
}

TEST(ScoreReportTest, RejectsDuplicatesAndOutOfRange) {
  ScoreReport r = Sample();
  EXPECT_THROW(r.Add({"V-Reg", "ensemble", 0.1, 0.1}), Error);
  EXPECT_THROW(r.Add({"V-Reg", "x", 1.5, std::nullopt}), Error);
  EXPECT_NE(r.Find("V-Reg", "ensemble"), nullptr);
  EXPECT_EQ(r.Find("V-Reg", "nope"), nullptr);
  EXPECT_THROW(ScoreReport::FromTsv("task\tmodel\tmetric\tdev\ttest\nA\tb\tpearson\tx\t-\n"), Error);
  EXPECT_THROW(ScoreReport::FromTsv("A\tb\tpearson\t0.1\t-\n"), Error);
}

}  // namespace
}  // namespace tweetaffect
