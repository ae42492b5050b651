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

#ifndef TWEETAFFECT_REPORT_H_
#define TWEETAFFECT_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"

namespace tweetaffect {

struct ScoreRow {
  std::string task;
  std::string model;
  std::optional<double> dev;
  std::optional<double> test;  // absent without a test split
  bool operator==(const ScoreRow&) const = default;
};

// Per-task, per-model dev and test scores under one metric.
class ScoreReport {
 public:
  explicit ScoreReport(std::string metric = "pearson")
      : metric_(std::move(metric)) {}

  // Throws UsageError on a repeated (task, model) key or a score outside
  // [-1, 1].
  void Add(ScoreRow row);
  const ScoreRow* Find(std::string_view task, std::string_view model) const;

  const std::string& metric() const { return metric_; }
  const std::vector<ScoreRow>& rows() const { return rows_; }

  // Header `task model metric dev test`, one row per entry, missing scores
  // as "-". Scores use the shortest round-trip decimal form.
  std::string ToTsv() const;
  static ScoreReport FromTsv(std::string_view text,
                             std::string_view origin = "<report>");
  // Aligned columns with scores to four decimals.
  std::string ToText() const;
  nlohmann::json ToJson() const;
  static ScoreReport FromJson(const nlohmann::json& json);

  bool operator==(const ScoreReport&) const = default;

 private:
  std::string metric_;
  std::vector<ScoreRow> rows_;
};

}  // namespace tweetaffect

#endif  // TWEETAFFECT_REPORT_H_
