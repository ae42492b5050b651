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

#include <algorithm>
#include <cmath>

#include "tweetaffect/error.h"
#include "tweetaffect/text_io.h"

namespace tweetaffect {
namespace {

std::string Cell(const std::optional<double>& value) {
  return value ? text_io::FormatDouble(*value) : std::string("-");
}

std::string Fixed(const std::optional<double>& value) {
  return value ? text_io::FormatFixed(*value, 4) : std::string("-");
}

std::optional<double> ParseCell(std::string_view text, std::string_view origin,
                                std::size_t line) {
  if (text == "-") return std::nullopt;
  const auto value = text_io::ParseDouble(text);
  if (!value) {
    throw ParseError(origin, line, "bad score '" + std::string(text) + "'");
  }
  return value;
}

void CheckScore(const std::optional<double>& score, const ScoreRow& row) {
  if (score && !(*score >= -1.0 && *score <= 1.0)) {
    throw UsageError("score for " + row.task + "/" + row.model +
                     " lies outside [-1, 1]");
  }
}

}  // namespace

void ScoreReport::Add(ScoreRow row) {
  if (Find(row.task, row.model) != nullptr) {
    throw UsageError("duplicate report row " + row.task + "/" + row.model);
  }
  CheckScore(row.dev, row);
  CheckScore(row.test, row);
  rows_.push_back(std::move(row));
}

const ScoreRow* ScoreReport::Find(std::string_view task,
                                  std::string_view model) const {
  for (const ScoreRow& row : rows_) {
    if (row.task == task && row.model == model) return &row;
  }
  return nullptr;
}

std::string ScoreReport::ToTsv() const {
  std::string out = "task\tmodel\tmetric\tdev\ttest\n";
  for (const ScoreRow& row : rows_) {
    out += row.task + "\t" + row.model + "\t" + metric_ + "\t" + Cell(row.dev) +
           "\t" + Cell(row.test) + "\n";
  }
  return out;
}

ScoreReport ScoreReport::FromTsv(std::string_view text, std::string_view origin) {
  std::optional<ScoreReport> report;
  std::size_t line_number = 0;
  for (std::string_view line : text_io::Split(text, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text_io::Trim(line).empty()) continue;
    const auto fields = text_io::Split(line, '\t');
    if (fields.size() != 5) {
      throw ParseError(origin, line_number, "expected 5 tab-separated fields");
    }
    if (line_number == 1) {
      if (fields[0] != "task") throw ParseError(origin, 1, "missing header");
      continue;
    }
    if (!report) report.emplace(std::string(fields[2]));
    if (fields[2] != report->metric()) {
      throw ParseError(origin, line_number, "mixed metrics in one report");
    }
    try {
      report->Add(ScoreRow{std::string(fields[0]), std::string(fields[1]),
                           ParseCell(fields[3], origin, line_number),
                           ParseCell(fields[4], origin, line_number)});
    } catch (const Error& e) {
      if (std::string_view(e.what()).starts_with(origin)) throw;
      throw ParseError(origin, line_number, e.what());
    }
  }
  return report ? *report : ScoreReport();
}

std::string ScoreReport::ToText() const {
  std::vector<std::vector<std::string>> cells = {{"task", "model", "dev", "test"}};
  for (const ScoreRow& row : rows_) {
    cells.push_back({row.task, row.model, Fixed(row.dev), Fixed(row.test)});
  }
  std::vector<std::size_t> width(4, 0);
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out = "metric: " + metric_ + "\n";
  for (const auto& r : cells) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      const std::string& cell = r[c];
      const std::string pad(width[c] - cell.size(), ' ');
      // Names left-aligned, scores right-aligned.
      line += c < 2 ? cell + pad : pad + cell;
      if (c + 1 < 4) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

nlohmann::json ScoreReport::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const ScoreRow& row : rows_) {
    nlohmann::json j{{"task", row.task}, {"model", row.model}};
    j["dev"] = row.dev ? nlohmann::json(*row.dev) : nlohmann::json(nullptr);
    j["test"] = row.test ? nlohmann::json(*row.test) : nlohmann::json(nullptr);
    rows.push_back(std::move(j));
  }
  return {{"metric", metric_}, {"rows", rows}};
}

ScoreReport ScoreReport::FromJson(const nlohmann::json& json) {
  try {
    ScoreReport report(json.at("metric").get<std::string>());
    for (const auto& j : json.at("rows")) {
      ScoreRow row{j.at("task").get<std::string>(),
                   j.at("model").get<std::string>(), std::nullopt, std::nullopt};
      if (!j.at("dev").is_null()) row.dev = j.at("dev").get<double>();
      if (!j.at("test").is_null()) row.test = j.at("test").get<double>();
      report.Add(std::move(row));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace tweetaffect
