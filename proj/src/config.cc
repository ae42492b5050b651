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

#include "tweetaffect/config.h"

#include <algorithm>

#include "tweetaffect/error.h"
#include "tweetaffect/text_io.h"

namespace tweetaffect {
namespace {

bool ValidKey(std::string_view key) {
  if (key.empty()) return false;
  return std::all_of(key.begin(), key.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
  });
}

Error BadValue(std::string_view key, std::string_view value,
               std::string_view expected) {
  return UsageError("config key '" + std::string(key) + "': expected " +
                    std::string(expected) + ", got '" + std::string(value) +
                    "'");
}

}  // namespace

Config Config::Parse(std::string_view text, std::string_view origin) {
  Config config;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_number;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view trimmed = text_io::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t eq = trimmed.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(origin, line_number, "expected 'key = value'");
    }
    const std::string_view key = text_io::Trim(trimmed.substr(0, eq));
    const std::string_view value = text_io::Trim(trimmed.substr(eq + 1));
    if (!ValidKey(key)) {
      throw ParseError(origin, line_number,
                       "invalid key '" + std::string(key) + "'");
    }
    if (config.Has(key)) {
      throw ParseError(origin, line_number,
                       "duplicate key '" + std::string(key) + "'");
    }
    config.entries_.emplace_back(std::string(key), std::string(value));
    if (end == text.size()) break;
  }
  return config;
}

Config Config::Load(const std::filesystem::path& path) {
  std::string text;
  for (const std::string& line : text_io::ReadLines(path)) {
    text += line;
    text += '\n';
  }
  return Parse(text, path.string());
}

std::string Config::Serialize() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  return out;
}

bool Config::Has(std::string_view key) const { return Find(key).has_value(); }

void Config::Set(std::string_view key, std::string value) {
  if (!ValidKey(key)) throw UsageError("invalid config key '" + std::string(key) + "'");
  if (value.find('\n') != std::string::npos) {
    throw UsageError("config values cannot span lines");
  }
  value = std::string(text_io::Trim(value));
  for (auto& entry : entries_) {
    if (entry.first == key) {
      entry.second = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::string(key), std::move(value));
}

std::optional<std::string> Config::Find(std::string_view key) const {
  for (const auto& entry : entries_) {
    if (entry.first == key) return entry.second;
  }
  return std::nullopt;
}

std::string Config::GetString(std::string_view key) const {
  std::optional<std::string> value = Find(key);
  if (!value) throw UsageError("missing config key '" + std::string(key) + "'");
  return *value;
}

double Config::GetDouble(std::string_view key) const {
  const std::string value = GetString(key);
  const auto parsed = text_io::ParseDouble(value);
  if (!parsed) throw BadValue(key, value, "a number");
  return *parsed;
}

long long Config::GetInt(std::string_view key) const {
  const std::string value = GetString(key);
  const auto parsed = text_io::ParseInt(value);
  if (!parsed) throw BadValue(key, value, "an integer");
  return *parsed;
}

bool Config::GetBool(std::string_view key) const {
  const std::string value = GetString(key);
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw BadValue(key, value, "true or false");
}

std::vector<std::size_t> Config::GetSizeList(std::string_view key) const {
  const std::string value = GetString(key);
  try {
    return ParseSizeList(value);
  } catch (const Error&) {
    throw BadValue(key, value, "a list of positive integers");
  }
}

std::vector<std::string> Config::GetList(std::string_view key) const {
  return ParseNameList(GetString(key));
}

std::string Config::GetString(std::string_view key, std::string fallback) const {
  std::optional<std::string> value = Find(key);
  return value ? *value : fallback;
}

double Config::GetDouble(std::string_view key, double fallback) const {
  return Has(key) ? GetDouble(key) : fallback;
}

long long Config::GetInt(std::string_view key, long long fallback) const {
  return Has(key) ? GetInt(key) : fallback;
}

bool Config::GetBool(std::string_view key, bool fallback) const {
  return Has(key) ? GetBool(key) : fallback;
}

std::vector<std::string> Config::KeysWithPrefix(std::string_view prefix) const {
  std::vector<std::string> keys;
  for (const auto& entry : entries_) {
    if (entry.first.starts_with(prefix)) keys.push_back(entry.first);
  }
  return keys;
}

std::vector<std::size_t> ParseSizeList(std::string_view text) {
  text = text_io::Trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::size_t> values;
  for (std::string_view item : text_io::Split(text, ',')) {
    const auto parsed = text_io::ParseInt(text_io::Trim(item));
    if (!parsed || *parsed <= 0) {
      throw UsageError("bad list item '" + std::string(item) + "'");
    }
    values.push_back(static_cast<std::size_t>(*parsed));
  }
  if (values.empty()) throw UsageError("empty list");
  return values;
}

std::vector<std::string> ParseNameList(std::string_view text) {
  std::vector<std::string> names;
  for (std::string_view item : text_io::Split(text, ',')) {
    const std::string_view trimmed = text_io::Trim(item);
    if (!trimmed.empty()) names.emplace_back(trimmed);
  }
  return names;
}

std::string FormatSizeList(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace tweetaffect
