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

#ifndef TWEETAFFECT_CONFIG_H_
#define TWEETAFFECT_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tweetaffect {

// Flat `section.key = value` configuration.
//
//   # comment
//   task.EI-Reg-anger.svm.epsilon = 0.01
//
// Keys are made of letters, digits and `._-`; a key may appear once. Values
// run to the end of the line with surrounding blanks trimmed. Entries keep
// their file order, and Serialize() writes them back in that order so that
// Parse(Serialize(c)) == c.
class Config {
 public:
  Config() = default;

  static Config Parse(std::string_view text, std::string_view origin = "<config>");
  static Config Load(const std::filesystem::path& path);
  std::string Serialize() const;

  bool Has(std::string_view key) const;
  // Inserts or replaces, keeping the position of an existing key.
  void Set(std::string_view key, std::string value);

  std::optional<std::string> Find(std::string_view key) const;
  // The typed getters throw UsageError naming the key when it is missing or
  // does not parse.
  std::string GetString(std::string_view key) const;
  double GetDouble(std::string_view key) const;
  long long GetInt(std::string_view key) const;
  bool GetBool(std::string_view key) const;
  // Comma-separated positive integers, optionally wrapped in parentheses:
  // "600,200" or "(600, 200)".
  std::vector<std::size_t> GetSizeList(std::string_view key) const;
  // Comma-separated names; empty items dropped.
  std::vector<std::string> GetList(std::string_view key) const;

  std::string GetString(std::string_view key, std::string fallback) const;
  double GetDouble(std::string_view key, double fallback) const;
  long long GetInt(std::string_view key, long long fallback) const;
  bool GetBool(std::string_view key, bool fallback) const;

  // Keys beginning with `prefix`, in file order.
  std::vector<std::string> KeysWithPrefix(std::string_view prefix) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

  bool operator==(const Config&) const = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::vector<std::size_t> ParseSizeList(std::string_view text);
std::vector<std::string> ParseNameList(std::string_view text);
std::string FormatSizeList(const std::vector<std::size_t>& values);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_CONFIG_H_
