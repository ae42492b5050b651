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

#ifndef TWEETAFFECT_TEXT_IO_H_
#define TWEETAFFECT_TEXT_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Line-oriented file helpers shared by every TSV reader and writer.
namespace tweetaffect::text_io {

// Reads all lines, stripping '\n' and a trailing '\r'. Throws IoError.
std::vector<std::string> ReadLines(const std::filesystem::path& path);

// Writes atomically enough for batch use: truncates then writes. Creates
// parent directories. Throws IoError.
void WriteFile(const std::filesystem::path& path, std::string_view contents);

std::vector<std::string_view> Split(std::string_view text, char separator);
std::vector<std::string_view> SplitWhitespace(std::string_view text);
std::string_view Trim(std::string_view text);

std::optional<double> ParseDouble(std::string_view text);
std::optional<long long> ParseInt(std::string_view text);

// Shortest round-trip representation ("%.17g" then trimmed).
std::string FormatDouble(double value);
std::string FormatFixed(double value, int decimals);

}  // namespace tweetaffect::text_io

#endif  // TWEETAFFECT_TEXT_IO_H_
