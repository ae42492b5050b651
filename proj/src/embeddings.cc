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

#include "tweetaffect/embeddings.h"

#include <cmath>
#include <sstream>

#include "tweetaffect/error.h"
#include "tweetaffect/text_io.h"

namespace tweetaffect {

FeatureVector ConcatFeatures(std::span<const FeatureVector> blocks) {
  if (blocks.empty()) throw UsageError("concat_features needs at least one block");
  FeatureVector out;
  for (const FeatureVector& block : blocks) {
    out.values.insert(out.values.end(), block.values.begin(),
                      block.values.end());
    out.layout.insert(out.layout.end(), block.layout.begin(),
                      block.layout.end());
  }
  return out;
}

EmbeddingTable::EmbeddingTable(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw UsageError("embedding dimension must be positive");
}

void EmbeddingTable::Add(std::string token, std::vector<double> vector) {
  if (vector.size() != dim_) {
    throw UsageError("vector for '" + token + "' has length " +
                     std::to_string(vector.size()) + ", expected " +
                     std::to_string(dim_));
  }
  for (double v : vector) {
    if (!std::isfinite(v)) {
      throw UsageError("non-finite component in vector for '" + token + "'");
    }
  }
  const auto [it, inserted] = index_.emplace(token, tokens_.size());
  if (!inserted) {
    std::copy(vector.begin(), vector.end(),
              values_.begin() + static_cast<std::ptrdiff_t>(it->second * dim_));
    return;
  }
  tokens_.push_back(std::move(token));
  values_.insert(values_.end(), vector.begin(), vector.end());
}

const double* EmbeddingTable::Find(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end()) return nullptr;
  return values_.data() + it->second * dim_;
}

EmbeddingTable LoadEmbeddings(
    const std::filesystem::path& path,
    const std::optional<std::unordered_set<std::string>>& vocab) {
  const std::vector<std::string> lines = text_io::ReadLines(path);
  const std::string name = path.string();
  std::optional<EmbeddingTable> table;
  std::size_t first = 0;
  while (first < lines.size() && text_io::Trim(lines[first]).empty()) ++first;
  if (first < lines.size()) {
    const auto fields = text_io::SplitWhitespace(lines[first]);
    if (fields.size() == 2 && text_io::ParseInt(fields[0]) &&
        text_io::ParseInt(fields[1])) {
      ++first;
    }
  }
  std::size_t rows = 0;
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (text_io::Trim(lines[i]).empty()) continue;
    const auto fields = text_io::SplitWhitespace(lines[i]);
    if (fields.size() < 2) {
      throw ParseError(name, i + 1, "expected a word followed by components");
    }
    const std::size_t width = fields.size() - 1;
    if (!table) table.emplace(width);
    if (width != table->dim()) {
      throw ParseError(name, i + 1,
                       "row has " + std::to_string(width) +
                           " components, expected " +
                           std::to_string(table->dim()));
    }
    ++rows;
    std::string token(fields[0]);
    if (vocab && !vocab->contains(token)) continue;
    std::vector<double> vector(width);
    for (std::size_t k = 0; k < width; ++k) {
      const auto value = text_io::ParseDouble(fields[k + 1]);
      if (!value) {
        throw ParseError(name, i + 1,
                         "component '" + std::string(fields[k + 1]) +
                             "' is not a finite number");
      }
      vector[k] = *value;
    }
    table->Add(std::move(token), std::move(vector));
  }
  if (rows == 0) throw ParseError(name, lines.size(), "no embedding rows");
  return std::move(*table);
}

void SaveEmbeddings(const EmbeddingTable& table,
                    const std::filesystem::path& path) {
  std::ostringstream out;
  out << table.size() << ' ' << table.dim() << '\n';
  for (std::size_t i = 0; i < table.tokens().size(); ++i) {
    out << table.tokens()[i];
    for (double v : table.Vector(i)) out << ' ' << text_io::FormatDouble(v);
    out << '\n';
  }
  text_io::WriteFile(path, out.str());
}

std::vector<double> EmbedTweet(const Tweet& tweet, const EmbeddingTable& table) {
  std::vector<double> mean(table.dim(), 0.0);
  std::size_t found = 0;
  for (const std::string& token : tweet.tokens) {
    const double* vector = table.Find(token);
    if (vector == nullptr) continue;
    for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += vector[k];
    ++found;
  }
  if (found > 0) {
    for (double& v : mean) v /= static_cast<double>(found);
  }
  return mean;
}

}  // namespace tweetaffect
